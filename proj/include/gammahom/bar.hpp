#pragma once

#include "gammahom/chain.hpp"
#include "gammahom/module.hpp"

namespace gammahom {

// Gamma-orbit structure on n-tuples over G. Tuple index is the mixed-radix
// number with the first coordinate most significant, so lexicographic order
// on tuples is numeric order on indices and orbit reps are lex-minimal.
struct TupleOrbits {
    std::size_t group_order = 1;
    std::size_t degree = 0;
    std::vector<std::size_t> rep_of;            // tuple -> index of its orbit
    std::vector<std::size_t> reps;              // orbit -> representative tuple
    std::vector<unsigned> witness;              // tuple t -> gamma with gamma.rep = t
    std::vector<std::vector<unsigned>> stabilizer;  // orbit -> stabilizer of the rep

    std::size_t orbit_count() const { return reps.size(); }
};

TupleOrbits tuple_orbits(const GammaGroup& gg, std::size_t degree);

std::vector<unsigned> decode_tuple(std::size_t index, std::size_t degree, std::size_t base);
std::size_t encode_tuple(const std::vector<unsigned>& t, std::size_t base);

// The coinvariant bar complex: C_n = (A ox Z[G^n])_Gamma with
// d(a ox [g1|...|gn]) = (g1^{-1} a) ox [g2|...|gn]
//                       + sum_i (-1)^i a ox [g1|...|g_i g_{i+1}|...|gn]
//                       + (-1)^n a ox [g1|...|g_{n-1}].
// Generators in degree n are (orbit, coefficient-generator) pairs.
struct BarComplexGamma {
    GammaGroup gg;
    EquivariantModule coeff;
    std::size_t max_degree = 0;
    ChainComplexZ complex;
    std::vector<TupleOrbits> orbits;  // per degree

    AbelianInvariants homology(std::size_t n) const { return complex.homology(n); }
};

BarComplexGamma build_bar_complex(const GammaGroup& gg, const EquivariantModule& coeff,
                                  std::size_t max_degree, std::size_t budget = 50000);

// Rational version: per-orbit coefficient blocks are quotient spaces.
ChainComplexQ build_bar_complex_q(const GammaGroup& gg, const EquivariantModule& coeff,
                                  std::size_t max_degree, std::size_t budget = 50000);

// H_n^Gamma(G, A); builds degrees up to n+1.
AbelianInvariants homology_hn_gamma(const GammaGroup& gg, const EquivariantModule& coeff,
                                    std::size_t n, std::size_t budget = 50000);

// The equivariant cochain complex C^n_Gamma(G, A) of Gamma-maps G^n -> A,
// realized on orbit representatives: the component at an orbit is the
// subgroup of A fixed by the representative's stabilizer.
struct CochainComplexGamma {
    GammaGroup gg;
    EquivariantModule coeff;
    std::size_t max_degree = 0;
    std::vector<FPAbelianGroup> groups;       // C^0 .. C^N
    std::vector<IntMat> delta;                // delta[n] : C^n -> C^{n+1}, n < N
    std::vector<TupleOrbits> orbits;          // per degree
    std::vector<std::vector<IntMat>> component_inclusion;  // per degree, per orbit: into A
    std::vector<std::vector<std::size_t>> component_offset;  // generator offset per orbit

    AbelianInvariants cohomology(std::size_t n) const;
    std::size_t generators(std::size_t n) const { return groups[n].n_generators; }
};

CochainComplexGamma build_cochain_complex(const GammaGroup& gg, const EquivariantModule& coeff,
                                          std::size_t max_degree, std::size_t budget = 50000);

// H^n_Gamma(G, A); builds degrees up to n+1.
AbelianInvariants cohomology_hn_gamma(const GammaGroup& gg, const EquivariantModule& coeff,
                                      std::size_t n, std::size_t budget = 50000);

// Der_Gamma(G, A) = ker(delta^1).
FPAbelianGroup gamma_derivations(const GammaGroup& gg, const EquivariantModule& coeff);

// H_1^Gamma(G, A) = (G/[G,G]_Gamma) ox A for trivially acted-on A.
AbelianInvariants h1_via_formula(const GammaGroup& gg, const EquivariantModule& coeff);

// Coordinates in C^degree of the equivariant cochain with the given value on
// every tuple (values indexed by tuple index, each an A-coordinate vector).
std::vector<Int> cochain_coordinates(const CochainComplexGamma& cc, std::size_t degree,
                                     const std::vector<std::vector<Int>>& values);

bool is_cocycle(const CochainComplexGamma& cc, std::size_t degree, const std::vector<Int>& coords);
bool is_coboundary(const CochainComplexGamma& cc, std::size_t degree, const std::vector<Int>& coords);

// Presentation of a finite abelian group from its multiplication table.
FPAbelianGroup present_abelian_group(const FiniteGroup& g);
AbelianInvariants abelian_invariants(const FiniteGroup& g);

// The terms of Thm "0 -> GammaG/([G,G] cap GammaG) -> H_1(G) -> H_1^Gamma(G) -> 0",
// each computed by its own route, with the exactness verdict.
struct H1SequenceReport {
    AbelianInvariants left;              // GammaG / ([G,G] cap GammaG)
    AbelianInvariants middle;            // H_1(G), classical, from the bar complex
    AbelianInvariants middle_group_side; // G^{ab} from the group calculus
    AbelianInvariants right;             // H_1^Gamma(G) from the equivariant bar complex
    AbelianInvariants right_group_side;  // G/[G,G]_Gamma
    bool exact = false;
    std::string detail;
};
H1SequenceReport check_h1_exact_sequence(const GammaGroup& gg);

}  // namespace gammahom
