#include "gammahom/smith.hpp"

#include <algorithm>
#include <limits>

namespace gammahom {

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row i += f * row j
void add_row(IntMat& m, std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(j, c) != 0) m(i, c) += f * m(j, c);
}

// col i += f * col j
void add_col(IntMat& m, std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, j) != 0) m(r, i) += f * m(r, j);
}

void negate_row(IntMat& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}

// True when d(s,s) is the only nonzero entry in row s and column s of the
// trailing submatrix.
bool is_lone(const IntMat& d, std::size_t s) {
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        if (d(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < d.cols(); ++j)
        if (d(s, j) != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing submatrix, ties broken by (row, col).
bool locate_pivot(const IntMat& d, std::size_t s, std::size_t& ir, std::size_t& ic) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                ir = i;
                ic = j;
            }
        }
    return found;
}

bool divides_all_below(const IntMat& d, std::size_t s, std::size_t& ir, std::size_t& ic) {
    for (std::size_t i = s + 1; i < d.rows(); ++i)
        for (std::size_t j = s + 1; j < d.cols(); ++j)
            if (d(i, j) % d(s, s) != 0) {
                ir = i;
                ic = j;
                return false;
            }
    return true;
}

}  // namespace

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(d(i, i));
    return f;
}

void SmithDecomposition::check(const IntMat& a) const {
    if (u * a * v != d) throw invariant_error("smith: u*a*v != d");
    if (abs(determinant(u)) != 1 || abs(determinant(v)) != 1)
        throw invariant_error("smith: transform not unimodular");
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) throw invariant_error("smith: d not diagonal");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d(i, i) < 0) throw invariant_error("smith: negative invariant factor");
        if (d(i + 1, i + 1) != 0 && d(i, i) == 0)
            throw invariant_error("smith: zero before nonzero factor");
        if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0)
            throw invariant_error("smith: divisibility chain broken");
    }
}

// Pivot on the smallest nonzero absolute value to keep entry growth down;
// clear its row and column, then enforce the divisibility chain before
// moving to the next diagonal slot.
SmithDecomposition smith_normal_form(const IntMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition s;
    s.u = IntMat::identity(m);
    s.v = IntMat::identity(n);
    s.d = a;
    IntMat& d = s.d;

    const std::size_t nmin = std::min(m, n);
    for (std::size_t i = 0; i < nmin; ++i) {
        std::size_t ir = i, ic = i;
        if (!locate_pivot(d, i, ir, ic)) break;  // trailing submatrix is zero
        for (;;) {
            locate_pivot(d, i, ir, ic);
            swap_rows(d, i, ir);
            swap_rows(s.u, i, ir);
            swap_cols(d, i, ic);
            swap_cols(s.v, i, ic);

            for (std::size_t r = i + 1; r < m; ++r)
                if (d(r, i) != 0) {
                    Int q = d(r, i) / d(i, i);
                    add_row(d, r, i, -q);
                    add_row(s.u, r, i, -q);
                }
            for (std::size_t c = i + 1; c < n; ++c)
                if (d(i, c) != 0) {
                    Int q = d(i, c) / d(i, i);
                    add_col(d, c, i, -q);
                    add_col(s.v, c, i, -q);
                }
            if (!is_lone(d, i)) continue;

            std::size_t jr, jc;
            if (divides_all_below(d, i, jr, jc)) break;
            // Pull a non-divisible entry's row up and restart the reduction.
            add_row(d, i, jr, 1);
            add_row(s.u, i, jr, 1);
        }
        if (d(i, i) < 0) {
            negate_row(d, i);
            negate_row(s.u, i);
        }
    }
    s.rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (d(i, i) != 0) ++s.rank;
    return s;
}

Int determinant(const IntMat& a) {
    if (a.rows() != a.cols()) throw invariant_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMat m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntMat kernel_basis(const IntMat& a) {
    // a * (v e_j) = u^{-1} (d e_j) = 0 exactly for the zero columns of d.
    SmithDecomposition s = smith_normal_form(a);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (j >= s.rank) zero_cols.push_back(j);
    return s.v.submatrix_cols(zero_cols);
}

SmithSolver::SmithSolver(IntMat a) : a_(std::move(a)), snf_(smith_normal_form(a_)) {}

std::optional<std::vector<Int>> SmithSolver::solve(const std::vector<Int>& b) const {
    // a x = b  <=>  d y = u b with x = v y.
    std::vector<Int> ub = snf_.u.apply(b);
    std::vector<Int> y(a_.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < snf_.rank) {
            if (ub[i] % snf_.d(i, i) != 0) return std::nullopt;
            if (i < y.size()) y[i] = ub[i] / snf_.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.v.apply(y);
}

std::optional<IntMat> SmithSolver::solve(const IntMat& b) const {
    if (b.rows() != a_.rows()) throw invariant_error("solve: shape mismatch");
    IntMat x(a_.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto xj = solve(b.col(j));
        if (!xj) return std::nullopt;
        x.set_col(j, *xj);
    }
    return x;
}

bool SmithSolver::contains_all(const IntMat& b) const {
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!contains(b.col(j))) return false;
    return true;
}

IntMat preimage_lattice(const IntMat& a, const IntMat& r) {
    if (r.cols() == 0) return kernel_basis(a);
    if (r.rows() != a.rows()) throw invariant_error("preimage_lattice: shape mismatch");
    // x with a x = -r y for some y: project ker [a | r] to the x block.
    IntMat k = kernel_basis(a.hcat(r));
    return k.top_rows(a.cols());
}

}  // namespace gammahom
