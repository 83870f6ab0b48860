#pragma once

#include <optional>

#include "gammahom/matrix.hpp"

namespace gammahom {

std::size_t rank_q(const QMat& a);

// Columns form a basis of the rational null space {x : a x = 0}.
QMat nullspace_q(const QMat& a);

// One solution of a x = b, if any.
std::optional<QMat> solve_q(const QMat& a, const QMat& b);

bool in_column_span(const QMat& a, const QMat& b);  // every column of b in span(cols of a)

// Quotient of Q^n by the column span of s: proj (q x n) and section (n x q)
// with proj*section = I and ker(proj) = span(s).
struct QuotientSpace {
    std::size_t dim = 0;
    QMat proj;
    QMat section;
};
QuotientSpace quotient_space(std::size_t n, const QMat& s);

}  // namespace gammahom
