#include "gammahom/qlinalg.hpp"

#include <vector>

namespace gammahom {

namespace {

struct Echelon {
    QMat m;                         // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form. Pivot choice prefers entries of small complexity
// (units first) to keep fractions from spreading.
Echelon rref(QMat a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            if (best == rows || (abs(a(i, c)) == 1 && abs(a(best, c)) != 1)) best = i;
            if (abs(a(best, c)) == 1) break;
        }
        if (best == rows) continue;
        if (best != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(best, j));
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (a(r, j) != 0) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j) != 0) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(a);
    return e;
}

}  // namespace

std::size_t rank_q(const QMat& a) { return rref(a).pivots.size(); }

QMat nullspace_q(const QMat& a) {
    Echelon e = rref(a);
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat basis(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], k) = -e.m(i, f);
    }
    return basis;
}

std::optional<QMat> solve_q(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) throw invariant_error("solve_q: shape mismatch");
    Echelon e = rref(a.hcat(b));
    // Any pivot inside the b block means b is not in the span.
    for (auto p : e.pivots)
        if (p >= a.cols()) return std::nullopt;
    QMat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.m(i, a.cols() + j);
    return x;
}

bool in_column_span(const QMat& a, const QMat& b) { return solve_q(a, b).has_value(); }

QuotientSpace quotient_space(std::size_t n, const QMat& s) {
    if (s.cols() > 0 && s.rows() != n) throw invariant_error("quotient_space: shape mismatch");
    Echelon e = rref(s.transposed());  // row space of s^T = column space of s
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) coords.push_back(c);

    QuotientSpace q;
    q.dim = coords.size();
    q.proj = QMat(q.dim, n);
    q.section = QMat(n, q.dim);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        q.proj(k, coords[k]) = 1;
        // Subtract the pivot rows' contribution: x'_j = x_j - sum_i R[i][j] x_{p_i}.
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            q.proj(k, e.pivots[i]) = -e.m(i, coords[k]);
        q.section(coords[k], k) = 1;
    }
    return q;
}

}  // namespace gammahom
