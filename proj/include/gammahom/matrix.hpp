#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gammahom/errors.hpp"

namespace gammahom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw input_error("matrix literal has ragged rows");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw invariant_error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const T& y = o(k, j);
                    if (y != 0) r(i, j) += x * y;
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix sum shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix difference shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw invariant_error("matrix apply shape mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    // Columns of `o` appended on the right; both must have equal row counts
    // (an empty matrix with matching rows is allowed).
    Matrix hcat(const Matrix& o) const {
        if (o.cols_ == 0) return *this;
        if (cols_ == 0) return o;
        if (rows_ != o.rows_) throw invariant_error("hcat row mismatch");
        Matrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    Matrix vcat(const Matrix& o) const {
        if (o.rows_ == 0) return *this;
        if (rows_ == 0) return o;
        if (cols_ != o.cols_) throw invariant_error("vcat col mismatch");
        Matrix r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }

    Matrix submatrix_cols(const std::vector<std::size_t>& js) const {
        Matrix r(rows_, js.size());
        for (std::size_t k = 0; k < js.size(); ++k)
            for (std::size_t i = 0; i < rows_; ++i) r(i, k) = (*this)(i, js[k]);
        return r;
    }

    Matrix top_rows(std::size_t n) const {
        Matrix r(n, cols_);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMat = Matrix<Int>;
using QMat = Matrix<Rat>;

// Kronecker product: (a ox b)(iq+s, jp+t) = a(i,j) b(s,t).
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t s = 0; s < b.rows(); ++s)
                for (std::size_t t = 0; t < b.cols(); ++t)
                    if (b(s, t) != 0) r(i * b.rows() + s, j * b.cols() + t) = a(i, j) * b(s, t);
        }
    return r;
}

inline QMat to_rational(const IntMat& a) {
    QMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

}  // namespace gammahom
