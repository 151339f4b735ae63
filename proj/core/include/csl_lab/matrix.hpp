#pragma once

#include "csl_lab/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace csl_lab {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
        return c;
    }

    Matrix operator-() const { return T(-1) * *this; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    std::vector<T> mul_vec(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    const std::vector<T>& entries() const { return e_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> e_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

/// Gcd of all entries; 0 for the zero matrix.
inline Int content(const IntMatrix& m) {
    Int g = 0;
    for (const Int& x : m.entries()) g = gcd(g, abs(x));
    return g;
}

/// Least common multiple of all entry denominators.
inline Int common_denominator(const RatMatrix& m) {
    Int q = 1;
    for (const Rational& x : m.entries()) q = lcm(q, x.den());
    return q;
}

/// Smallest-denominator clearing: q * m as an integer matrix.
inline IntMatrix scale_to_integer(const RatMatrix& m, const Int& q) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            r(i, j) = x.num() * (q / x.den());
        }
    return r;
}

inline bool is_integral(const RatMatrix& m) {
    for (const Rational& x : m.entries())
        if (!x.is_integer()) return false;
    return true;
}

/// Strict total order: lexicographic over row-major entries by rational value.
inline bool lex_less(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        auto c = a.entries()[i] <=> b.entries()[i];
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return false;
}

}  // namespace csl_lab
