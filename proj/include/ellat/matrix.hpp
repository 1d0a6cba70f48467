#pragma once
// Small dense matrices over an exact ring (Integer, Rational or Scalar).
// Everything here is plain row-major storage with value semantics; the
// ranks in this library stay far below anything that needs tuning.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ellat/scalar.hpp"

namespace ellat {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        std::vector<T> r(a.rows_, T());
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: dimension mismatch in difference");
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const T& x : a_)
            if (x != T()) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;
using ScalarVec = std::vector<Scalar>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline Matrix<Scalar> to_scalar(const IntMatrix& m) {
    Matrix<Scalar> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
    return r;
}

// Fraction-free determinant (Bareiss).  Exact for integer matrices.
inline Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

inline Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const size_t n = m.rows();
    RatMatrix a = m;
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (size_t j = 0; j < n; ++j) swap(a(k, j), a(p, j));
            det = -det;
        }
        det *= a(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// Gauss-Jordan inverse over the rationals.  Throws on singular input.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        if (p != k)
            for (size_t j = 0; j < n; ++j) {
                swap(a(k, j), a(p, j));
                swap(inv(k, j), inv(p, j));
            }
        Rational piv = a(k, k);
        for (size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rational f = a(i, k);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Inverse of a unimodular integer matrix, as an integer matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    RatMatrix inv = inverse(to_rational(m));
    IntMatrix r(inv.rows(), inv.cols());
    for (size_t i = 0; i < inv.rows(); ++i)
        for (size_t j = 0; j < inv.cols(); ++j) {
            if (inv(i, j).get_den() != 1)
                throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
            r(i, j) = inv(i, j).get_num();
        }
    return r;
}

}  // namespace ellat
