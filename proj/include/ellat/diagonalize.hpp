#pragma once
// Symmetric Gaussian congruence over the rationals.  Produces an orthogonal
// rational basis together with the diagonal values; Sylvester's law makes
// the sign counts basis independent.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ellat/matrix.hpp"

namespace ellat {

struct Signature {
    size_t positive = 0;
    size_t negative = 0;
    size_t null = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct Diagonalization {
    RatMatrix basis;             // columns are the orthogonal basis vectors
    std::vector<Rational> diag;  // diag[i] = Q(basis column i)
};

// Congruence diagonalization with deterministic pivoting: first admissible
// index, with the standard fix (add one row/column into another) when every
// remaining diagonal entry vanishes.  `order` optionally permutes which
// ambient index is preferred at each step; it exists so callers can obtain
// genuinely different diagonalizations for cross-checks.
inline Diagonalization diagonalize_symmetric(const RatMatrix& gram,
                                             const std::vector<size_t>* order = nullptr) {
    if (!gram.is_symmetric()) throw std::invalid_argument("diagonalize_symmetric: gram not symmetric");
    const size_t n = gram.rows();
    RatMatrix a = gram;
    RatMatrix b = RatMatrix::identity(n);

    if (order) {
        if (order->size() != n) throw std::invalid_argument("diagonalize_symmetric: bad order");
        // Start from the permuted basis: a := P^T gram P with P the column permutation.
        RatMatrix p(n, n);
        for (size_t j = 0; j < n; ++j) p((*order)[j], j) = 1;
        a = p.transpose() * gram * p;
        b = p;
    }

    auto add_col_into = [&](size_t dst, size_t src, const Rational& f) {
        // basis column dst += f * column src; a updated congruently.
        for (size_t i = 0; i < n; ++i) b(i, dst) += f * b(i, src);
        for (size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
        for (size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    };
    auto swap_cols = [&](size_t x, size_t y) {
        for (size_t i = 0; i < n; ++i) {
            swap(b(i, x), b(i, y));
            swap(a(i, x), a(i, y));
        }
        for (size_t j = 0; j < n; ++j) swap(a(x, j), a(y, j));
    };

    for (size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            size_t piv = n;
            for (size_t j = k; j < n && piv == n; ++j)
                if (a(j, j) != 0) piv = j;
            if (piv != n) {
                if (piv != k) swap_cols(k, piv);
            } else {
                size_t x = n, y = n;
                for (size_t i = k; i < n && x == n; ++i)
                    for (size_t j = i + 1; j < n && x == n; ++j)
                        if (a(i, j) != 0) {
                            x = i;
                            y = j;
                        }
                if (x == n) break;  // trailing block is zero
                add_col_into(x, y, Rational(1));
                if (x != k) swap_cols(k, x);
            }
        }
        for (size_t j = k + 1; j < n; ++j) {
            if (a(k, j) == 0) continue;
            Rational f = -a(k, j) / a(k, k);
            add_col_into(j, k, f);
        }
    }

    Diagonalization d;
    d.basis = b;
    d.diag.resize(n);
    for (size_t i = 0; i < n; ++i) d.diag[i] = a(i, i);
    return d;
}

inline Signature signature_of(const RatMatrix& gram) {
    Diagonalization d = diagonalize_symmetric(gram);
    Signature s;
    for (const Rational& q : d.diag) {
        const int c = sgn(q);
        if (c > 0)
            ++s.positive;
        else if (c < 0)
            ++s.negative;
        else
            ++s.null;
    }
    return s;
}

}  // namespace ellat
