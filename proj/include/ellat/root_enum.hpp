#pragma once
// Enumeration of lattice vectors of a prescribed square.  Definite lattices
// are enumerated completely via an exact rational LDL^T decomposition
// (Fincke-Pohst style, no floating point); indefinite or degenerate ones
// require an explicit coordinate bound and are scanned directly.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/diagonalize.hpp"
#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"

namespace ellat {

namespace detail {

struct Ldl {
    std::vector<Rational> d;  // positive pivots
    RatMatrix l;              // unit lower triangular
};

// A = L D L^T for positive definite A.
inline Ldl ldl_positive_definite(const RatMatrix& a0) {
    const size_t n = a0.rows();
    RatMatrix a = a0;
    Ldl out{std::vector<Rational>(n), RatMatrix::identity(n)};
    for (size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) <= 0) throw std::invalid_argument("ldl: matrix not positive definite");
        out.d[k] = a(k, k);
        for (size_t i = k + 1; i < n; ++i) out.l(i, k) = a(i, k) / a(k, k);
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j <= i; ++j) {
                a(i, j) -= out.l(i, k) * a(k, j);
                a(j, i) = a(i, j);
            }
    }
    return out;
}

// Integers x with (x + c)^2 <= bound, in increasing order.
inline std::vector<Integer> interval_around(const Rational& c, const Rational& bound) {
    std::vector<Integer> xs;
    if (sgn(bound) < 0) return xs;
    const Rational center = -c;
    Integer start;
    mpz_fdiv_q(start.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    auto ok = [&](const Integer& x) {
        Rational t = Rational(x) + c;
        return t * t <= bound;
    };
    Integer lo = start;
    while (ok(lo - 1)) --lo;
    if (!ok(lo)) {
        // start may sit just outside; probe upward for the first hit
        Integer x = start + 1;
        if (!ok(x)) return xs;
        lo = x;
    }
    for (Integer x = lo; ok(x); ++x) xs.push_back(x);
    return xs;
}

}  // namespace detail

// All v with <v,v> = s.  Definite lattices need no bound; otherwise `bound`
// caps |coordinate|.  Output sorted lexicographically.
inline std::vector<IntVec> enumerate_vectors_of_square(const Lattice& l, const Integer& s,
                                                       std::optional<long> bound = std::nullopt) {
    if (!l.has_integer_gram())
        throw std::invalid_argument("enumerate_vectors_of_square: symbolic gram entries");
    const size_t n = l.rank;
    std::vector<IntVec> out;
    if (n == 0) {
        if (s == 0) out.push_back(IntVec{});
        return out;
    }

    const Signature sig = signature(l);
    const bool neg_definite = (sig.negative == n);
    const bool pos_definite = (sig.positive == n);

    if ((neg_definite || pos_definite) && !bound) {
        // Flip to a positive form and run the exact recursion.
        const Integer target = neg_definite ? Integer(-s) : s;
        if (target < 0) return out;
        if (target == 0) {
            out.push_back(IntVec(n, Integer(0)));
            return out;
        }
        RatMatrix a(n, n);
        const IntMatrix g = l.integer_gram();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = Rational(neg_definite ? Integer(-g(i, j)) : g(i, j));
        const detail::Ldl ldl = detail::ldl_positive_definite(a);

        IntVec v(n, Integer(0));
        auto recurse = [&](auto&& self, size_t level, const Rational& budget) -> void {
            const size_t i = level - 1;
            Rational c = 0;
            for (size_t j = i + 1; j < n; ++j) c += ldl.l(j, i) * Rational(v[j]);
            const Rational cap = budget / ldl.d[i];
            for (const Integer& x : detail::interval_around(c, cap)) {
                v[i] = x;
                Rational t = Rational(x) + c;
                Rational used = ldl.d[i] * t * t;
                if (i == 0) {
                    if (used == budget) out.push_back(v);
                } else {
                    self(self, i, budget - used);
                }
            }
            v[i] = 0;
        };
        recurse(recurse, n, Rational(target));
        std::sort(out.begin(), out.end());
        return out;
    }

    if (!bound)
        throw std::invalid_argument("enumerate_vectors_of_square: indefinite lattice needs a bound");
    if (*bound < 0) throw std::invalid_argument("enumerate_vectors_of_square: negative bound");

    const IntMatrix g = l.integer_gram();
    IntVec v(n, Integer(0));
    auto scan = [&](auto&& self, size_t i) -> void {
        if (i == n) {
            if (square(g, v) == s) out.push_back(v);
            return;
        }
        for (long x = -*bound; x <= *bound; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
        v[i] = 0;
    };
    scan(scan, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ellat
