#pragma once
// Reflections and the two real characters of the orthogonal group: the
// spinor norm (normalized so that reflections in vectors of negative square
// have norm +1) and the orientation character on a maximal positive
// subspace.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/diagonalize.hpp"
#include "ellat/isometry.hpp"
#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"

namespace ellat {

// s_v : x -> x - (2<x,v>/<v,v>) v as an integer isometry.  Requires <v,v>
// nonzero and dividing 2<x,v> for every basis vector x (automatic for
// squares +-1 and +-2).
inline Isometry reflect(const Lattice& l, const IntVec& v) {
    check_vector(l, v, "reflect");
    if (!l.has_integer_gram()) throw std::invalid_argument("reflect: symbolic gram entries");
    const IntMatrix g = l.integer_gram();
    const Integer vv = pair(g, v, v);
    if (vv == 0) throw std::invalid_argument("reflect: isotropic vector");
    const IntVec gv = g * v;
    IntMatrix m = IntMatrix::identity(l.rank);
    for (size_t j = 0; j < l.rank; ++j) {
        const Integer t = 2 * gv[j];  // 2<e_j, v>
        if (t % vv != 0) throw std::invalid_argument("reflect: reflection is not integral");
        const Integer c = t / vv;
        for (size_t i = 0; i < l.rank; ++i) m(i, j) -= c * v[i];
    }
    return Isometry{std::move(m)};
}

inline bool is_root(const IntMatrix& gram, const IntVec& v) { return square(gram, v) == -2; }

// Reflection applied to a rational vector, for anisotropic rational v.
inline RatVec reflect_rational(const RatMatrix& gram, const RatVec& v, const RatVec& x) {
    const size_t n = x.size();
    Rational vv = 0, xv = 0;
    for (size_t i = 0; i < n; ++i) {
        Rational gi = 0;
        for (size_t j = 0; j < n; ++j) gi += gram(i, j) * v[j];
        vv += v[i] * gi;
        xv += x[i] * gi;
    }
    if (vv == 0) throw std::invalid_argument("reflect_rational: isotropic vector");
    Rational c = 2 * xv / vv;
    RatVec r(n);
    for (size_t i = 0; i < n; ++i) r[i] = x[i] - c * v[i];
    return r;
}

struct ReflectionWord {
    // g = s_{factors[0]} o s_{factors[1]} o ... (the last factor acts first).
    std::vector<RatVec> factors;

    size_t length() const { return factors.size(); }
};

inline RatMatrix compose_word(const Lattice& l, const ReflectionWord& w) {
    const RatMatrix gram = to_rational(l.integer_gram());
    RatMatrix m = RatMatrix::identity(l.rank);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        // m := s_v * m, column by column.
        RatMatrix next(l.rank, l.rank);
        for (size_t j = 0; j < l.rank; ++j) {
            RatVec col(l.rank);
            for (size_t i = 0; i < l.rank; ++i) col[i] = m(i, j);
            RatVec im = reflect_rational(gram, *it, col);
            for (size_t i = 0; i < l.rank; ++i) next(i, j) = im[i];
        }
        m = next;
    }
    return m;
}

// Cartan-Dieudonne: factor an isometry of a nondegenerate lattice into at
// most 2*rank rational reflections.  Walks an orthogonal rational basis and
// corrects one vector at a time; the two-reflection fallback handles the
// isotropic difference case.  `variant` selects a different orthogonal
// basis so callers can cross-check factorization independence.
inline ReflectionWord factor_into_reflections(const Lattice& l, const Isometry& g, int variant = 0) {
    if (!l.has_integer_gram()) throw std::invalid_argument("factor_into_reflections: symbolic gram");
    if (!is_nondegenerate(l)) throw std::invalid_argument("factor_into_reflections: degenerate lattice");
    if (!is_isometry(l, g.matrix)) throw std::invalid_argument("factor_into_reflections: not an isometry");

    const size_t n = l.rank;
    const RatMatrix gram = to_rational(l.integer_gram());
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = (variant == 0) ? i : n - 1 - i;
    const Diagonalization diag = diagonalize_symmetric(gram, variant == 0 ? nullptr : &order);

    auto pairing = [&](const RatVec& x, const RatVec& y) {
        Rational acc = 0;
        for (size_t i = 0; i < n; ++i) {
            Rational row = 0;
            for (size_t j = 0; j < n; ++j) row += gram(i, j) * y[j];
            acc += x[i] * row;
        }
        return acc;
    };

    // Current map: h = (reflections so far) o g, tracked columnwise.
    RatMatrix h(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h(i, j) = Rational(g.matrix(i, j));

    std::vector<RatVec> applied;
    auto apply_reflection = [&](const RatVec& v) {
        for (size_t j = 0; j < n; ++j) {
            RatVec col(n);
            for (size_t i = 0; i < n; ++i) col[i] = h(i, j);
            RatVec im = reflect_rational(gram, v, col);
            for (size_t i = 0; i < n; ++i) h(i, j) = im[i];
        }
        applied.push_back(v);
    };

    for (size_t k = 0; k < n; ++k) {
        RatVec b(n);
        for (size_t i = 0; i < n; ++i) b[i] = diag.basis(i, k);
        RatVec y(n, Rational(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) y[i] += h(i, j) * b[j];
        if (y == b) continue;
        RatVec u(n), w(n);
        for (size_t i = 0; i < n; ++i) {
            u[i] = y[i] - b[i];
            w[i] = y[i] + b[i];
        }
        if (pairing(u, u) != 0) {
            apply_reflection(u);  // s_u(y) = b
        } else {
            apply_reflection(w);  // s_w(y) = -b, then flip with s_b
            apply_reflection(b);
        }
    }
    if (!(h == RatMatrix::identity(n)))
        throw std::logic_error("factor_into_reflections: residual map is not the identity");

    // h = s_k ... s_1 g = id, so g = s_1 s_2 ... s_k.
    ReflectionWord word;
    word.factors = std::move(applied);
    return word;
}

// Real spinor norm with the convention theta(s_v) = +1 for <v,v> < 0,
// i.e. the product of sign(-Q(v)) over any reflection factorization.
inline int spinor_norm(const Lattice& l, const Isometry& g) {
    const ReflectionWord w = factor_into_reflections(l, g);
    const RatMatrix gram = to_rational(l.integer_gram());
    int norm = 1;
    for (const RatVec& v : w.factors) {
        Rational q = 0;
        for (size_t i = 0; i < l.rank; ++i) {
            Rational row = 0;
            for (size_t j = 0; j < l.rank; ++j) row += gram(i, j) * v[j];
            q += v[i] * row;
        }
        if (sgn(q) > 0) norm = -norm;
    }
    return norm;
}

// Sign of det(P+ o g restricted to a maximal positive-definite subspace),
// the lattice-level stand-in for the action on the orientation of H^{2,+}.
// Never zero: a positive subspace cannot be carried into the negative one.
inline int positive_orientation_character(const Lattice& l, const Isometry& g,
                                          const std::vector<size_t>* order = nullptr) {
    if (!l.has_integer_gram())
        throw std::invalid_argument("positive_orientation_character: symbolic gram");
    if (!is_nondegenerate(l))
        throw std::invalid_argument("positive_orientation_character: degenerate lattice");
    if (!is_isometry(l, g.matrix))
        throw std::invalid_argument("positive_orientation_character: not an isometry");

    const RatMatrix gram = to_rational(l.integer_gram());
    const Diagonalization diag = diagonalize_symmetric(gram, order);
    std::vector<size_t> pos;
    for (size_t i = 0; i < l.rank; ++i)
        if (sgn(diag.diag[i]) > 0) pos.push_back(i);
    if (pos.empty())
        throw std::invalid_argument("positive_orientation_character: no positive directions");

    // Coordinates of g in the diagonalizing basis, restricted to V+.
    const RatMatrix binv = inverse(diag.basis);
    RatMatrix gb(l.rank, l.rank);
    for (size_t i = 0; i < l.rank; ++i)
        for (size_t j = 0; j < l.rank; ++j) gb(i, j) = Rational(g.matrix(i, j));
    const RatMatrix c = binv * gb * diag.basis;
    RatMatrix block(pos.size(), pos.size());
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = 0; j < pos.size(); ++j) block(i, j) = c(pos[i], pos[j]);
    const Rational det = determinant(block);
    const int s = sgn(det);
    if (s == 0) throw std::logic_error("positive_orientation_character: degenerate restriction");
    return s;
}

}  // namespace ellat
