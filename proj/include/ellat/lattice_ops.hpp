#pragma once
// Structural operations on integer lattices: radical, quotient by the
// radical, orthogonal complements, discriminant groups and the membership
// tests built on Smith normal form data.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/diagonalize.hpp"
#include "ellat/isometry.hpp"
#include "ellat/lattice.hpp"
#include "ellat/normal_form.hpp"

namespace ellat {

// Integer basis of ker(gram); empty iff the lattice is nondegenerate.
inline std::vector<IntVec> radical(const Lattice& l) {
    if (!l.has_integer_gram()) throw std::invalid_argument("radical: symbolic gram entries");
    return integer_kernel(l.integer_gram());
}

inline Signature signature(const Lattice& l) {
    if (!l.has_integer_gram()) throw std::invalid_argument("signature: symbolic gram entries");
    return signature_of(to_rational(l.integer_gram()));
}

inline Integer lattice_determinant(const Lattice& l) { return determinant(l.integer_gram()); }

inline bool is_nondegenerate(const Lattice& l) { return lattice_determinant(l) != 0; }

inline bool is_unimodular(const Lattice& l) {
    const Integer d = lattice_determinant(l);
    return d == 1 || d == -1;
}

struct QuotientByRadical {
    Lattice quotient;      // nondegenerate, rank = ambient rank - radical rank
    IntMatrix projection;  // quotient coordinates of an ambient vector
    IntMatrix section;     // columns: ambient representatives of the quotient basis
    std::vector<IntVec> radical_basis;
};

// Splits Z^n as radical + complement and transports the pairing to the
// complement.  The induced pairing is well defined because the radical
// pairs to zero with everything.
inline QuotientByRadical quotient_by_radical(const Lattice& l) {
    if (!l.has_integer_gram()) throw std::invalid_argument("quotient_by_radical: symbolic gram entries");
    const size_t n = l.rank;
    std::vector<IntVec> rad = radical(l);
    const size_t k = rad.size();

    // Columns of B span the radical; U B V = [I_k; 0] since the kernel basis
    // is saturated, so the columns of U^{-1} extend it to a basis of Z^n.
    if (k == 0) return QuotientByRadical{l, IntMatrix::identity(n), IntMatrix::identity(n), {}};

    IntMatrix b(n, k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) b(i, j) = rad[j][i];
    SmithNF s = smith(b);
    for (size_t i = 0; i < k; ++i)
        if (s.d(i, i) != 1) throw std::logic_error("quotient_by_radical: kernel basis not saturated");
    const IntMatrix uinv = unimodular_inverse(s.u);

    const size_t q = n - k;
    IntMatrix section(n, q);
    for (size_t j = 0; j < q; ++j)
        for (size_t i = 0; i < n; ++i) section(i, j) = uinv(i, k + j);
    // Quotient coordinates are the last q rows of U.
    IntMatrix projection(q, n);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < n; ++j) projection(i, j) = s.u(k + i, j);

    const IntMatrix g = l.integer_gram();
    IntMatrix qg = section.transpose() * g * section;
    QuotientByRadical out;
    out.quotient = Lattice(qg, l.label.empty() ? "" : l.label + "/rad");
    out.projection = std::move(projection);
    out.section = std::move(section);
    out.radical_basis = std::move(rad);
    return out;
}

// The map a radical-stabilizing isometry induces on the quotient.
inline Isometry induced_isometry(const QuotientByRadical& q, const IntMatrix& g) {
    IntMatrix m = q.projection * (g * q.section);
    if (!is_isometry(q.quotient, m))
        throw std::invalid_argument("induced_isometry: map does not descend to an isometry of the quotient");
    return Isometry{std::move(m)};
}

// Primitive (saturated) integer basis of { x : <x, s> = 0 for all s in S }.
inline std::vector<IntVec> orthogonal_complement(const Lattice& l, const std::vector<IntVec>& s) {
    if (!l.has_integer_gram()) throw std::invalid_argument("orthogonal_complement: symbolic gram entries");
    const IntMatrix g = l.integer_gram();
    IntMatrix rows(s.size(), l.rank);
    for (size_t i = 0; i < s.size(); ++i) {
        check_vector(l, s[i], "orthogonal_complement");
        IntVec gs = g * s[i];
        for (size_t j = 0; j < l.rank; ++j) rows(i, j) = gs[j];
    }
    return integer_kernel(rows);
}

inline FiniteAbelianGroup cokernel_invariants(const IntMatrix& m) {
    FiniteAbelianGroup g;
    for (const Integer& d : smith_diagonal(m)) {
        if (d == 0) throw std::invalid_argument("cokernel_invariants: infinite cokernel");
        if (d > 1) g.invariant_factors.push_back(d);
    }
    return g;
}

// Hom(L, Z) / im L for nondegenerate L.
inline FiniteAbelianGroup discriminant_group(const Lattice& l) {
    if (!l.has_integer_gram()) throw std::invalid_argument("discriminant_group: symbolic gram entries");
    if (!is_nondegenerate(l)) throw std::invalid_argument("discriminant_group: degenerate lattice");
    return cokernel_invariants(l.integer_gram());
}

// True iff g fixes every class of the discriminant group.  With
// U G V = D the dual generators are the columns V e_i / d_i, so the test is
// (g - id) V e_i = 0 mod d_i.
inline bool acts_trivially_on_discriminant(const Lattice& l, const Isometry& g) {
    if (!is_nondegenerate(l))
        throw std::invalid_argument("acts_trivially_on_discriminant: degenerate lattice");
    if (!is_isometry(l, g.matrix))
        throw std::invalid_argument("acts_trivially_on_discriminant: not an isometry");
    SmithNF s = smith(l.integer_gram());
    const size_t n = l.rank;
    for (size_t i = 0; i < n; ++i) {
        const Integer d = s.d(i, i);
        if (d == 1) continue;
        IntVec col(n);
        for (size_t r = 0; r < n; ++r) col[r] = s.v(r, i);
        IntVec moved = sub(g.matrix * col, col);
        for (size_t r = 0; r < n; ++r)
            if (moved[r] % d != 0) return false;
    }
    return true;
}

// gcd of <v, x> over x in the lattice; 0 for v in the radical.
inline Integer divisibility(const Lattice& l, const IntVec& v) {
    check_vector(l, v, "divisibility");
    const IntVec gv = l.integer_gram() * v;
    Integer g = 0;
    for (const Integer& x : gv) g = gcd(g, x);
    return g;
}

// <k, x> = <x, x> mod 2 for all x; linear in x mod 2, so a basis check suffices.
inline bool is_characteristic(const Lattice& l, const IntVec& k) {
    check_vector(l, k, "is_characteristic");
    const IntMatrix g = l.integer_gram();
    const IntVec gk = g * k;
    for (size_t i = 0; i < l.rank; ++i)
        if ((gk[i] - g(i, i)) % 2 != 0) return false;
    return true;
}

}  // namespace ellat
