#pragma once
// Isometries: integer matrices M with M^T G M = G and det = +-1.

#include <stdexcept>

#include "ellat/lattice.hpp"
#include "ellat/matrix.hpp"

namespace ellat {

struct Isometry {
    IntMatrix matrix;

    size_t rank() const { return matrix.rows(); }
};

inline bool preserves_pairing(const Lattice& l, const IntMatrix& m) {
    if (m.rows() != l.rank || m.cols() != l.rank) return false;
    const IntMatrix g = l.integer_gram();
    const IntMatrix mt = m.transpose();
    return (mt * g) * m == g;
}

inline bool is_isometry(const Lattice& l, const IntMatrix& m) {
    if (!preserves_pairing(l, m)) return false;
    const Integer d = determinant(m);
    return d == 1 || d == -1;
}

inline Isometry make_isometry(const Lattice& l, IntMatrix m) {
    if (!is_isometry(l, m)) throw std::invalid_argument("make_isometry: matrix is not an isometry");
    return Isometry{std::move(m)};
}

inline Isometry identity_isometry(const Lattice& l) { return Isometry{IntMatrix::identity(l.rank)}; }

inline Isometry compose(const Isometry& a, const Isometry& b) { return Isometry{a.matrix * b.matrix}; }

inline Isometry inverse(const Isometry& a) { return Isometry{unimodular_inverse(a.matrix)}; }

inline IntVec act(const Isometry& a, const IntVec& v) { return a.matrix * v; }

}  // namespace ellat
