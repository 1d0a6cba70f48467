#pragma once
// The central value type: a finite-rank free abelian group with a symmetric
// pairing.  Gram entries are Scalars, so the same type carries both concrete
// integer lattices and the symbolic models used by the construction
// verifiers.

#include <stdexcept>
#include <string>
#include <vector>

#include "ellat/matrix.hpp"
#include "ellat/scalar.hpp"

namespace ellat {

struct Lattice {
    size_t rank = 0;
    Matrix<Scalar> gram;
    std::string label;

    Lattice() : gram(0, 0) {}

    Lattice(Matrix<Scalar> g, std::string name = "") : rank(g.rows()), gram(std::move(g)), label(std::move(name)) {
        if (gram.rows() != gram.cols()) throw std::invalid_argument("Lattice: gram not square");
        if (!gram.is_symmetric()) throw std::invalid_argument("Lattice: gram not symmetric");
    }

    Lattice(const IntMatrix& g, std::string name = "") : Lattice(to_scalar(g), std::move(name)) {}

    bool has_integer_gram() const {
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j)
                if (!gram(i, j).is_integer()) return false;
        return true;
    }

    IntMatrix integer_gram() const {
        IntMatrix g(rank, rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j) g(i, j) = gram(i, j).integer_value();
        return g;
    }

    // Derived predicate: every square is even.  Checking the diagonal
    // suffices because off-diagonal entries contribute 2<x,y> to squares.
    bool is_even() const {
        for (size_t i = 0; i < rank; ++i) {
            if (!gram(i, i).is_integer())
                throw std::invalid_argument("Lattice::is_even: symbolic gram entry");
            if (gram(i, i).integer_value() % 2 != 0) return false;
        }
        return true;
    }
};

// Common small lattices.
inline Lattice hyperbolic_plane() {
    IntMatrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return Lattice(g, "U");
}

inline Lattice rank_one(const Integer& square, const std::string& label = "") {
    IntMatrix g(1, 1);
    g(0, 0) = square;
    return Lattice(g, label);
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    Matrix<Scalar> g(a.rank + b.rank, a.rank + b.rank);
    for (size_t i = 0; i < a.rank; ++i)
        for (size_t j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
    for (size_t i = 0; i < b.rank; ++i)
        for (size_t j = 0; j < b.rank; ++j) g(a.rank + i, a.rank + j) = b.gram(i, j);
    return Lattice(std::move(g));
}

template <class T>
void check_vector(const Lattice& l, const std::vector<T>& v, const char* what) {
    if (v.size() != l.rank) throw std::invalid_argument(std::string(what) + ": vector length does not match rank");
}

// <x, y> for symbolic coordinates.
inline Scalar pair(const Lattice& l, const ScalarVec& x, const ScalarVec& y) {
    check_vector(l, x, "pair");
    check_vector(l, y, "pair");
    Scalar acc;
    for (size_t i = 0; i < l.rank; ++i) {
        if (x[i].is_zero()) continue;
        Scalar row;
        for (size_t j = 0; j < l.rank; ++j) row += l.gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

// <x, y> on the integer fast path.
inline Integer pair(const Lattice& l, const IntVec& x, const IntVec& y) {
    check_vector(l, x, "pair");
    check_vector(l, y, "pair");
    const IntMatrix g = l.integer_gram();
    Integer acc = 0;
    for (size_t i = 0; i < l.rank; ++i) {
        if (x[i] == 0) continue;
        Integer row = 0;
        for (size_t j = 0; j < l.rank; ++j) row += g(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

inline Integer pair(const IntMatrix& gram, const IntVec& x, const IntVec& y) {
    Integer acc = 0;
    for (size_t i = 0; i < gram.rows(); ++i) {
        if (x[i] == 0) continue;
        Integer row = 0;
        for (size_t j = 0; j < gram.cols(); ++j) row += gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

inline Integer square(const IntMatrix& gram, const IntVec& x) { return pair(gram, x, x); }

inline IntVec unit_vector(size_t rank, size_t index, const Integer& value = 1) {
    IntVec v(rank, Integer(0));
    v.at(index) = value;
    return v;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const Integer& c, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero_vector(const IntVec& v) {
    for (const Integer& x : v)
        if (x != 0) return false;
    return true;
}

struct FiniteAbelianGroup {
    // d_1 | d_2 | ... | d_r with every d_i >= 2; the trivial group is empty.
    std::vector<Integer> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }

    Integer order() const {
        Integer n = 1;
        for (const Integer& d : invariant_factors) n *= d;
        return n;
    }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

}  // namespace ellat
