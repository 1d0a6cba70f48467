#pragma once
// Deterministic pseudorandom sampling used by the check batteries: vectors
// of reflective square and isometries generated by them.  Callers own the
// engine, so runs are reproducible.

#include <optional>
#include <random>
#include <stdexcept>

#include "ellat/isometry.hpp"
#include "ellat/lattice.hpp"
#include "ellat/reflections.hpp"

namespace ellat {

// A vector with square in {+-1, +-2}; any such vector reflects integrally.
// Sparse draws: vectors supported on one to three coordinates have small
// squares often enough that a few hundred tries always succeed on the
// models in this library.
inline std::optional<IntVec> sample_reflective_vector(const Lattice& l, std::mt19937_64& rng,
                                                      int tries = 400, long box = 2) {
    const IntMatrix g = l.integer_gram();
    std::uniform_int_distribution<long> val(-box, box);
    std::uniform_int_distribution<size_t> pos(0, l.rank - 1);
    std::uniform_int_distribution<int> support(1, 3);
    for (int t = 0; t < tries; ++t) {
        IntVec v(l.rank, Integer(0));
        const int s = support(rng);
        bool nonzero = false;
        for (int i = 0; i < s; ++i) {
            long x = val(rng);
            v[pos(rng)] = x;
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) continue;
        const Integer q = square(g, v);
        if (q == 1 || q == -1 || q == 2 || q == -2) return v;
    }
    return std::nullopt;
}

// Product of `length` random reflections.
inline Isometry sample_isometry(const Lattice& l, std::mt19937_64& rng, int length = 6) {
    IntMatrix m = IntMatrix::identity(l.rank);
    for (int i = 0; i < length; ++i) {
        auto v = sample_reflective_vector(l, rng);
        if (!v) throw std::runtime_error("sample_isometry: no reflective vector found");
        m = reflect(l, *v).matrix * m;
    }
    return Isometry{std::move(m)};
}

}  // namespace ellat
