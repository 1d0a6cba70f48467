#pragma once
// Fixed gram matrices: -E8 and -E10 in the labeling used throughout this
// library, and the six-vertex intersection pattern required by the
// reflection-group generation criterion.
//
// The -E8 labeling follows the standard (Bourbaki) numbering: the chain
// runs 1-3-4-5-6-7-8 with node 2 hanging off node 4.  Node 8 is the one the
// affine vertex would attach to, so the long vector ell (minus the highest
// root) has ell^2 = -2, <ell, beta_8> = -1 and <ell, beta_j> = 0 otherwise;
// its coordinates are the marks (2,3,4,6,5,4,3,2).

#include <array>
#include <tuple>
#include <utility>

#include "ellat/lattice.hpp"
#include "ellat/matrix.hpp"

namespace ellat {

inline IntMatrix dynkin_e8_gram() {
    IntMatrix g(8, 8);
    for (size_t i = 0; i < 8; ++i) g(i, i) = -2;
    const std::array<std::pair<int, int>, 7> edges{{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = 1;
        g(b - 1, a - 1) = 1;
    }
    return g;
}

// Coordinates of the long vector in the basis above.
inline IntVec e8_long_vector() {
    return IntVec{2, 3, 4, 6, 5, 4, 3, 2};
}

// -E10: the -E8 diagram extended by beta_9 (attached to beta_8) and
// beta_10 (attached to beta_9).
inline IntMatrix dynkin_e10_gram() {
    IntMatrix g(10, 10);
    const IntMatrix e8 = dynkin_e8_gram();
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) g(i, j) = e8(i, j);
    g(8, 8) = -2;
    g(9, 9) = -2;
    g(7, 8) = g(8, 7) = 1;
    g(8, 9) = g(9, 8) = 1;
    return g;
}

// The six-vertex pattern lambda_1..lambda_6: diagonal -2, the labelled
// edges below, and exact zeros everywhere else.
inline IntMatrix lambda_diagram_gram() {
    IntMatrix g(6, 6);
    for (size_t i = 0; i < 6; ++i) g(i, i) = -2;
    const std::array<std::tuple<int, int, int>, 8> edges{{
        {1, 2, 1}, {2, 3, -2}, {2, 4, 1}, {2, 5, -2}, {3, 4, 1}, {3, 5, -2}, {4, 5, 1}, {5, 6, 1},
    }};
    for (auto [a, b, w] : edges) {
        g(a - 1, b - 1) = w;
        g(b - 1, a - 1) = w;
    }
    return g;
}

}  // namespace ellat
