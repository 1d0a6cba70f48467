#pragma once
// Sets of square-(-2) vectors and the combinatorics the generation
// criterion needs: reflection orbits, unit-edge connectivity, and the
// search for the six-vertex configuration.

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ellat/dynkin.hpp"
#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"
#include "ellat/reflections.hpp"
#include "ellat/root_enum.hpp"

namespace ellat {

struct DeltaSet {
    Lattice lattice;
    std::vector<IntVec> vectors;
};

// Enforces the type invariants: every vector of square -2, pairwise distinct.
inline DeltaSet make_delta(Lattice l, std::vector<IntVec> vectors) {
    const IntMatrix g = l.integer_gram();
    std::set<IntVec> seen;
    for (const IntVec& v : vectors) {
        if (v.size() != l.rank) throw std::invalid_argument("make_delta: vector length mismatch");
        if (square(g, v) != -2) throw std::invalid_argument("make_delta: vector of square != -2");
        if (!seen.insert(v).second) throw std::invalid_argument("make_delta: duplicate vector");
    }
    return DeltaSet{std::move(l), std::move(vectors)};
}

// BFS closure of `seeds` under reflections in the delta vectors.  Without a
// bound the lattice must be definite (the closure is then finite); with a
// bound, images whose largest |coordinate| exceeds it are discarded.
inline std::vector<IntVec> orbit_closure(const DeltaSet& delta, const std::vector<IntVec>& seeds,
                                         std::optional<long> bound = std::nullopt) {
    const Lattice& l = delta.lattice;
    const IntMatrix g = l.integer_gram();
    if (!bound) {
        const Signature sig = signature(l);
        if (sig.positive != l.rank && sig.negative != l.rank)
            throw std::invalid_argument("orbit_closure: indefinite lattice needs a bound");
    }

    auto within = [&](const IntVec& v) {
        if (!bound) return true;
        for (const Integer& x : v)
            if (cmp(abs(x), *bound) > 0) return false;
        return true;
    };

    std::set<IntVec> seen;
    std::deque<IntVec> frontier;
    for (const IntVec& s : seeds) {
        check_vector(l, s, "orbit_closure");
        if (within(s) && seen.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        IntVec x = frontier.front();
        frontier.pop_front();
        for (const IntVec& v : delta.vectors) {
            // s_v(x) = x + <x,v> v for v of square -2.
            const Integer c = pair(g, x, v);
            if (c == 0) continue;
            IntVec y = add(x, scale(c, v));
            if (within(y) && seen.insert(y).second) frontier.push_back(y);
        }
    }
    return std::vector<IntVec>(seen.begin(), seen.end());
}

// Connectivity of the graph on delta with edges |<x,y>| = 1.
inline bool unit_edge_connected(const DeltaSet& delta) {
    const size_t n = delta.vectors.size();
    if (n == 0) throw std::invalid_argument("unit_edge_connected: empty delta set");
    const IntMatrix g = delta.lattice.integer_gram();
    std::vector<char> seen(n, 0);
    std::deque<size_t> frontier{0};
    seen[0] = 1;
    size_t count = 1;
    while (!frontier.empty()) {
        size_t i = frontier.front();
        frontier.pop_front();
        for (size_t j = 0; j < n; ++j) {
            if (seen[j]) continue;
            const Integer c = pair(g, delta.vectors[i], delta.vectors[j]);
            if (c == 1 || c == -1) {
                seen[j] = 1;
                ++count;
                frontier.push_back(j);
            }
        }
    }
    return count == n;
}

// Deterministic pruned backtracking for six delta indices realizing the
// lambda pattern exactly, zeros included.  Returns the first witness in the
// induced lexicographic search order.
inline std::optional<std::array<size_t, 6>> find_lambda_diagram(const DeltaSet& delta) {
    const size_t n = delta.vectors.size();
    if (n < 6) return std::nullopt;
    const IntMatrix target = lambda_diagram_gram();
    const IntMatrix g = delta.lattice.integer_gram();

    // Precompute the pairing table once.
    std::vector<std::vector<Integer>> p(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) p[i][j] = p[j][i] = pair(g, delta.vectors[i], delta.vectors[j]);

    std::array<size_t, 6> pick{};
    std::vector<char> used(n, 0);
    auto search = [&](auto&& self, size_t pos) -> bool {
        if (pos == 6) return true;
        for (size_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q)
                if (p[pick[q]][cand] != target(q, pos)) ok = false;
            if (!ok) continue;
            pick[pos] = cand;
            used[cand] = 1;
            if (self(self, pos + 1)) return true;
            used[cand] = 0;
        }
        return false;
    };
    if (search(search, 0)) return pick;
    return std::nullopt;
}

// Assertion helper used by the checkers: a claimed witness must reproduce
// every entry of the pattern.
inline bool lambda_witness_valid(const DeltaSet& delta, const std::array<size_t, 6>& w) {
    const IntMatrix target = lambda_diagram_gram();
    const IntMatrix g = delta.lattice.integer_gram();
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j)
            if (pair(g, delta.vectors[w[i]], delta.vectors[w[j]]) != target(i, j)) return false;
    return true;
}

}  // namespace ellat
