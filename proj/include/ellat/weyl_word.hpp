#pragma once
// Descent in the group generated by all root reflections of a definite
// lattice: expresses an isometry as a word in root reflections or reports
// that it lies outside that group.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/isometry.hpp"
#include "ellat/lattice.hpp"
#include "ellat/reflections.hpp"
#include "ellat/root_enum.hpp"

namespace ellat {

// Standard descent with a regular base point rho: pull g(rho) back into the
// chamber of rho one root reflection at a time; the height <y, rho> is
// strictly monotone, so the walk terminates.  A step budget of 10 * #roots
// converts a stall into NotInGroup (returned as nullopt).
inline std::optional<ReflectionWord> word_in_root_reflections(const Lattice& l, const Isometry& g) {
    if (!l.has_integer_gram()) throw std::invalid_argument("word_in_root_reflections: symbolic gram");
    const Signature sig = signature(l);
    if (sig.negative != l.rank)
        throw std::invalid_argument("word_in_root_reflections: lattice not negative definite");
    if (!is_isometry(l, g.matrix)) throw std::invalid_argument("word_in_root_reflections: not an isometry");

    const size_t n = l.rank;
    const IntMatrix gram = l.integer_gram();
    const std::vector<IntVec> roots = enumerate_vectors_of_square(l, -2);
    if (roots.empty()) return (g.matrix == IntMatrix::identity(n)) ? std::make_optional(ReflectionWord{}) : std::nullopt;

    // Positive pairing <x,y>+ = -<x,y> turns descent into hill climbing.
    auto ppair = [&](const IntVec& x, const IntVec& y) { return Integer(-pair(gram, x, y)); };

    // rho = (1, B, B^2, ...) with B large enough that rho separates roots:
    // distinct roots get distinct pairings, none of them zero.
    Integer maxentry = 0;
    for (const IntVec& r : roots) {
        const IntVec gr = gram * r;
        for (const Integer& e : gr) {
            Integer a = abs(e);
            if (a > maxentry) maxentry = a;
        }
    }
    const Integer base = 2 * maxentry + 1;
    IntVec rho(n);
    Integer pw = 1;
    for (size_t i = 0; i < n; ++i) {
        rho[i] = pw;
        pw *= base;
    }

    IntVec y = g.matrix * rho;
    std::vector<IntVec> word;  // application order
    const size_t budget = 10 * roots.size();
    size_t steps = 0;
    while (y != rho) {
        bool moved = false;
        for (const IntVec& r : roots) {
            if (ppair(rho, r) <= 0) continue;  // consider each root once, positively oriented
            if (ppair(y, r) >= 0) continue;
            // s_r(y) = y + <y,r> r strictly increases <y, rho>+.
            y = add(y, scale(pair(gram, y, r), r));
            word.push_back(r);
            moved = true;
            break;
        }
        if (!moved || ++steps > budget) return std::nullopt;
    }

    // The walk w maps g(rho) to rho; with rho separating it follows that
    // w g = id whenever g lies in the group.  Verify exactly.
    IntMatrix m = g.matrix;
    for (const IntVec& r : word) {
        const Isometry s = reflect(l, r);
        m = s.matrix * m;
    }
    if (m != IntMatrix::identity(n)) return std::nullopt;

    ReflectionWord out;
    for (const IntVec& r : word) {
        RatVec q(n);
        for (size_t i = 0; i < n; ++i) q[i] = Rational(r[i]);
        out.factors.push_back(std::move(q));
    }
    return out;
}

}  // namespace ellat
