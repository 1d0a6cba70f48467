#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ellat/decider.hpp"
#include "ellat/sampling.hpp"

using namespace ellat;

namespace {

Isometry minus_id(const Lattice& l) {
    IntMatrix m = IntMatrix::identity(l.rank);
    for (size_t i = 0; i < l.rank; ++i) m(i, i) = -1;
    return Isometry{std::move(m)};
}

}  // namespace

TEST_CASE("k action classification") {
    const H2Model m = build_h2bar(SurfaceSpec(1, 0, {2, 3}));
    CHECK(k_action(m.lattice, m.k, identity_isometry(m.lattice)) == KAction::FIX);
    CHECK(k_action(m.lattice, m.k, minus_id(m.lattice)) == KAction::NEGATE);
    const Isometry s = reflect(m.lattice, unit_vector(m.lattice.rank, size_t(m.invariants.b_plus)));
    CHECK(k_action(m.lattice, m.k, s) == KAction::OTHER);
    // trivial k is always fixed
    const H2Model k3 = build_h2bar(SurfaceSpec(2, 0));
    CHECK(k_action(k3.lattice, k3.k, minus_id(k3.lattice)) == KAction::FIX);
}

TEST_CASE("the inversion isometry on the K3 model lives on the second hyperbolic block") {
    const H2Model m = build_h2bar(SurfaceSpec(2, 0));
    const Isometry iota = build_iota(m);
    // -id on coordinates 2,3; identity elsewhere
    IntMatrix expect = IntMatrix::identity(m.lattice.rank);
    expect(2, 2) = -1;
    expect(3, 3) = -1;
    CHECK(iota.matrix == expect);
    CHECK(spinor_norm(m.lattice, iota) == -1);
    CHECK(positive_orientation_character(m.lattice, iota) == -1);
    CHECK(k_action(m.lattice, m.k, iota) == KAction::FIX);
}

TEST_CASE("the inversion isometry exists on even and odd positive-genus models") {
    for (const SurfaceSpec& spec : {SurfaceSpec(2, 0), SurfaceSpec(2, 1), SurfaceSpec(1, 1),
                                    SurfaceSpec(3, 0), SurfaceSpec(2, 0, {2, 5})}) {
        const H2Model m = build_h2bar(spec);
        const Isometry iota = build_iota(m);
        CHECK(iota.matrix * iota.matrix == IntMatrix::identity(m.lattice.rank));
        CHECK(k_action(m.lattice, m.k, iota) == KAction::FIX);
        CHECK(spinor_norm(m.lattice, iota) == -1);
        CHECK(positive_orientation_character(m.lattice, iota) == -1);
    }
    CHECK_THROWS_AS(build_iota(build_h2bar(SurfaceSpec(1, 0))), std::invalid_argument);
    CHECK_THROWS_AS(build_iota(build_h2bar(SurfaceSpec(1, 0, {2, 3}))), std::invalid_argument);
}

TEST_CASE("decision table: rational and Enriques accept everything") {
    std::mt19937_64 rng(41);
    const H2Model rat = build_h2bar(SurfaceSpec(1, 0));
    const H2Model enr = build_h2bar(SurfaceSpec(1, 0, {2, 2}));
    for (int t = 0; t < 6; ++t) {
        CHECK(decide(rat, sample_isometry(rat.lattice, rng)).tag == VerdictTag::REALIZED);
        CHECK(decide(enr, sample_isometry(enr.lattice, rng)).tag == VerdictTag::REALIZED);
    }
}

TEST_CASE("decision table: K3 follows the spinor norm") {
    std::mt19937_64 rng(43);
    const H2Model m = build_h2bar(SurfaceSpec(2, 0));
    for (int t = 0; t < 6; ++t) {
        const Isometry g = sample_isometry(m.lattice, rng);
        const Verdict v = decide(m, g);
        CHECK((v.tag == VerdictTag::REALIZED) == (v.spinor == 1));
        CHECK(v.tag != VerdictTag::COSET_DEPENDENT);
    }
    CHECK(decide(m, build_iota(m)).tag == VerdictTag::NOT_REALIZED);
    // -id on the K3 model: theta = (-1)^{b+} = -1
    const Verdict v = decide(m, minus_id(m.lattice));
    CHECK(v.spinor == -1);
    CHECK(v.tag == VerdictTag::NOT_REALIZED);
}

TEST_CASE("decision table: genus zero non-rational tracks the k action") {
    const H2Model m = build_h2bar(SurfaceSpec(1, 0, {2, 3}));
    // FIX witness: reflection in a root orthogonal to k
    IntVec root(m.lattice.rank, Integer(0));
    root[size_t(m.invariants.b_plus) + 1] = 1;
    root[size_t(m.invariants.b_plus) + 2] = -1;
    const Isometry fix = reflect(m.lattice, root);
    REQUIRE(k_action(m.lattice, m.k, fix) == KAction::FIX);
    CHECK(decide(m, fix).tag == VerdictTag::REALIZED);

    CHECK(decide(m, minus_id(m.lattice)).tag == VerdictTag::REALIZED);

    const Isometry other = reflect(m.lattice, unit_vector(m.lattice.rank, size_t(m.invariants.b_plus)));
    REQUIRE(k_action(m.lattice, m.k, other) == KAction::OTHER);
    CHECK(decide(m, other).tag == VerdictTag::NOT_REALIZED);
}

TEST_CASE("decision table: the negating coset needs the witness parity") {
    const H2Model m = build_h2bar(SurfaceSpec(3, 0));
    REQUIRE(m.invariants.case_tag == CaseTag::PG_POSITIVE);
    const Isometry g = minus_id(m.lattice);
    const Verdict open_v = decide(m, g);
    CHECK(open_v.tag == VerdictTag::COSET_DEPENDENT);
    CHECK(open_v.action == KAction::NEGATE);
    const Verdict match = decide(m, g, open_v.spinor);
    CHECK(match.tag == VerdictTag::REALIZED);
    const Verdict differ = decide(m, g, -open_v.spinor);
    CHECK(differ.tag == VerdictTag::NOT_REALIZED);
}

TEST_CASE("stabilizer predicates") {
    const H2Model m = build_h2bar(SurfaceSpec(3, 0));
    IntVec root(m.lattice.rank, Integer(0));
    root[size_t(m.invariants.b_plus) + 1] = 1;
    root[size_t(m.invariants.b_plus) + 2] = -1;
    const Isometry fix = reflect(m.lattice, root);
    const StabilizerPredicates p = stabilizer_predicates(m.lattice, m.k, fix);
    CHECK(p.in_O_k);
    CHECK(p.in_Oprime);
    CHECK(p.in_Oprime_k);

    const StabilizerPredicates pm = stabilizer_predicates(m.lattice, m.k, minus_id(m.lattice));
    CHECK_FALSE(pm.in_O_k);

    const StabilizerPredicates pi = stabilizer_predicates(m.lattice, m.k, build_iota(m));
    CHECK(pi.in_O_k);
    CHECK_FALSE(pi.in_Oprime);
    CHECK(pi.orientation_character == -1);
}

TEST_CASE("verdicts are invariant under conjugation by realized reflections") {
    std::mt19937_64 rng(47);
    const H2Model m = build_h2bar(SurfaceSpec(1, 0, {2, 3}));
    IntVec root(m.lattice.rank, Integer(0));
    root[size_t(m.invariants.b_plus) + 1] = 1;
    root[size_t(m.invariants.b_plus) + 2] = -1;
    const Isometry s = reflect(m.lattice, root);
    for (int t = 0; t < 6; ++t) {
        const Isometry g = sample_isometry(m.lattice, rng);
        const Isometry conj = compose(compose(s, g), s);
        CHECK(decide(m, g).tag == decide(m, conj).tag);
    }
}

TEST_CASE("coset-dependent verdicts occur only where they should") {
    std::mt19937_64 rng(53);
    for (const SurfaceSpec& spec : {SurfaceSpec(1, 0), SurfaceSpec(1, 0, {2, 2}), SurfaceSpec(2, 0),
                                    SurfaceSpec(1, 0, {2, 3}), SurfaceSpec(3, 0)}) {
        const H2Model m = build_h2bar(spec);
        for (int t = 0; t < 5; ++t) {
            const Isometry g = sample_isometry(m.lattice, rng, 4);
            const Verdict v = decide(m, g);
            if (v.tag == VerdictTag::COSET_DEPENDENT) {
                CHECK(m.invariants.case_tag == CaseTag::PG_POSITIVE);
                CHECK(v.action == KAction::NEGATE);
            }
        }
    }
}

TEST_CASE("realized k-fixing isometries compose to realized k-fixing isometries") {
    std::mt19937_64 rng(59);
    const H2Model m = build_h2bar(SurfaceSpec(2, 0));
    std::vector<Isometry> good;
    while (good.size() < 4) {
        const Isometry g = sample_isometry(m.lattice, rng, 2);
        const Verdict v = decide(m, g);
        if (v.tag == VerdictTag::REALIZED && v.action == KAction::FIX) good.push_back(g);
    }
    for (size_t i = 0; i < good.size(); ++i)
        for (size_t j = 0; j < good.size(); ++j) {
            const Verdict v = decide(m, compose(good[i], good[j]));
            CHECK(v.tag == VerdictTag::REALIZED);
            CHECK(v.action == KAction::FIX);
        }
}

TEST_CASE("decide rejects non-isometries") {
    const H2Model m = build_h2bar(SurfaceSpec(1, 0));
    IntMatrix bad = IntMatrix::identity(m.lattice.rank);
    bad(0, 0) = 2;
    CHECK_THROWS_AS(decide(m, Isometry{bad}), std::invalid_argument);
}
