#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "ellat/dynkin.hpp"
#include "ellat/lattice_ops.hpp"
#include "ellat/surface.hpp"
#include "ellat/surface_models.hpp"
#include "ellat/ebeling.hpp"
#include "ellat/symbolic_checks.hpp"

using namespace ellat;

TEST_CASE("surface invariants for the benchmark surfaces") {
    {
        const SurfaceInvariants s = surface_invariants(SurfaceSpec(2, 0));
        CHECK(s.p_g == 1);
        CHECK(s.kappa == 0);
        CHECK(s.case_tag == CaseTag::K3);
        CHECK(s.b_plus == 3);
        CHECK(s.b_minus == 19);
        CHECK(s.b2 == 22);
        CHECK(s.even);
    }
    {
        const SurfaceInvariants s = surface_invariants(SurfaceSpec(1, 0, {2, 2}));
        CHECK(s.p_g == 0);
        CHECK(s.m == 2);
        CHECK(s.kappa == 0);
        CHECK(s.case_tag == CaseTag::ENRIQUES);
    }
    {
        const SurfaceInvariants s = surface_invariants(SurfaceSpec(1, 0, {2, 3}));
        CHECK(s.m == 6);
        CHECK(s.kappa == 1);
        CHECK(s.case_tag == CaseTag::PG0_NONRATIONAL);
        CHECK_FALSE(s.even);
    }
    CHECK(surface_invariants(SurfaceSpec(1, 0)).case_tag == CaseTag::RATIONAL);
    CHECK(surface_invariants(SurfaceSpec(3, 0)).case_tag == CaseTag::PG_POSITIVE);
    CHECK(surface_invariants(SurfaceSpec(1, 1)).case_tag == CaseTag::PG_POSITIVE);
    CHECK_THROWS_AS(SurfaceSpec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceSpec(1, 0, {1}), std::invalid_argument);
}

TEST_CASE("x1 complement model structure") {
    for (long n = 0; n <= 3; ++n) {
        const X1Model m = build_x1_minus_nf(n);
        const size_t na = size_t(2 * n + 1);
        CHECK(m.lattice.rank == na + 8);
        CHECK(m.delta.vectors.size() == na + 8);
        // every alpha meets beta_8 once and the alphas form the -2 clique
        for (size_t i = 0; i < na; ++i) {
            CHECK(pair(m.lattice, unit_vector(na + 8, i), unit_vector(na + 8, na + 7)) == 1);
            for (size_t j = 0; j < na; ++j)
                CHECK(pair(m.lattice, unit_vector(na + 8, i), unit_vector(na + 8, j)) == -2);
        }
        // the long vector sees only beta_8
        for (size_t j = 0; j < 8; ++j)
            CHECK(pair(m.lattice, m.ell, unit_vector(na + 8, na + j)) == (j == 7 ? -1 : 0));
        CHECK(pair(m.lattice, m.ell, m.ell) == -2);
        // radical basis members really are radical
        for (const IntVec& r : m.radical_basis)
            for (size_t j = 0; j < m.lattice.rank; ++j)
                CHECK(pair(m.lattice, r, unit_vector(m.lattice.rank, j)) == 0);
    }
}

TEST_CASE("irregular construction: identities and exact residuals") {
    const ConstructionReport rep = verify_irregular_generating_set();
    // epsilon rows are identities
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j)
            CHECK(rep.entry_verified("eps" + std::to_string(i) + "*eps" + std::to_string(j)));
        CHECK(rep.entry_verified("eps" + std::to_string(i) + "*gamma"));
        CHECK(rep.entry_verified("eps" + std::to_string(i) + "*delta"));
        CHECK(rep.entry_verified("eps" + std::to_string(i) + "*beta8"));
    }
    // beta block: every entry except the beta_8 square is an identity
    for (int i = 1; i <= 8; ++i)
        for (int j = i; j <= 8; ++j) {
            const std::string key = "beta" + std::to_string(i) + "*beta" + std::to_string(j);
            if (key == "beta8*beta8") continue;
            CHECK(rep.entry_verified(key));
        }
    // the four emitted residuals, regression-pinned
    CHECK(rep.residuals.at("beta8*gamma").str() == "A*c + B*c");
    CHECK(rep.residuals.at("beta8*delta").str() == "A*d + B*d");
    CHECK(rep.residuals.at("beta8*beta8").str() == "-2*A^2 - 4*A*B - 2*B^2 + 2*A + 2*B");
    CHECK(rep.residuals.at("gamma*delta").str() == "gd");
    CHECK(rep.free_parameters == std::vector<std::string>{"A", "B", "c", "d", "gd"});
    // and they appear in the constraint list
    CHECK(rep.constraints_required.size() == 4);
}

TEST_CASE("delta models across the case split") {
    {
        const DeltaModel dm = build_delta_model(SurfaceSpec(1, 1));
        CHECK(dm.delta.vectors.size() == 20);
        CHECK(dm.lattice.rank == 20);
    }
    {
        const DeltaModel dm = build_delta_model(SurfaceSpec(1, 0));
        const X1Model x1 = build_x1_minus_nf(1);
        CHECK(dm.lattice.integer_gram() == x1.lattice.integer_gram());
    }
    {
        const DeltaModel dm = build_delta_model(SurfaceSpec(2, 1));
        const size_t n = dm.delta.vectors.size();
        // zeta classes pair once with one alpha in each adjacent summand
        const IntVec& z1 = dm.delta.vectors[n - 2];
        CHECK(pair(dm.lattice, z1, dm.delta.vectors[0]) == 1);
        CHECK(pair(dm.lattice, z1, dm.delta.vectors[15]) == 1);
        Integer hits = 0;
        for (const IntVec& v : dm.delta.vectors)
            if (pair(dm.lattice, z1, v) != 0) ++hits;
        CHECK(hits == 3);  // two alphas and zeta itself
    }
    {
        const DeltaModel dm = build_delta_model(SurfaceSpec(1, 0, {2, 3}));
        CHECK(dm.fibre_divisibility == 6);
        // the fibre is 6 * phi, so its content is 6
        Integer content = 0;
        for (const Integer& x : dm.fibre) content = gcd(content, x);
        CHECK(content == 6);
        // and it lies in the radical
        for (size_t j = 0; j < dm.lattice.rank; ++j)
            CHECK(pair(dm.lattice, dm.fibre, unit_vector(dm.lattice.rank, j)) == 0);
    }
}

TEST_CASE("regular surfaces follow the case split of the generation pipeline") {
    // q = 0, no multiple fibres: the criterion applies for d >= 2, the
    // semi-definite route for d = 1.
    for (long d = 2; d <= 3; ++d) {
        const DeltaModel dm = build_delta_model(SurfaceSpec(d, 0));
        CHECK(check_ebeling(dm.lattice, dm.delta).conclusion_applicable);
    }
    const DeltaModel base = build_delta_model(SurfaceSpec(1, 0));
    CHECK(check_semidefinite_lemma(base.lattice, base.delta, base.e8_summand).conclusion_applicable);
}

TEST_CASE("the irregular q=2 model passes the generation criterion") {
    const DeltaModel dm = build_delta_model(SurfaceSpec(1, 2));
    // 7 alphas + 8 betas + 3 gammas + 3 deltas + 3 epsilons
    CHECK(dm.delta.vectors.size() == 24);
    CHECK(check_ebeling(dm.lattice, dm.delta).conclusion_applicable);
}

TEST_CASE("the designated fibre class is radical in every model") {
    for (const SurfaceSpec& spec : {SurfaceSpec(1, 0), SurfaceSpec(2, 0), SurfaceSpec(1, 1),
                                    SurfaceSpec(2, 1), SurfaceSpec(1, 0, {2, 3}),
                                    SurfaceSpec(2, 0, {3, 4}), SurfaceSpec(1, 1, {2}),
                                    SurfaceSpec(2, 1, {2, 2}), SurfaceSpec(3, 0, {2, 3, 4})}) {
        const DeltaModel dm = build_delta_model(spec);
        for (size_t j = 0; j < dm.lattice.rank; ++j)
            CHECK(pair(dm.lattice, dm.fibre, unit_vector(dm.lattice.rank, j)) == 0);
        CHECK(spans_lattice(dm.lattice, dm.delta.vectors));
    }
}

TEST_CASE("sigma triples") {
    for (long m : {2L, 3L, 7L}) {
        const SigmaTriple t = build_sigma_triple(m);
        CHECK(pair(t.lattice, t.sigma1, t.sigma1) == -2);
        CHECK(pair(t.lattice, t.sigma2, t.sigma2) == -2);
        CHECK(pair(t.lattice, t.sigma1, t.sigma2) == -2);
        CHECK(sub(t.sigma1, t.sigma2) == t.f_m);
        CHECK(pair(t.lattice, t.f_m, t.f_m) == 0);
        CHECK(pair(t.lattice, t.sigma1, t.sigma3) == 1);
        CHECK(pair(t.lattice, t.sigma2, t.sigma3) == 1);
        CHECK(t.fibre == scale(Integer(m), t.f_m));
        // divisibility by m, read off the coordinate content
        Integer content = 0;
        for (const Integer& x : t.fibre) content = gcd(content, x);
        CHECK(content == m);
    }
    CHECK_THROWS_AS(build_sigma_triple(1), std::invalid_argument);
}

TEST_CASE("torsion of the fibre complement") {
    CHECK(torsion_of_complement({}).group.trivial());
    CHECK(torsion_of_complement({}).m == 1);
    {
        const TorsionResult t = torsion_of_complement({2, 3});
        CHECK(t.m == 6);
        CHECK(t.group.trivial());
    }
    {
        const TorsionResult t = torsion_of_complement({2, 2});
        CHECK(t.m == 2);
        CHECK(t.group.invariant_factors == std::vector<Integer>{2});
    }
    {
        const TorsionResult t = torsion_of_complement({3, 3, 3});
        CHECK(t.m == 3);
        CHECK(t.group.invariant_factors == std::vector<Integer>{3, 3});
    }
    CHECK_THROWS_AS(torsion_of_complement({1, 2}), std::invalid_argument);
}

TEST_CASE("full lattice models") {
    {
        const H2Model m = build_h2bar(SurfaceSpec(2, 0));
        CHECK(m.lattice.rank == 22);
        CHECK(m.lattice.is_even());
        CHECK(signature(m.lattice) == Signature{3, 19, 0});
        CHECK(is_zero_vector(m.k));
        CHECK(pair(m.lattice, m.p, m.p) == 0);
    }
    {
        const H2Model m = build_h2bar(SurfaceSpec(1, 0));
        CHECK(m.lattice.rank == 10);
        CHECK_FALSE(m.lattice.is_even());
        IntVec expect(10, Integer(1));
        expect[0] = 3;
        CHECK(m.p == expect);
        CHECK(m.k == scale(Integer(-1), m.p));
        CHECK(is_characteristic(m.lattice, m.k));
    }
    {
        const H2Model m = build_h2bar(SurfaceSpec(1, 0, {2, 3}));
        CHECK(m.k == m.p);
        CHECK(divisibility(m.lattice, m.k) == 1);
    }
}

TEST_CASE("random specs satisfy the numeric postconditions") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        const long d = 1 + long(rng() % 3), q = long(rng() % 3);
        std::vector<long> ms;
        const int nm = int(rng() % 4);
        for (int i = 0; i < nm; ++i) ms.push_back(2 + long(rng() % 4));
        const SurfaceSpec spec(d, q, ms);
        const SurfaceInvariants inv = surface_invariants(spec);
        const H2Model m = build_h2bar(spec);
        CHECK(pair(m.lattice, m.k, m.k) == 0);
        CHECK(is_characteristic(m.lattice, m.k));
        CHECK(divisibility(m.lattice, m.k) == abs(Integer(inv.kappa)));
        CHECK(signature(m.lattice) == Signature{size_t(2 * d + 2 * q - 1), size_t(10 * d + 2 * q - 1), 0});
        CHECK(m.lattice.is_even() == inv.even);
    }
}

TEST_CASE("E10 basis verification") {
    const E10Result r = build_e10_basis();
    for (const auto& [key, res] : r.report.residuals) {
        if (key == "beta9*beta10") {
            CHECK(res.str() == "-ls");
        } else {
            CHECK(res.is_zero());
        }
    }
    CHECK(r.report.constraints_required == std::vector<std::string>{"-ls"});
    CHECK(r.specialized.is_even());
    CHECK(lattice_determinant(r.specialized) == -1);
    CHECK(signature(r.specialized) == Signature{1, 9, 0});
    CHECK(r.specialized.integer_gram() == dynkin_e10_gram());

    // fixing sigma pairings removes them from the parameter list
    const E10Result fixed = build_e10_basis({{1, Integer(4)}, {8, Integer(-1)}});
    CHECK(std::find(fixed.report.free_parameters.begin(), fixed.report.free_parameters.end(), "s1") ==
          fixed.report.free_parameters.end());
    for (const auto& [key, res] : fixed.report.residuals)
        if (key != "beta9*beta10") CHECK(res.is_zero());
}
