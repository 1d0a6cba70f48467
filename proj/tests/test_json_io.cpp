#include <catch2/catch_amalgamated.hpp>

#include "ellat/json_io.hpp"

using namespace ellat;

TEST_CASE("lattice json round trip") {
    const Lattice u = hyperbolic_plane();
    const Lattice back = lattice_from_json(lattice_to_json(u));
    CHECK(back.rank == 2);
    CHECK(back.gram == u.gram);
    CHECK(back.label == "U");
}

TEST_CASE("symbolic gram entries serialize as canonical text") {
    Matrix<Scalar> g(2, 2);
    g(0, 0) = Scalar(-2);
    g(1, 1) = Scalar(-2);
    g(0, 1) = Scalar::parse("2*c + d - 1");
    g(1, 0) = g(0, 1);
    const Lattice l(g, "sym");
    const json j = lattice_to_json(l);
    CHECK(j["gram"][0][1] == "2*c + d - 1");
    const Lattice back = lattice_from_json(j);
    CHECK(back.gram == l.gram);
}

TEST_CASE("isometry and vector round trips") {
    const Lattice u = hyperbolic_plane();
    const Isometry s = reflect(u, IntVec{1, -1});
    const Isometry back = isometry_from_json(isometry_to_json(s));
    CHECK(back.matrix == s.matrix);

    const IntVec v{Integer("123456789012345678901234567890"), Integer(-7)};
    CHECK(intvec_from_json(intvec_to_json(v)) == v);
}

TEST_CASE("delta set round trip enforces the invariants") {
    const Lattice e8 = Lattice(dynkin_e8_gram(), "-E8");
    std::vector<IntVec> vs;
    for (size_t i = 0; i < 8; ++i) vs.push_back(unit_vector(8, i));
    const DeltaSet d = make_delta(e8, vs);
    const DeltaSet back = delta_from_json(delta_to_json(d));
    CHECK(back.vectors == d.vectors);

    json bad = delta_to_json(d);
    bad["vectors"].push_back(bad["vectors"][0]);  // duplicate
    CHECK_THROWS_AS(delta_from_json(bad), std::invalid_argument);
}

TEST_CASE("surface spec round trip and defaults") {
    const SurfaceSpec s(2, 1, {3, 2});
    const SurfaceSpec back = spec_from_json(spec_to_json(s));
    CHECK(back.d == 2);
    CHECK(back.q == 1);
    CHECK(back.multiplicities == std::vector<long>{2, 3});  // canonicalized sorted
    CHECK(spec_from_json(json{{"d", 1}, {"q", 0}}).multiplicities.empty());
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(lattice_from_json(json{{"rank", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"rank":2,"gram":[[0,1],[1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"rank":3,"gram":[[0,1],[1,0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(isometry_from_json(json{{"rank", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_json(json{{"d", 1}}), std::invalid_argument);
}

TEST_CASE("asymmetric gram is rejected on input") {
    CHECK_THROWS_AS(lattice_from_json(json::parse(R"({"rank":2,"gram":[[0,1],[2,0]]})")),
                    std::invalid_argument);
}
