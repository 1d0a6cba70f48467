#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ellat/cli.hpp"

using namespace ellat;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("ellat_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    std::string write(const std::string& name, const json& j) const {
        const std::string p = (path / name).string();
        std::ofstream f(p);
        f << j.dump();
        return p;
    }
};

struct RunResult {
    int code;
    json out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    RunResult r{code, json(), err.str()};
    if (!out.str().empty()) r.out = json::parse(out.str());
    return r;
}

}  // namespace

TEST_CASE("surface invariants subcommand") {
    TempDir tmp;
    const std::string spec = tmp.write("k3.json", json{{"d", 2}, {"q", 0}, {"multiplicities", json::array()}});
    const RunResult r = run_cli({"surface", "invariants", "--spec", spec});
    REQUIRE(r.code == 0);
    CHECK(r.out["case_tag"] == "K3");
    CHECK(r.out["b_plus"] == 3);
    CHECK(r.out["b_minus"] == 19);
}

TEST_CASE("root enumeration subcommand") {
    TempDir tmp;
    const std::string lat = tmp.write("e8.json", lattice_to_json(Lattice(dynkin_e8_gram(), "-E8")));
    const RunResult r = run_cli({"roots", "enumerate", "--input", lat, "--square", "-2"});
    REQUIRE(r.code == 0);
    CHECK(r.out["count"] == 240);
}

TEST_CASE("lattice info, signature and discriminant subcommands") {
    TempDir tmp;
    const std::string lat = tmp.write("u.json", lattice_to_json(hyperbolic_plane()));
    const RunResult info = run_cli({"lattice", "info", "--input", lat});
    REQUIRE(info.code == 0);
    CHECK(info.out["even"] == true);
    CHECK(info.out["determinant"] == -1);
    const RunResult sig = run_cli({"lattice", "signature", "--input", lat});
    REQUIRE(sig.code == 0);
    CHECK(sig.out["positive"] == 1);
    CHECK(sig.out["negative"] == 1);
    const std::string m2 = tmp.write("m2.json", lattice_to_json(rank_one(-2)));
    const RunResult disc = run_cli({"lattice", "discriminant", "--input", m2});
    REQUIRE(disc.code == 0);
    CHECK(disc.out["invariant_factors"] == json::array({2}));
}

TEST_CASE("surface lattice subcommand on the Enriques model") {
    TempDir tmp;
    const std::string spec = tmp.write("enr.json", json{{"d", 1}, {"q", 0}, {"multiplicities", {2, 2}}});
    const RunResult r = run_cli({"surface", "lattice", "--spec", spec});
    REQUIRE(r.code == 0);
    CHECK(r.out["invariants"]["case_tag"] == "ENRIQUES");
    CHECK(r.out["lattice"]["rank"] == 10);
    // k is the zero vector, p a hyperbolic basis vector
    for (const auto& x : r.out["k"]) CHECK(x == 0);
}

TEST_CASE("decide subcommand on a rational surface") {
    TempDir tmp;
    const std::string spec = tmp.write("rat.json", json{{"d", 1}, {"q", 0}});
    const H2Model m = build_h2bar(SurfaceSpec(1, 0));
    IntMatrix minus = IntMatrix::identity(m.lattice.rank);
    for (size_t i = 0; i < m.lattice.rank; ++i) minus(i, i) = -1;
    const std::string iso = tmp.write("iso.json", isometry_to_json(Isometry{minus}));
    const RunResult r = run_cli({"decide", "--spec", spec, "--isometry", iso});
    REQUIRE(r.code == 0);
    CHECK(r.out["tag"] == "REALIZED");
    CHECK(r.out["case"] == "RATIONAL");
}

TEST_CASE("ebeling check exit code reflects the verdict") {
    TempDir tmp;
    const DeltaModel good = build_delta_model(SurfaceSpec(2, 0));
    const std::string gpath = tmp.write("good.json", delta_to_json(good.delta));
    CHECK(run_cli({"ebeling", "check", "--delta", gpath}).code == 0);

    // simple roots of -E8: hypotheses hold except the six-vertex pattern
    std::vector<IntVec> simple;
    for (size_t i = 0; i < 8; ++i) simple.push_back(unit_vector(8, i));
    const DeltaSet bad = make_delta(Lattice(dynkin_e8_gram(), "-E8"), simple);
    const std::string bpath = tmp.write("bad.json", delta_to_json(bad));
    const RunResult r = run_cli({"ebeling", "check", "--delta", bpath});
    CHECK(r.code == 1);
    CHECK(r.out["spans"] == true);
    CHECK(r.out["diagram_witness"].is_null());
}

TEST_CASE("semidefinite check subcommand") {
    TempDir tmp;
    const DeltaModel dm = build_delta_model(SurfaceSpec(1, 0));
    const std::string dpath = tmp.write("delta.json", delta_to_json(dm.delta));
    json summand = json::array();
    for (const IntVec& v : dm.e8_summand) summand.push_back(intvec_to_json(v));
    const std::string spath = tmp.write("summand.json", summand);
    const RunResult r = run_cli({"semidefinite", "check", "--delta", dpath, "--summand", spath});
    CHECK(r.code == 0);
    CHECK(r.out["conclusion_applicable"] == true);
}

TEST_CASE("verify-paper section runs clean") {
    const RunResult r = run_cli({"verify-paper", "--section", "3"});
    CHECK(r.code == 0);
    CHECK(r.out["all_passed"] == true);
    for (const auto& c : r.out["checks"]) CHECK(c["section"] == 3);
}

TEST_CASE("spinor-norm subcommand") {
    TempDir tmp;
    const Lattice u = hyperbolic_plane();
    const std::string lat = tmp.write("u.json", lattice_to_json(u));
    const std::string iso = tmp.write("s.json", isometry_to_json(reflect(u, IntVec{1, 1})));
    const RunResult r = run_cli({"spinor-norm", "--input", lat, "--isometry", iso});
    REQUIRE(r.code == 0);
    CHECK(r.out["spinor_norm"] == -1);
}

TEST_CASE("orbit subcommand") {
    TempDir tmp;
    std::vector<IntVec> simple;
    for (size_t i = 0; i < 8; ++i) simple.push_back(unit_vector(8, i));
    const DeltaSet delta = make_delta(Lattice(dynkin_e8_gram(), "-E8"), simple);
    const std::string dpath = tmp.write("delta.json", delta_to_json(delta));
    const RunResult r = run_cli({"orbit", "--delta", dpath, "--seed", "[1,0,0,0,0,0,0,0]"});
    REQUIRE(r.code == 0);
    CHECK(r.out["count"] == 240);
}

TEST_CASE("remaining subcommands produce well-formed output") {
    TempDir tmp;
    {
        const std::string lat =
            tmp.write("x1.json", lattice_to_json(build_x1_minus_nf(0).lattice));
        const RunResult r = run_cli({"lattice", "radical", "--input", lat});
        REQUIRE(r.code == 0);
        CHECK(r.out["radical_basis"].size() == 1);
    }
    {
        const std::string lat = tmp.write("u.json", lattice_to_json(hyperbolic_plane()));
        const RunResult r = run_cli({"reflect", "--input", lat, "--vector", "[1,-1]"});
        REQUIRE(r.code == 0);
        CHECK(r.out["matrix"][0][1] == 1);
        const std::string iso = tmp.write("m.json", r.out);
        const RunResult f = run_cli({"factor", "--input", lat, "--isometry", iso});
        REQUIRE(f.code == 0);
        CHECK(f.out["length"].get<int>() >= 1);
    }
    {
        const std::string spec = tmp.write("dol.json", json{{"d", 1}, {"q", 0}, {"multiplicities", {2, 3}}});
        const RunResult lat = run_cli({"surface", "lattice", "--spec", spec});
        REQUIRE(lat.code == 0);
        CHECK(lat.out["invariants"]["case_tag"] == "PG0_NONRATIONAL");
        const RunResult del = run_cli({"surface", "delta", "--spec", spec});
        REQUIRE(del.code == 0);
        CHECK(del.out["fibre_divisibility"] == 6);
        const RunResult tor = run_cli({"surface", "torsion", "--spec", spec});
        REQUIRE(tor.code == 0);
        CHECK(tor.out["m"] == 6);
        CHECK(tor.out["torsion"]["invariant_factors"].empty());
    }
    {
        const RunResult r = run_cli({"surface", "sigma-triple", "--m", "4"});
        REQUIRE(r.code == 0);
        CHECK(r.out.contains("sigma1"));
        CHECK(r.out.contains("f_m"));
    }
    {
        const RunResult r = run_cli({"surface", "e10"});
        REQUIRE(r.code == 0);
        CHECK(r.out["report"]["residuals"]["beta9*beta10"] == "-ls");
        CHECK(r.out["specialized"]["rank"] == 10);
    }
}

TEST_CASE("usage and io errors exit with 2") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"lattice", "info", "--input", "/nonexistent/file.json"}).code == 2);
    CHECK(run_cli({"surface", "invariants"}).code == 2);  // missing --spec
    TempDir tmp;
    const std::string bad = tmp.write("bad.json", json{{"rank", 1}});
    CHECK(run_cli({"lattice", "info", "--input", bad}).code == 2);
    // unknown flags are rejected
    const std::string spec = tmp.write("s.json", json{{"d", 1}, {"q", 0}});
    CHECK(run_cli({"surface", "invariants", "--spec", spec, "--bogus"}).code == 2);
    CHECK(run_cli({"verify-paper", "--section", "6"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    std::ostringstream out, err;
    CHECK(cli::run({"--help"}, out, err) == 0);
    CHECK(out.str().find("lattice") != std::string::npos);
}

TEST_CASE("output file writing") {
    TempDir tmp;
    const std::string spec = tmp.write("s.json", json{{"d", 1}, {"q", 0}});
    const std::string out = (tmp.path / "out.json").string();
    const RunResult r = run_cli({"surface", "invariants", "--spec", spec, "--output", out});
    REQUIRE(r.code == 0);
    std::ifstream f(out);
    json j;
    f >> j;
    CHECK(j["case_tag"] == "RATIONAL");
}
