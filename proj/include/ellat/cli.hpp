#pragma once
// Command line dispatch.  Kept in a header so the test suite can drive the
// exact code path the binary uses.  Exit codes: 0 success, 1 a requested
// check failed, 2 usage or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellat/json_io.hpp"
#include "ellat/root_enum.hpp"
#include "ellat/verify.hpp"
#include "ellat/weyl_word.hpp"

namespace ellat::cli {

namespace detail {

inline json read_json_file(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline json parse_inline_json(const std::string& text) { return json::parse(text); }

struct Output {
    std::string path;  // empty = stdout
    void emit(const json& j, std::ostream& out) const {
        if (path.empty()) {
            out << j.dump(2) << "\n";
        } else {
            std::ofstream f(path);
            if (!f) throw std::invalid_argument("cannot write " + path);
            f << j.dump(2) << "\n";
        }
    }
};

}  // namespace detail

// Runs one invocation.  `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice toolkit for elliptic-surface homology"};
    app.require_subcommand(1);

    std::string input_path, output_path, delta_path, isometry_path, spec_path, summand_path;
    std::string vector_text, seed_text;
    long square_target = -2;
    std::optional<long> bound;
    std::optional<int> witness_parity, section;
    long sigma_m = 2;

    detail::Output output;

    // lattice info|radical|signature|discriminant
    auto* lattice_cmd = app.add_subcommand("lattice", "inspect a lattice");
    lattice_cmd->require_subcommand(1);
    std::vector<CLI::App*> lattice_subs;
    for (const char* name : {"info", "radical", "signature", "discriminant"}) {
        auto* sub = lattice_cmd->add_subcommand(name);
        sub->add_option("--input", input_path, "lattice JSON file")->required();
        sub->add_option("--output", output_path);
        lattice_subs.push_back(sub);
    }

    auto* roots_cmd = app.add_subcommand("roots", "vector enumeration");
    auto* roots_enum = roots_cmd->add_subcommand("enumerate");
    roots_enum->add_option("--input", input_path, "lattice JSON file")->required();
    roots_enum->add_option("--square", square_target, "target square")->required();
    roots_enum->add_option("--bound", bound, "coordinate bound (required if indefinite)");
    roots_enum->add_option("--output", output_path);

    auto* orbit_cmd = app.add_subcommand("orbit", "reflection orbit closure");
    orbit_cmd->add_option("--delta", delta_path, "delta set JSON file")->required();
    orbit_cmd->add_option("--seed", seed_text, "seed vector, e.g. [1,0,0]")->required();
    orbit_cmd->add_option("--bound", bound);
    orbit_cmd->add_option("--output", output_path);

    auto* reflect_cmd = app.add_subcommand("reflect", "reflection in a vector");
    reflect_cmd->add_option("--input", input_path, "lattice JSON file")->required();
    reflect_cmd->add_option("--vector", vector_text, "vector, e.g. [1,0,0]")->required();
    reflect_cmd->add_option("--output", output_path);

    auto* spinor_cmd = app.add_subcommand("spinor-norm", "real spinor norm of an isometry");
    spinor_cmd->add_option("--input", input_path, "lattice JSON file")->required();
    spinor_cmd->add_option("--isometry", isometry_path)->required();
    spinor_cmd->add_option("--output", output_path);

    auto* factor_cmd = app.add_subcommand("factor", "reflection factorization");
    factor_cmd->add_option("--input", input_path, "lattice JSON file")->required();
    factor_cmd->add_option("--isometry", isometry_path)->required();
    factor_cmd->add_option("--output", output_path);

    auto* ebeling_cmd = app.add_subcommand("ebeling", "generation criterion");
    auto* ebeling_check = ebeling_cmd->add_subcommand("check");
    ebeling_check->add_option("--delta", delta_path)->required();
    ebeling_check->add_option("--output", output_path);

    auto* semi_cmd = app.add_subcommand("semidefinite", "semi-definite criterion");
    auto* semi_check = semi_cmd->add_subcommand("check");
    semi_check->add_option("--delta", delta_path)->required();
    semi_check->add_option("--summand", summand_path, "JSON array of basis vectors")->required();
    semi_check->add_option("--output", output_path);

    auto* surface_cmd = app.add_subcommand("surface", "surface models");
    surface_cmd->require_subcommand(1);
    for (const char* name : {"invariants", "lattice", "delta", "torsion"}) {
        auto* sub = surface_cmd->add_subcommand(name);
        sub->add_option("--spec", spec_path, "surface spec JSON file")->required();
        sub->add_option("--output", output_path);
    }
    auto* surface_sigma = surface_cmd->add_subcommand("sigma-triple");
    surface_sigma->add_option("--m", sigma_m, "multiplicity")->required();
    surface_sigma->add_option("--output", output_path);
    auto* surface_e10 = surface_cmd->add_subcommand("e10");
    surface_e10->add_option("--output", output_path);

    auto* decide_cmd = app.add_subcommand("decide", "realization decision");
    decide_cmd->add_option("--spec", spec_path)->required();
    decide_cmd->add_option("--isometry", isometry_path)->required();
    decide_cmd->add_option("--witness-parity", witness_parity, "+1 or -1");
    decide_cmd->add_option("--output", output_path);

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full check battery");
    verify_cmd->add_option("--section", section, "restrict to one section (1-5)");
    verify_cmd->add_option("--output", output_path);

    try {
        std::vector<const char*> argv;
        argv.push_back("ellat");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11.
            std::ostringstream os;
            os << app.help();
            out << os.str();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    output.path = output_path;
    try {
        if (lattice_subs[0]->parsed() || lattice_subs[1]->parsed() || lattice_subs[2]->parsed() ||
            lattice_subs[3]->parsed()) {
            const Lattice l = lattice_from_json(detail::read_json_file(input_path));
            if (lattice_subs[0]->parsed()) {
                json j{{"rank", l.rank}, {"label", l.label}};
                if (l.has_integer_gram()) {
                    j["even"] = l.is_even();
                    j["signature"] = signature_to_json(signature(l));
                    j["determinant"] = scalar_to_json(Scalar(lattice_determinant(l)));
                    j["radical_rank"] = radical(l).size();
                    if (is_nondegenerate(l)) j["discriminant_group"] = group_to_json(discriminant_group(l));
                } else {
                    json params = json::array();
                    for (size_t i = 0; i < l.rank; ++i)
                        for (size_t jj = 0; jj < l.rank; ++jj)
                            for (const std::string& p : l.gram(i, jj).parameters())
                                if (std::find(params.begin(), params.end(), json(p)) == params.end())
                                    params.push_back(p);
                    j["symbolic"] = true;
                    j["parameters"] = params;
                }
                output.emit(j, out);
            } else if (lattice_subs[1]->parsed()) {
                json basis = json::array();
                for (const IntVec& v : radical(l)) basis.push_back(intvec_to_json(v));
                output.emit(json{{"radical_basis", basis}}, out);
            } else if (lattice_subs[2]->parsed()) {
                output.emit(signature_to_json(signature(l)), out);
            } else {
                output.emit(group_to_json(discriminant_group(l)), out);
            }
            return 0;
        }
        if (roots_enum->parsed()) {
            const Lattice l = lattice_from_json(detail::read_json_file(input_path));
            const auto vs = enumerate_vectors_of_square(l, Integer(square_target), bound);
            json a = json::array();
            for (const IntVec& v : vs) a.push_back(intvec_to_json(v));
            output.emit(json{{"count", vs.size()}, {"vectors", a}}, out);
            return 0;
        }
        if (orbit_cmd->parsed()) {
            const DeltaSet d = delta_from_json(detail::read_json_file(delta_path));
            const IntVec seed = intvec_from_json(detail::parse_inline_json(seed_text));
            const auto orbit = orbit_closure(d, {seed}, bound);
            json a = json::array();
            for (const IntVec& v : orbit) a.push_back(intvec_to_json(v));
            output.emit(json{{"count", orbit.size()}, {"vectors", a}}, out);
            return 0;
        }
        if (reflect_cmd->parsed()) {
            const Lattice l = lattice_from_json(detail::read_json_file(input_path));
            const IntVec v = intvec_from_json(detail::parse_inline_json(vector_text));
            output.emit(isometry_to_json(reflect(l, v)), out);
            return 0;
        }
        if (spinor_cmd->parsed()) {
            const Lattice l = lattice_from_json(detail::read_json_file(input_path));
            const Isometry g = isometry_from_json(detail::read_json_file(isometry_path));
            if (!is_isometry(l, g.matrix)) throw std::invalid_argument("matrix is not an isometry");
            output.emit(json{{"spinor_norm", spinor_norm(l, g)}}, out);
            return 0;
        }
        if (factor_cmd->parsed()) {
            const Lattice l = lattice_from_json(detail::read_json_file(input_path));
            const Isometry g = isometry_from_json(detail::read_json_file(isometry_path));
            if (!is_isometry(l, g.matrix)) throw std::invalid_argument("matrix is not an isometry");
            const ReflectionWord w = factor_into_reflections(l, g);
            json factors = json::array();
            for (const RatVec& v : w.factors) {
                json fv = json::array();
                for (const Rational& x : v) fv.push_back(x.get_str());
                factors.push_back(fv);
            }
            output.emit(json{{"length", w.length()}, {"factors", factors}}, out);
            return 0;
        }
        if (ebeling_check->parsed()) {
            const DeltaSet d = delta_from_json(detail::read_json_file(delta_path));
            const EbelingReport r = check_ebeling(d.lattice, d);
            output.emit(ebeling_report_to_json(r), out);
            return r.conclusion_applicable ? 0 : 1;
        }
        if (semi_check->parsed()) {
            const DeltaSet d = delta_from_json(detail::read_json_file(delta_path));
            const json sj = detail::read_json_file(summand_path);
            std::vector<IntVec> summand;
            for (const auto& vj : sj) summand.push_back(intvec_from_json(vj));
            const SemidefiniteReport r = check_semidefinite_lemma(d.lattice, d, summand);
            output.emit(semidefinite_report_to_json(r), out);
            return r.conclusion_applicable ? 0 : 1;
        }
        if (surface_cmd->parsed()) {
            if (surface_sigma->parsed()) {
                const SigmaTriple t = build_sigma_triple(sigma_m);
                output.emit(json{{"lattice", lattice_to_json(t.lattice)},
                                 {"sigma1", intvec_to_json(t.sigma1)},
                                 {"sigma2", intvec_to_json(t.sigma2)},
                                 {"sigma3", intvec_to_json(t.sigma3)},
                                 {"f_m", intvec_to_json(t.f_m)},
                                 {"fibre", intvec_to_json(t.fibre)}},
                            out);
                return 0;
            }
            if (surface_e10->parsed()) {
                const E10Result r = build_e10_basis();
                json vs = json::array();
                for (const ScalarVec& v : r.vectors) {
                    json row = json::array();
                    for (const Scalar& s : v) row.push_back(scalar_to_json(s));
                    vs.push_back(row);
                }
                output.emit(json{{"report", construction_report_to_json(r.report)},
                                 {"vectors", vs},
                                 {"specialized", lattice_to_json(r.specialized)},
                                 {"specialized_determinant", r.specialized_determinant.get_si()},
                                 {"specialized_even", r.specialized_even},
                                 {"specialized_signature", signature_to_json(r.specialized_signature)}},
                            out);
                return 0;
            }
            const SurfaceSpec spec = spec_from_json(detail::read_json_file(spec_path));
            const std::string verb = surface_cmd->get_subcommands().front()->get_name();
            if (verb == "invariants") {
                output.emit(invariants_to_json(surface_invariants(spec)), out);
            } else if (verb == "lattice") {
                const H2Model m = build_h2bar(spec);
                output.emit(json{{"lattice", lattice_to_json(m.lattice)},
                                 {"k", intvec_to_json(m.k)},
                                 {"p", intvec_to_json(m.p)},
                                 {"invariants", invariants_to_json(m.invariants)}},
                            out);
            } else if (verb == "delta") {
                const DeltaModel m = build_delta_model(spec);
                json e8 = json::array();
                for (const IntVec& v : m.e8_summand) e8.push_back(intvec_to_json(v));
                output.emit(json{{"delta", delta_to_json(m.delta)},
                                 {"e8_summand", e8},
                                 {"fibre", intvec_to_json(m.fibre)},
                                 {"fibre_divisibility", m.fibre_divisibility}},
                            out);
            } else {  // torsion
                const TorsionResult t = torsion_of_complement(spec.multiplicities);
                output.emit(json{{"m", t.m}, {"torsion", group_to_json(t.group)}}, out);
            }
            return 0;
        }
        if (decide_cmd->parsed()) {
            const SurfaceSpec spec = spec_from_json(detail::read_json_file(spec_path));
            const Isometry g = isometry_from_json(detail::read_json_file(isometry_path));
            std::optional<int> wp;
            if (witness_parity) {
                if (*witness_parity != 1 && *witness_parity != -1)
                    throw std::invalid_argument("--witness-parity must be +1 or -1");
                wp = *witness_parity;
            }
            const Verdict v = decide(spec, g, wp);
            output.emit(verdict_to_json(v), out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (section && (*section < 1 || *section > 5))
                throw std::invalid_argument("--section must be 1..5");
            const std::vector<CheckResult> results = run_paper_checks(section);
            bool all = true;
            json checks = json::array();
            for (const CheckResult& r : results) {
                all = all && r.passed;
                checks.push_back(json{{"name", r.name},
                                      {"section", r.section},
                                      {"passed", r.passed},
                                      {"details", r.details}});
                err << (r.passed ? "PASS" : "FAIL") << " [" << r.section << "] " << r.name << "\n";
            }
            output.emit(json{{"checks", checks}, {"all_passed", all}}, out);
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace ellat::cli
