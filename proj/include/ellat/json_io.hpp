#pragma once
// JSON forms of the public value types.  Gram entries are numbers when they
// are integers that fit, canonical polynomial text otherwise; vectors are
// flat integer arrays.

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

#include "ellat/decider.hpp"
#include "ellat/delta.hpp"
#include "ellat/ebeling.hpp"
#include "ellat/lattice.hpp"
#include "ellat/surface.hpp"
#include "ellat/surface_models.hpp"
#include "ellat/symbolic_checks.hpp"

namespace ellat {

using json = nlohmann::json;

inline json scalar_to_json(const Scalar& s) {
    if (s.is_integer()) {
        const Integer v = s.integer_value();
        if (v.fits_slong_p()) return json(v.get_si());
        return json(v.get_str());
    }
    return json(s.str());
}

inline Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(Integer(j.get<long>()));
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw std::invalid_argument("scalar_from_json: expected integer or polynomial text");
}

inline json intvec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Integer& x : v) a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
    return a;
}

inline IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("intvec_from_json: expected array");
    IntVec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.push_back(Integer(x.get<long>()));
        else if (x.is_string())
            v.push_back(Integer(x.get<std::string>()));
        else
            throw std::invalid_argument("intvec_from_json: expected integer entries");
    }
    return v;
}

inline json lattice_to_json(const Lattice& l) {
    json gram = json::array();
    for (size_t i = 0; i < l.rank; ++i) {
        json row = json::array();
        for (size_t j = 0; j < l.rank; ++j) row.push_back(scalar_to_json(l.gram(i, j)));
        gram.push_back(row);
    }
    json j{{"rank", l.rank}, {"gram", gram}};
    if (!l.label.empty()) j["label"] = l.label;
    return j;
}

inline Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice_from_json: missing gram");
    const json& gj = j["gram"];
    const size_t n = gj.size();
    if (j.contains("rank") && j["rank"].get<size_t>() != n)
        throw std::invalid_argument("lattice_from_json: rank does not match gram size");
    Matrix<Scalar> g(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (gj[i].size() != n) throw std::invalid_argument("lattice_from_json: gram not square");
        for (size_t k = 0; k < n; ++k) g(i, k) = scalar_from_json(gj[i][k]);
    }
    return Lattice(std::move(g), j.value("label", std::string()));
}

inline json isometry_to_json(const Isometry& g) {
    json m = json::array();
    for (size_t i = 0; i < g.matrix.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < g.matrix.cols(); ++j)
            row.push_back(g.matrix(i, j).fits_slong_p() ? json(g.matrix(i, j).get_si())
                                                        : json(g.matrix(i, j).get_str()));
        m.push_back(row);
    }
    return json{{"matrix", m}};
}

inline Isometry isometry_from_json(const json& j) {
    if (!j.contains("matrix")) throw std::invalid_argument("isometry_from_json: missing matrix");
    const json& mj = j["matrix"];
    const size_t n = mj.size();
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (mj[i].size() != n) throw std::invalid_argument("isometry_from_json: matrix not square");
        IntVec row = intvec_from_json(mj[i]);
        for (size_t k = 0; k < n; ++k) m(i, k) = row[k];
    }
    return Isometry{std::move(m)};
}

inline json delta_to_json(const DeltaSet& d) {
    json vs = json::array();
    for (const IntVec& v : d.vectors) vs.push_back(intvec_to_json(v));
    return json{{"lattice", lattice_to_json(d.lattice)}, {"vectors", vs}};
}

inline DeltaSet delta_from_json(const json& j) {
    if (!j.contains("lattice") || !j.contains("vectors"))
        throw std::invalid_argument("delta_from_json: need lattice and vectors");
    Lattice l = lattice_from_json(j["lattice"]);
    std::vector<IntVec> vs;
    for (const auto& vj : j["vectors"]) vs.push_back(intvec_from_json(vj));
    return make_delta(std::move(l), std::move(vs));
}

inline json ebeling_report_to_json(const EbelingReport& r) {
    json w;
    if (r.diagram_witness) {
        w = json::array();
        for (size_t i : *r.diagram_witness) w.push_back(i);
    } else {
        w = nullptr;
    }
    return json{{"spans", r.spans},
                {"orbit_connected", r.orbit_connected},
                {"diagram_witness", w},
                {"conclusion_applicable", r.conclusion_applicable},
                {"notes", r.notes}};
}

inline json semidefinite_report_to_json(const SemidefiniteReport& r) {
    return json{{"decomposition_ok", r.decomposition_ok},
                {"spans", r.spans},
                {"orbit_ok", r.orbit_ok},
                {"reflection_group_full", r.reflection_group_full},
                {"conclusion_applicable", r.conclusion_applicable},
                {"notes", r.notes}};
}

inline json signature_to_json(const Signature& s) {
    return json{{"positive", s.positive}, {"negative", s.negative}, {"null", s.null}};
}

inline json group_to_json(const FiniteAbelianGroup& g) {
    json f = json::array();
    for (const Integer& d : g.invariant_factors)
        f.push_back(d.fits_slong_p() ? json(d.get_si()) : json(d.get_str()));
    return json{{"invariant_factors", f}};
}

inline json spec_to_json(const SurfaceSpec& s) {
    return json{{"d", s.d}, {"q", s.q}, {"multiplicities", s.multiplicities}};
}

inline SurfaceSpec spec_from_json(const json& j) {
    if (!j.contains("d") || !j.contains("q"))
        throw std::invalid_argument("spec_from_json: need d and q");
    std::vector<long> ms;
    if (j.contains("multiplicities")) ms = j["multiplicities"].get<std::vector<long>>();
    return SurfaceSpec(j["d"].get<long>(), j["q"].get<long>(), std::move(ms));
}

inline json invariants_to_json(const SurfaceInvariants& s) {
    return json{{"e", s.e},
                {"b1", s.b1},
                {"b2", s.b2},
                {"b_plus", s.b_plus},
                {"b_minus", s.b_minus},
                {"p_g", s.p_g},
                {"m", s.m},
                {"kappa", s.kappa},
                {"parity", s.even ? "even" : "odd"},
                {"case_tag", to_string(s.case_tag)}};
}

inline json construction_report_to_json(const ConstructionReport& r) {
    json claims = json::object(), residuals = json::object();
    for (const auto& [k, v] : r.claims) claims[k] = scalar_to_json(v);
    for (const auto& [k, v] : r.residuals) residuals[k] = v.str();
    return json{{"claims", claims},
                {"residuals", residuals},
                {"free_parameters", r.free_parameters},
                {"constraints_required", r.constraints_required}};
}

inline json verdict_to_json(const Verdict& v) {
    return json{{"tag", to_string(v.tag)},
                {"certificate", v.certificate},
                {"case", to_string(v.surface_case)},
                {"spinor_norm", v.spinor},
                {"k_action", to_string(v.action)}};
}

}  // namespace ellat
