#pragma once
// Symbolic verification of the two explicit basis constructions.  Both work
// in a formal model: a lattice whose gram matrix carries the declared
// pairings, with free parameters for every pairing the construction leaves
// open.  Each claimed intersection number becomes a residual polynomial
// (computed minus claimed); a zero residual is an identity, a nonzero one
// is the exact constraint the construction needs.

#include <map>
#include <string>
#include <vector>

#include "ellat/dynkin.hpp"
#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"

namespace ellat {

struct ConstructionReport {
    std::map<std::string, Scalar> claims;     // key -> claimed value
    std::map<std::string, Scalar> residuals;  // key -> computed - claimed
    std::vector<std::string> free_parameters;
    std::vector<std::string> constraints_required;  // nonzero residuals, canonical text

    bool entry_verified(const std::string& key) const {
        auto it = residuals.find(key);
        return it != residuals.end() && it->second.is_zero();
    }

    std::vector<std::string> nonzero_keys() const {
        std::vector<std::string> out;
        for (const auto& [k, r] : residuals)
            if (!r.is_zero()) out.push_back(k);
        return out;
    }
};

namespace detail {

inline void record(ConstructionReport& rep, const Lattice& model, const std::string& key,
                   const ScalarVec& x, const ScalarVec& y, const Scalar& claimed) {
    const Scalar computed = pair(model, x, y);
    rep.claims[key] = claimed;
    rep.residuals[key] = computed - claimed;
}

inline void finish(ConstructionReport& rep) {
    std::map<std::string, bool> seen;
    for (const auto& [k, r] : rep.residuals)
        if (!r.is_zero() && !seen.count(r.str())) {
            seen[r.str()] = true;
            rep.constraints_required.push_back(r.str());
        }
}

}  // namespace detail

// Verifies the generating-set construction for the irregular fibre
// complement.  Two stages share one formal model:
//
//   * the adjustment beta_8 := beta_8' - ell' - A alpha_1' - B alpha_2'
//     performed in the original system, checked against the -E8 pattern and
//     against orthogonality to gamma and delta;
//   * the epsilon vectors eps_i = <gamma,ell>(ell+alpha_1) +
//     <delta,ell>(ell+alpha_2) + alpha_i built in the re-chosen system,
//     checked against the six-vertex pattern rows.
//
// Free parameters: c = <gamma,ell>, d = <delta,ell>, A = <beta_8'-ell',gamma>,
// B = <beta_8'-ell',delta>, and gd = <gamma,delta>.
inline ConstructionReport verify_irregular_generating_set(const std::string& c_name = "c",
                                                          const std::string& d_name = "d",
                                                          const std::string& a_name = "A",
                                                          const std::string& b_name = "B") {
    const Scalar c = Scalar::variable(c_name);
    const Scalar d = Scalar::variable(d_name);
    const Scalar A = Scalar::variable(a_name);
    const Scalar B = Scalar::variable(b_name);
    const Scalar gd = Scalar::variable("gd");

    // Generators: 0..6 alpha', 7..13 beta_1..beta_7 (shared by both
    // systems), 14 beta_8', 15 ell', 16 gamma, 17 delta, 18..24 alpha (new
    // system), 25 beta_8 (new system), 26 ell (new system).
    const size_t N = 27;
    enum : size_t { AP = 0, B1 = 7, BP8 = 14, LP = 15, GA = 16, DE = 17, ANEW = 18, B8N = 25, LN = 26 };
    Matrix<Scalar> g(N, N);
    auto set = [&](size_t i, size_t j, const Scalar& v) {
        g(i, j) = v;
        g(j, i) = v;
    };

    const IntMatrix e8 = dynkin_e8_gram();
    auto node = [&](size_t j) { return j <= 7 ? B1 + (j - 1) : BP8; };  // primed system nodes

    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) g(AP + i, AP + j) = Scalar(-2);
    for (size_t i = 1; i <= 8; ++i)
        for (size_t j = 1; j <= 8; ++j) g(node(i), node(j)) = Scalar(e8(i - 1, j - 1));
    for (size_t i = 0; i < 7; ++i) set(AP + i, BP8, Scalar(1));
    set(LP, LP, Scalar(-2));
    set(LP, BP8, Scalar(-1));
    for (size_t i = 0; i < 7; ++i) set(LP, AP + i, Scalar(2));
    set(GA, GA, Scalar(-2));
    set(DE, DE, Scalar(-2));
    set(GA, DE, gd);
    set(GA, LP, c);
    set(DE, LP, d);
    set(GA, BP8, A + c);
    set(DE, BP8, B + d);
    for (size_t i = 0; i < 7; ++i) {
        set(GA, AP + i, (i == 0 ? Scalar(1) : Scalar(0)) - c);
        set(DE, AP + i, (i == 1 ? Scalar(1) : Scalar(0)) - d);
    }

    // New system: its own alphas, beta_8 and ell, sharing beta_1..beta_7.
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) g(ANEW + i, ANEW + j) = Scalar(-2);
    set(B8N, B8N, Scalar(-2));
    set(B8N, B1 + 6, Scalar(1));  // beta_8 attaches to beta_7
    for (size_t i = 0; i < 7; ++i) set(ANEW + i, B8N, Scalar(1));
    set(LN, LN, Scalar(-2));
    set(LN, B8N, Scalar(-1));
    for (size_t i = 0; i < 7; ++i) set(LN, ANEW + i, Scalar(2));
    set(GA, LN, c);
    set(DE, LN, d);
    for (size_t i = 0; i < 7; ++i) {
        set(GA, ANEW + i, (i == 0 ? Scalar(1) : Scalar(0)) - c);
        set(DE, ANEW + i, (i == 1 ? Scalar(1) : Scalar(0)) - d);
    }

    const Lattice model(std::move(g), "irregular-construction model");
    auto basis = [&](size_t i) {
        ScalarVec v(N, Scalar(0));
        v[i] = Scalar(1);
        return v;
    };
    auto combine = [&](std::vector<std::pair<Scalar, size_t>> parts) {
        ScalarVec v(N, Scalar(0));
        for (auto& [coef, idx] : parts) v[idx] += coef;
        return v;
    };

    ConstructionReport rep;
    rep.free_parameters = {a_name, b_name, c_name, d_name, "gd"};

    // Stage 1: the adjusted beta block.
    std::vector<ScalarVec> betas;
    for (size_t j = 1; j <= 7; ++j) betas.push_back(basis(node(j)));
    betas.push_back(combine({{Scalar(1), BP8}, {Scalar(-1), LP}, {-A, AP + 0}, {-B, AP + 1}}));
    for (size_t i = 1; i <= 8; ++i)
        for (size_t j = i; j <= 8; ++j)
            detail::record(rep, model, "beta" + std::to_string(i) + "*beta" + std::to_string(j),
                           betas[i - 1], betas[j - 1], Scalar(e8(i - 1, j - 1)));
    detail::record(rep, model, "beta8*gamma", betas[7], basis(GA), Scalar(0));
    detail::record(rep, model, "beta8*delta", betas[7], basis(DE), Scalar(0));

    // Stage 2: the epsilon rows in the new system.
    std::vector<ScalarVec> epsv;
    for (size_t i = 0; i < 3; ++i)
        epsv.push_back(combine({{c, LN}, {c, ANEW + 0}, {d, LN}, {d, ANEW + 1}, {Scalar(1), ANEW + i}}));
    for (size_t i = 1; i <= 3; ++i) {
        for (size_t j = i; j <= 3; ++j)
            detail::record(rep, model, "eps" + std::to_string(i) + "*eps" + std::to_string(j),
                           epsv[i - 1], epsv[j - 1], Scalar(-2));
        detail::record(rep, model, "eps" + std::to_string(i) + "*gamma", epsv[i - 1], basis(GA),
                       Scalar(i == 1 ? 1 : 0));
        detail::record(rep, model, "eps" + std::to_string(i) + "*delta", epsv[i - 1], basis(DE),
                       Scalar(i == 2 ? 1 : 0));
        detail::record(rep, model, "eps" + std::to_string(i) + "*beta8", epsv[i - 1], basis(B8N), Scalar(1));
    }

    detail::record(rep, model, "gamma*gamma", basis(GA), basis(GA), Scalar(-2));
    detail::record(rep, model, "delta*delta", basis(DE), basis(DE), Scalar(-2));
    detail::record(rep, model, "gamma*delta", basis(GA), basis(DE), Scalar(0));

    detail::finish(rep);
    return rep;
}

struct E10Result {
    Lattice formal_model;             // symbolic gram over the generators
    std::vector<ScalarVec> vectors;   // beta_1..beta_10 over the generators
    ConstructionReport report;
    Lattice specialized;              // all parameters set to 0
    Integer specialized_determinant;
    bool specialized_even = false;
    Signature specialized_signature;
};

// The ten-vector basis beta_i = beta_i' - <beta_i',sigma> f, beta_9 = f - ell,
// beta_10 = sigma, checked against the -E10 pattern.  sigma pairings are free
// parameters unless fixed by the caller (1-based indices).
inline E10Result build_e10_basis(const std::map<int, Integer>& fixed = {}) {
    // Generators: 0..7 beta', 8 f, 9 ell, 10 sigma.
    const size_t N = 11;
    enum : size_t { BP = 0, F = 8, L = 9, SG = 10 };
    std::vector<Scalar> sp(8);
    std::vector<std::string> params;
    for (int i = 0; i < 8; ++i) {
        auto it = fixed.find(i + 1);
        if (it != fixed.end()) {
            sp[i] = Scalar(it->second);
        } else {
            const std::string name = "s" + std::to_string(i + 1);
            sp[i] = Scalar::variable(name);
            params.push_back(name);
        }
    }
    const Scalar ls = Scalar::variable("ls");
    params.push_back("ls");

    Matrix<Scalar> g(N, N);
    auto set = [&](size_t i, size_t j, const Scalar& v) {
        g(i, j) = v;
        g(j, i) = v;
    };
    const IntMatrix e8 = dynkin_e8_gram();
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) g(BP + i, BP + j) = Scalar(e8(i, j));
    // f spans the radical direction that pairs to one with sigma.
    set(F, F, Scalar(0));
    set(F, L, Scalar(0));
    set(F, SG, Scalar(1));
    set(L, L, Scalar(-2));
    set(L, SG, ls);
    set(SG, SG, Scalar(-2));
    for (size_t i = 0; i < 8; ++i) {
        set(F, BP + i, Scalar(0));
        set(L, BP + i, Scalar(i == 7 ? -1 : 0));
        set(SG, BP + i, sp[i]);
    }
    const Lattice model(std::move(g), "E10 model");

    E10Result out;
    out.formal_model = model;
    for (size_t i = 0; i < 8; ++i) {
        ScalarVec v(N, Scalar(0));
        v[BP + i] = Scalar(1);
        v[F] = -sp[i];
        out.vectors.push_back(std::move(v));
    }
    {
        ScalarVec v9(N, Scalar(0));
        v9[F] = Scalar(1);
        v9[L] = Scalar(-1);
        out.vectors.push_back(std::move(v9));
        ScalarVec v10(N, Scalar(0));
        v10[SG] = Scalar(1);
        out.vectors.push_back(std::move(v10));
    }

    const IntMatrix e10 = dynkin_e10_gram();
    Matrix<Scalar> computed(10, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) computed(i, j) = pair(model, out.vectors[i], out.vectors[j]);
    out.report.free_parameters = params;
    for (size_t i = 1; i <= 10; ++i)
        for (size_t j = i; j <= 10; ++j) {
            const std::string key = "beta" + std::to_string(i) + "*beta" + std::to_string(j);
            out.report.claims[key] = Scalar(e10(i - 1, j - 1));
            out.report.residuals[key] = computed(i - 1, j - 1) - Scalar(e10(i - 1, j - 1));
        }
    detail::finish(out.report);

    // Concrete specialization at parameter value 0.
    std::map<std::string, Integer> zero;
    for (const std::string& name : params) zero[name] = 0;
    IntMatrix spec_gram(10, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) spec_gram(i, j) = computed(i, j).evaluate(zero).integer_value();
    out.specialized = Lattice(spec_gram, "E10");
    out.specialized_determinant = lattice_determinant(out.specialized);
    out.specialized_even = out.specialized.is_even();
    out.specialized_signature = signature(out.specialized);
    return out;
}

}  // namespace ellat
