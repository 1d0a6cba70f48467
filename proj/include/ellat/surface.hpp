#pragma once
// Numerical invariants of a minimal elliptic surface with positive Euler
// number, given by (d, q, multiplicities), and the torsion of the fibre
// complement.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"
#include "ellat/normal_form.hpp"

namespace ellat {

struct SurfaceSpec {
    long d = 1;                        // Euler number e = 12d
    long q = 0;                        // irregularity (base genus)
    std::vector<long> multiplicities;  // multiple fibres, each >= 2

    SurfaceSpec() = default;
    SurfaceSpec(long d_, long q_, std::vector<long> m = {}) : d(d_), q(q_), multiplicities(std::move(m)) {
        if (d < 1) throw std::invalid_argument("SurfaceSpec: d must be >= 1");
        if (q < 0) throw std::invalid_argument("SurfaceSpec: q must be >= 0");
        for (long mi : multiplicities)
            if (mi < 2) throw std::invalid_argument("SurfaceSpec: multiplicities must be >= 2");
        std::sort(multiplicities.begin(), multiplicities.end());
    }

    std::string str() const {
        std::string s = "X(d=" + std::to_string(d) + ",q=" + std::to_string(q) + ";m=[";
        for (size_t i = 0; i < multiplicities.size(); ++i)
            s += (i ? "," : "") + std::to_string(multiplicities[i]);
        return s + "])";
    }
};

enum class CaseTag { RATIONAL, ENRIQUES, K3, PG0_NONRATIONAL, PG_POSITIVE };

inline const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::RATIONAL: return "RATIONAL";
        case CaseTag::ENRIQUES: return "ENRIQUES";
        case CaseTag::K3: return "K3";
        case CaseTag::PG0_NONRATIONAL: return "PG0_NONRATIONAL";
        case CaseTag::PG_POSITIVE: return "PG_POSITIVE";
    }
    return "?";
}

struct SurfaceInvariants {
    long e = 0;
    long b1 = 0;
    long b2 = 0;
    long b_plus = 0;
    long b_minus = 0;
    long p_g = 0;
    long m = 1;      // lcm of the multiplicities
    long kappa = 0;  // canonical class = kappa * (primitive fibre class)
    bool even = false;
    CaseTag case_tag = CaseTag::RATIONAL;
};

// Betti numbers from e and q; kappa from the canonical bundle formula
// K = (2q - 2 + d) m p + sum (m_i - 1)(m / m_i) p with p the primitive
// class [f]/m.  The case split follows the sign of kappa and p_g.
inline SurfaceInvariants surface_invariants(const SurfaceSpec& spec) {
    SurfaceInvariants s;
    s.e = 12 * spec.d;
    s.b1 = 2 * spec.q;
    s.b2 = s.e - 2 + 2 * s.b1;
    s.b_plus = 2 * spec.d + 2 * spec.q - 1;
    s.b_minus = 10 * spec.d + 2 * spec.q - 1;
    s.p_g = spec.d + spec.q - 1;

    long m = 1;
    for (long mi : spec.multiplicities) m = std::lcm(m, mi);
    s.m = m;
    long kappa = m * (2 * spec.q - 2 + spec.d);
    for (long mi : spec.multiplicities) kappa += (mi - 1) * (m / mi);
    s.kappa = kappa;
    s.even = (kappa % 2 == 0);

    if (kappa < 0)
        s.case_tag = CaseTag::RATIONAL;
    else if (kappa == 0)
        s.case_tag = (s.p_g == 0) ? CaseTag::ENRIQUES : CaseTag::K3;
    else
        s.case_tag = (s.p_g == 0) ? CaseTag::PG0_NONRATIONAL : CaseTag::PG_POSITIVE;
    return s;
}

struct TorsionResult {
    long m = 1;
    FiniteAbelianGroup group;
};

// Tors of the fibre complement: (sum of Z_{m_i}) / <(1,...,1)>, presented by
// the relation matrix [diag(m_i); ones] and read off its Smith form.
inline TorsionResult torsion_of_complement(const std::vector<long>& multiplicities) {
    for (long mi : multiplicities)
        if (mi < 2) throw std::invalid_argument("torsion_of_complement: multiplicities must be >= 2");
    TorsionResult out;
    for (long mi : multiplicities) out.m = std::lcm(out.m, mi);
    const size_t n = multiplicities.size();
    if (n == 0) return out;
    IntMatrix rel(n + 1, n);
    for (size_t i = 0; i < n; ++i) rel(i, i) = multiplicities[i];
    for (size_t j = 0; j < n; ++j) rel(n, j) = 1;
    out.group = cokernel_invariants(rel);
    return out;
}

}  // namespace ellat
