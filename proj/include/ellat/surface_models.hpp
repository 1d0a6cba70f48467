#pragma once
// Concrete integer models of the sphere configurations in the fibre
// complements: the X1-nf basis, the glued multi-summand delta models with
// their gamma/delta/epsilon and zeta classes, the sigma triples attached to
// multiple fibres, and the full intersection lattice (H2bar, k).

#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/delta.hpp"
#include "ellat/dynkin.hpp"
#include "ellat/lattice.hpp"
#include "ellat/lattice_ops.hpp"
#include "ellat/surface.hpp"

namespace ellat {

struct X1Model {
    Lattice lattice;  // basis alpha_1..alpha_{2n+1}, beta_1..beta_8
    DeltaSet delta;
    IntVec ell;                            // long vector of the beta block
    std::vector<IntVec> radical_basis;     // ell + alpha_i
};

// The 9+2n sphere classes of the rational elliptic surface with n fibres
// removed: alphas form a complete graph weighted -2, betas form -E8, every
// alpha meets beta_8 once.  The pairings of the alphas with the rest are
// forced by ell + alpha_i lying in the radical.
inline X1Model build_x1_minus_nf(long n) {
    if (n < 0) throw std::invalid_argument("build_x1_minus_nf: n must be >= 0");
    const size_t na = size_t(2 * n + 1);
    const size_t rank = na + 8;
    IntMatrix g(rank, rank);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j) g(i, j) = -2;
    const IntMatrix e8 = dynkin_e8_gram();
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) g(na + i, na + j) = e8(i, j);
    for (size_t i = 0; i < na; ++i) {
        g(i, na + 7) = 1;
        g(na + 7, i) = 1;
    }

    X1Model m;
    m.lattice = Lattice(g, "X1-" + std::to_string(n) + "f");
    std::vector<IntVec> delta;
    for (size_t i = 0; i < rank; ++i) delta.push_back(unit_vector(rank, i));
    m.delta = make_delta(m.lattice, std::move(delta));
    m.ell = IntVec(rank, Integer(0));
    const IntVec marks = e8_long_vector();
    for (size_t i = 0; i < 8; ++i) m.ell[na + i] = marks[i];
    for (size_t i = 0; i < na; ++i) m.radical_basis.push_back(add(m.ell, unit_vector(rank, i)));
    return m;
}

struct DeltaModel {
    Lattice lattice;
    DeltaSet delta;
    std::vector<IntVec> e8_summand;  // beta block of the first summand
    IntVec fibre;                    // designated fibre class (radical)
    long fibre_divisibility = 1;     // lcm of the multiplicities
};

namespace detail {

// Alpha counts per summand, driven by how many fibres each copy of X1
// loses to the gluings and to the removed generic fibre.
inline std::vector<size_t> summand_alpha_counts(const SurfaceSpec& spec) {
    const size_t d = size_t(spec.d);
    std::vector<size_t> counts(d, 0);
    if (spec.q >= 1) {
        counts[0] = 7;
        for (size_t n = 1; n < d; ++n) counts[n] = 5;
    } else if (d == 1) {
        counts[0] = 3;
    } else {
        counts[0] = 5;
        for (size_t n = 1; n + 1 < d; ++n) counts[n] = 5;
        counts[d - 1] = 3;
    }
    return counts;
}

}  // namespace detail

// One lattice realizing every intersection constraint the sphere
// constructions provide: per-summand X1 blocks, gamma/delta classes dual to
// alpha_1/alpha_2 of the first summand (q >= 1), the epsilon triple with
// its six-vertex pattern, zeta classes meeting one alpha on each side of a
// gluing (d >= 2), and a sigma pair per multiple fibre with the fibre class
// made divisible.  Pairings the constructions leave open are 0.
inline DeltaModel build_delta_model(const SurfaceSpec& spec) {
    const SurfaceInvariants inv = surface_invariants(spec);
    const std::vector<size_t> na = detail::summand_alpha_counts(spec);
    const size_t d = size_t(spec.d);
    const size_t nmult = spec.multiplicities.size();
    const bool has_mult = nmult > 0;
    const long big_m = inv.m;

    // Index bookkeeping.  Summand n occupies [start_n, start_n + na[n] + 8):
    // alphas first, then betas.  When multiple fibres are present the last
    // alpha slot of summand 1 holds phi = f / m instead of the alpha itself.
    std::vector<size_t> start(d, 0);
    size_t pos = 0;
    for (size_t n = 0; n < d; ++n) {
        start[n] = pos;
        pos += na[n] + 8;
    }
    const size_t ngam = spec.q >= 1 ? size_t(2 * spec.q - 1) : 0;
    const size_t gam0 = pos;
    pos += ngam;
    const size_t del0 = pos;
    pos += ngam;
    const size_t eps0 = pos;
    pos += (spec.q >= 1 ? 3 : 0);
    const size_t zeta0 = pos;
    pos += 2 * (d - 1);
    const size_t sig0 = pos;
    pos += nmult;
    const size_t rank = pos;

    auto alpha = [&](size_t n, size_t i) { return start[n] + (i - 1); };  // i is 1-based
    auto beta = [&](size_t n, size_t j) { return start[n] + na[n] + (j - 1); };
    auto gamma = [&](size_t k) { return gam0 + (k - 1); };
    auto deltav = [&](size_t l) { return del0 + (l - 1); };
    auto eps = [&](size_t i) { return eps0 + (i - 1); };
    auto zeta = [&](size_t n, size_t j) { return zeta0 + 2 * (n - 2) + (j - 1); };  // n = 2..d
    auto sigma2 = [&](size_t i) { return sig0 + i; };                               // i = 0-based
    const size_t carrier = na[0];        // 1-based alpha index of summand 1 carrying f
    const size_t phi = alpha(0, carrier);  // that slot becomes phi when has_mult

    IntMatrix g(rank, rank);
    auto set = [&](size_t i, size_t j, long v) {
        g(i, j) = v;
        g(j, i) = v;
    };

    const IntMatrix e8 = dynkin_e8_gram();
    for (size_t n = 0; n < d; ++n) {
        const size_t skip_from = (n == 0 && has_mult) ? carrier : na[n] + 1;
        for (size_t i = 1; i <= na[n]; ++i)
            for (size_t j = 1; j <= na[n]; ++j)
                if (i < skip_from && j < skip_from) set(alpha(n, i), alpha(n, j), -2);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) g(beta(n, i + 1), beta(n, j + 1)) = e8(i, j);
        for (size_t i = 1; i <= na[n]; ++i)
            if (!(n == 0 && has_mult && i == carrier)) set(alpha(n, i), beta(n, 8), 1);
    }

    if (spec.q >= 1) {
        for (size_t k = 1; k <= ngam; ++k) {
            set(gamma(k), gamma(k), -2);
            set(deltav(k), deltav(k), -2);
            set(gamma(k), alpha(0, 1), 1);
            set(deltav(k), alpha(0, 2), 1);
        }
        // Epsilon rows carry the pairings forced by their defining formula:
        // like an alpha of summand 1 towards the alpha/beta block, plus the
        // duality rows towards every gamma and delta.
        for (size_t i = 1; i <= 3; ++i) {
            for (size_t j = 1; j <= 3; ++j) set(eps(i), eps(j), -2);
            for (size_t j = 1; j <= na[0]; ++j)
                if (!(has_mult && j == carrier)) set(eps(i), alpha(0, j), -2);
            set(eps(i), beta(0, 8), 1);
        }
        for (size_t k = 1; k <= ngam; ++k) {
            set(eps(1), gamma(k), 1);
            set(eps(2), deltav(k), 1);
        }
    }

    for (size_t n = 2; n <= d; ++n)
        for (size_t j = 1; j <= 2; ++j) {
            set(zeta(n, j), zeta(n, j), -2);
            set(zeta(n, j), alpha(n - 2, j), 1);
            set(zeta(n, j), alpha(n - 1, j), 1);
        }

    // Sigma pairs: sigma2 meets its designated old sphere once; everything
    // else about it is open, hence 0.  sigma3 duties rotate through the
    // alphas of summand 1 that are free of other jobs.
    std::vector<size_t> sigma3_pool;
    for (size_t i = (spec.q >= 1 ? 3 : 1); i < carrier; ++i) sigma3_pool.push_back(i);
    std::vector<size_t> sigma3_of(nmult);
    for (size_t i = 0; i < nmult; ++i) {
        set(sigma2(i), sigma2(i), -2);
        sigma3_of[i] = sigma3_pool[i % sigma3_pool.size()];
        set(sigma2(i), alpha(0, sigma3_of[i]), 1);
    }
    // phi row: all zero (radical), already so.

    DeltaModel out;
    out.lattice = Lattice(g, inv.case_tag == CaseTag::RATIONAL && !has_mult && spec.q == 0
                                 ? "X1-1f"
                                 : spec.str() + "-f");
    out.fibre_divisibility = has_mult ? big_m : 1;

    // The long vector of summand 1 and the displaced carrier alpha.
    IntVec ell1(rank, Integer(0));
    const IntVec marks = e8_long_vector();
    for (size_t j = 0; j < 8; ++j) ell1[beta(0, j + 1)] = marks[j];
    IntVec carrier_alpha = unit_vector(rank, phi);
    if (has_mult) {
        carrier_alpha = sub(scale(Integer(big_m), unit_vector(rank, phi)), ell1);
        out.fibre = scale(Integer(big_m), unit_vector(rank, phi));
    } else {
        out.fibre = add(ell1, unit_vector(rank, phi));
    }

    std::vector<IntVec> delta;
    for (size_t n = 0; n < d; ++n) {
        for (size_t i = 1; i <= na[n]; ++i) {
            if (n == 0 && i == carrier)
                delta.push_back(carrier_alpha);
            else
                delta.push_back(unit_vector(rank, alpha(n, i)));
        }
        for (size_t j = 1; j <= 8; ++j) delta.push_back(unit_vector(rank, beta(n, j)));
    }
    for (size_t k = 1; k <= ngam; ++k) delta.push_back(unit_vector(rank, gamma(k)));
    for (size_t k = 1; k <= ngam; ++k) delta.push_back(unit_vector(rank, deltav(k)));
    if (spec.q >= 1)
        for (size_t i = 1; i <= 3; ++i) delta.push_back(unit_vector(rank, eps(i)));
    for (size_t n = 2; n <= d; ++n)
        for (size_t j = 1; j <= 2; ++j) delta.push_back(unit_vector(rank, zeta(n, j)));
    for (size_t i = 0; i < nmult; ++i) {
        // sigma1 = sigma2 + f / m_i; the difference represents the reduced fibre.
        const Integer t = Integer(big_m / spec.multiplicities[i]);
        delta.push_back(add(unit_vector(rank, sigma2(i)), scale(t, unit_vector(rank, phi))));
        delta.push_back(unit_vector(rank, sigma2(i)));
    }
    out.delta = make_delta(out.lattice, std::move(delta));

    for (size_t j = 1; j <= 8; ++j) out.e8_summand.push_back(unit_vector(rank, beta(0, j)));
    return out;
}

struct SigmaTriple {
    Lattice lattice;
    IntVec sigma1, sigma2, sigma3;
    IntVec f_m;    // reduced fibre class, sigma1 - sigma2
    IntVec fibre;  // m * f_m
};

// Standalone sigma triple over the minimal ambient model (an X1 block with
// one multiple fibre of multiplicity m).
inline SigmaTriple build_sigma_triple(long m) {
    if (m < 2) throw std::invalid_argument("build_sigma_triple: m must be >= 2");
    SurfaceSpec spec(1, 0, {m});
    DeltaModel dm = build_delta_model(spec);
    SigmaTriple t;
    t.lattice = dm.lattice;
    const size_t count = dm.delta.vectors.size();
    t.sigma1 = dm.delta.vectors[count - 2];
    t.sigma2 = dm.delta.vectors[count - 1];
    t.sigma3 = dm.delta.vectors[0];  // alpha_1 of the base block
    t.f_m = sub(t.sigma1, t.sigma2);
    t.fibre = dm.fibre;
    return t;
}

struct H2Model {
    Lattice lattice;
    IntVec k;  // canonical class = kappa * p
    IntVec p;  // primitive isotropic class of the fibre
    SurfaceInvariants invariants;
};

// The full intersection lattice of the surface from the classification of
// unimodular forms: even kappa gives b+ copies of U plus d copies of -E8
// with p a hyperbolic basis vector; odd kappa gives the odd diagonal form
// with an explicitly certified primitive isotropic p whose coordinates are
// all odd, so that kappa * p is characteristic.
inline H2Model build_h2bar(const SurfaceSpec& spec) {
    const SurfaceInvariants inv = surface_invariants(spec);
    H2Model out;
    out.invariants = inv;
    const size_t bp = size_t(inv.b_plus), bm = size_t(inv.b_minus);

    if (inv.even) {
        const size_t rank = 2 * bp + 8 * size_t(spec.d);
        IntMatrix g(rank, rank);
        for (size_t u = 0; u < bp; ++u) {
            g(2 * u, 2 * u + 1) = 1;
            g(2 * u + 1, 2 * u) = 1;
        }
        const IntMatrix e8 = dynkin_e8_gram();
        for (long blk = 0; blk < spec.d; ++blk) {
            const size_t o = 2 * bp + 8 * size_t(blk);
            for (size_t i = 0; i < 8; ++i)
                for (size_t j = 0; j < 8; ++j) g(o + i, o + j) = e8(i, j);
        }
        out.lattice = Lattice(g, spec.str() + " H2bar");
        out.p = unit_vector(rank, 0);
    } else {
        const size_t rank = bp + bm;
        IntMatrix g(rank, rank);
        for (size_t i = 0; i < bp; ++i) g(i, i) = 1;
        for (size_t i = bp; i < rank; ++i) g(i, i) = -1;
        out.lattice = Lattice(g, spec.str() + " H2bar");

        // Deterministic certificate search: p = (A,1,..,1 | C,1,..,1) with
        // A, C odd and A^2 - C^2 = 8d; C = 2d-1 always works, smaller C may.
        long a = 0, cfound = -1;
        for (long c = 1; c <= 2 * spec.d - 1; c += 2) {
            const long target = c * c + 8 * spec.d;
            long r = 1;
            while (r * r < target) r += 2;
            if (r * r == target) {
                a = r;
                cfound = c;
                break;
            }
        }
        if (cfound < 0)
            throw std::logic_error("build_h2bar: isotropic certificate search failed up to C = " +
                                   std::to_string(2 * spec.d - 1));
        IntVec p(rank, Integer(1));
        p[0] = a;
        p[bp] = cfound;
        out.p = std::move(p);
    }

    out.k = scale(Integer(inv.kappa), out.p);

    // Contract of the returned pair.
    if (pair(out.lattice, out.p, out.p) != 0) throw std::logic_error("build_h2bar: p not isotropic");
    if (!is_characteristic(out.lattice, out.k)) throw std::logic_error("build_h2bar: k not characteristic");
    Integer want = abs(Integer(inv.kappa));
    if (divisibility(out.lattice, out.k) != want) throw std::logic_error("build_h2bar: wrong divisibility");
    const Signature sig = signature(out.lattice);
    if (sig.positive != bp || sig.negative != bm || sig.null != 0)
        throw std::logic_error("build_h2bar: wrong signature");
    return out;
}

}  // namespace ellat
