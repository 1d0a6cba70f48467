#pragma once
// The decision procedure: given the intersection-lattice model of a minimal
// elliptic surface with positive Euler number and an isometry of it,
// classify the isometry as realized by an orientation-preserving
// diffeomorphism, not realized, or dependent on the unresolved parity of
// the conjugation witness.  Also the constructive obstruction isometry: the
// inversion of a hyperbolic summand orthogonal to the canonical class.

#include <optional>
#include <sstream>
#include <stdexcept>

#include "ellat/isometry.hpp"
#include "ellat/lattice_ops.hpp"
#include "ellat/reflections.hpp"
#include "ellat/surface_models.hpp"

namespace ellat {

enum class KAction { FIX, NEGATE, OTHER };

inline const char* to_string(KAction a) {
    switch (a) {
        case KAction::FIX: return "FIX";
        case KAction::NEGATE: return "NEGATE";
        case KAction::OTHER: return "OTHER";
    }
    return "?";
}

inline KAction k_action(const Lattice& l, const IntVec& k, const Isometry& g) {
    check_vector(l, k, "k_action");
    const IntVec gk = g.matrix * k;
    if (gk == k) return KAction::FIX;
    if (is_zero_vector(k)) return KAction::FIX;
    IntVec neg = scale(Integer(-1), k);
    if (gk == neg) return KAction::NEGATE;
    return KAction::OTHER;
}

// Inversion at zero on a hyperbolic summand orthogonal to k, extended by
// the identity.  Exists whenever the geometric genus is positive; fixes k,
// has spinor norm -1 and flips the orientation of the positive part.
inline Isometry build_iota(const H2Model& model) {
    const SurfaceInvariants& inv = model.invariants;
    if (inv.p_g < 1)
        throw std::invalid_argument("build_iota: requires positive geometric genus");
    const Lattice& l = model.lattice;
    const size_t n = l.rank;
    const IntMatrix gram = l.integer_gram();

    IntVec e(n, Integer(0)), f(n, Integer(0));
    if (inv.even) {
        // Canonical model bp*U + d*(-E8) with p in the first U: take the
        // second hyperbolic block (first admissible candidate).
        e = unit_vector(n, 2);
        f = unit_vector(n, 3);
    } else {
        // Odd model <1>^bp + <-1>^bm with p = (A,1,..| C,1,..).  The plane
        // spanned by p and w = e_2 splits off; an explicit isotropic vector
        // orthogonal to both, built from t = C, is
        //   e = ((1+t^2)/2) E_3 + t F_1 + ((1-t^2)/2) F_2,
        // and f comes from solving <x,e> = 1, <x,p> = 0, <x,w> = 0.
        const size_t bp = size_t(inv.b_plus);
        const Integer t = model.p[bp];
        e[2] = (1 + t * t) / 2;
        e[bp] = t;
        e[bp + 1] = (1 - t * t) / 2;

        const IntVec w = unit_vector(n, 1);
        IntMatrix sys(3, n);
        const IntVec ge = gram * e, gp = gram * model.p, gw = gram * w;
        for (size_t j = 0; j < n; ++j) {
            sys(0, j) = ge[j];
            sys(1, j) = gp[j];
            sys(2, j) = gw[j];
        }
        auto x = solve_integer(sys, IntVec{Integer(1), Integer(0), Integer(0)});
        if (!x) throw std::logic_error("build_iota: hyperbolic completion not found");
        const Integer qx = pair(gram, *x, *x);
        if (qx % 2 != 0) throw std::logic_error("build_iota: complement is not even");
        f = sub(*x, scale(qx / 2, e));
    }

    // iota = id - 2 * projection onto span(e, f).
    const IntVec ge = gram * e, gf = gram * f;
    IntMatrix m = IntMatrix::identity(n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) m(i, j) -= 2 * (gf[j] * e[i] + ge[j] * f[i]);
    Isometry iota{std::move(m)};

    if (!is_isometry(l, iota.matrix)) throw std::logic_error("build_iota: not an isometry");
    if (!(iota.matrix * iota.matrix == IntMatrix::identity(n)))
        throw std::logic_error("build_iota: not an involution");
    if (k_action(l, model.k, iota) != KAction::FIX) throw std::logic_error("build_iota: k not fixed");
    if (spinor_norm(l, iota) != -1) throw std::logic_error("build_iota: wrong spinor norm");
    if (positive_orientation_character(l, iota) != -1)
        throw std::logic_error("build_iota: wrong orientation character");
    return iota;
}

enum class VerdictTag { REALIZED, NOT_REALIZED, COSET_DEPENDENT };

inline const char* to_string(VerdictTag t) {
    switch (t) {
        case VerdictTag::REALIZED: return "REALIZED";
        case VerdictTag::NOT_REALIZED: return "NOT_REALIZED";
        case VerdictTag::COSET_DEPENDENT: return "COSET_DEPENDENT";
    }
    return "?";
}

struct Verdict {
    VerdictTag tag = VerdictTag::REALIZED;
    std::string certificate;
    CaseTag surface_case = CaseTag::RATIONAL;
    int spinor = 1;
    KAction action = KAction::FIX;
};

struct StabilizerPredicates {
    bool in_O_k = false;
    bool in_Oprime = false;
    bool in_Oprime_k = false;
    int orientation_character = 1;
};

inline StabilizerPredicates stabilizer_predicates(const Lattice& l, const IntVec& k, const Isometry& g) {
    StabilizerPredicates p;
    p.in_O_k = (k_action(l, k, g) == KAction::FIX);
    p.in_Oprime = (spinor_norm(l, g) == 1);
    p.in_Oprime_k = p.in_O_k && p.in_Oprime;
    p.orientation_character = positive_orientation_character(l, g);
    return p;
}

// The case table.  witness_parity, when supplied, is the spinor norm of the
// conjugation witness sigma_* (an isometry negating k known to be realized);
// without it the k-negating coset in the positive-genus non-K3 case stays
// undecided.
inline Verdict decide(const H2Model& model, const Isometry& g,
                      std::optional<int> witness_parity = std::nullopt) {
    const Lattice& l = model.lattice;
    if (!is_isometry(l, g.matrix)) throw std::invalid_argument("decide: not an isometry of the model");

    Verdict v;
    v.surface_case = model.invariants.case_tag;
    v.spinor = spinor_norm(l, g);
    v.action = k_action(l, model.k, g);
    std::ostringstream cert;

    switch (v.surface_case) {
        case CaseTag::RATIONAL:
            v.tag = VerdictTag::REALIZED;
            cert << "rational surface: the full isometry group is realized";
            break;
        case CaseTag::ENRIQUES:
            v.tag = VerdictTag::REALIZED;
            cert << "Enriques surface: the full isometry group is realized";
            break;
        case CaseTag::K3:
            if (v.spinor == 1) {
                v.tag = VerdictTag::REALIZED;
                cert << "K3: spinor norm +1, realized by reflections in embedded spheres";
            } else {
                v.tag = VerdictTag::NOT_REALIZED;
                cert << "K3: spinor norm -1 flips the homology orientation while fixing k up to"
                        " sign; excluded by the invariance of the distinguished basic class";
            }
            break;
        case CaseTag::PG0_NONRATIONAL:
            if (v.action != KAction::OTHER) {
                v.tag = VerdictTag::REALIZED;
                cert << "genus-zero non-rational: k sent to " << (v.action == KAction::FIX ? "k" : "-k")
                     << ", inside the stabilizer times {+-id}";
            } else {
                v.tag = VerdictTag::NOT_REALIZED;
                cert << "genus-zero non-rational: k not preserved up to sign";
            }
            break;
        case CaseTag::PG_POSITIVE:
            if (v.action == KAction::OTHER) {
                v.tag = VerdictTag::NOT_REALIZED;
                cert << "positive genus: k not preserved up to sign";
            } else if (v.action == KAction::FIX) {
                if (v.spinor == 1) {
                    v.tag = VerdictTag::REALIZED;
                    cert << "positive genus: k fixed and spinor norm +1";
                } else {
                    v.tag = VerdictTag::NOT_REALIZED;
                    cert << "positive genus: k fixed but spinor norm -1; the k-fixing part of the"
                            " realized group is exactly the spinor-norm-one stabilizer";
                }
            } else if (witness_parity) {
                if (v.spinor == *witness_parity) {
                    v.tag = VerdictTag::REALIZED;
                    cert << "positive genus: k negated, spinor norm matches the conjugation witness ("
                         << *witness_parity << ")";
                } else {
                    v.tag = VerdictTag::NOT_REALIZED;
                    cert << "positive genus: k negated, spinor norm differs from the conjugation"
                            " witness (" << *witness_parity << ")";
                }
            } else {
                v.tag = VerdictTag::COSET_DEPENDENT;
                cert << "positive genus: k negated; membership depends on the spinor norm of the"
                        " conjugation witness, which is not pinned by the construction";
            }
            break;
    }
    v.certificate = cert.str();
    return v;
}

inline Verdict decide(const SurfaceSpec& spec, const Isometry& g,
                      std::optional<int> witness_parity = std::nullopt) {
    return decide(build_h2bar(spec), g, witness_parity);
}

}  // namespace ellat
