#pragma once

// Single-weight perturbation analysis.  For a k-hyponormal shift the set of
// replacement values x = alpha_j^2 that preserve k-hyponormality is a closed
// interval around the unperturbed weight; its endpoints are located by exact
// bisection of the horizon-bounded membership predicate.

#include "shiftkit/berger.hpp"
#include "shiftkit/bisect.hpp"
#include "shiftkit/extension.hpp"
#include "shiftkit/hankel.hpp"
#include "shiftkit/interval.hpp"
#include "shiftkit/quad.hpp"
#include "shiftkit/shifts.hpp"

#include <algorithm>
#include <cstddef>

namespace shiftkit {

struct IntervalResult {
    Enclosure lower, upper;                  // endpoint enclosures, width <= tol
    BigRational lower_member, upper_member;  // certified members near each endpoint
    bool lower_closed = true, upper_closed = true;
    BigRational tol;
    size_t N = 0;  // horizon of the membership predicate
};

// Endpoints of {x > 0 : perturb(seq, j, x) is k-hyponormal for n <= N}.
// Every verdict inside the bisection is horizon-bounded, so the result is
// certified only up to N (recorded in the result).
inline IntervalResult omega_interval(const WeightSequence& seq, size_t k, size_t j,
                                     const BigRational& tol, size_t N) {
    if (tol <= 0) throw error("omega_interval: tol must be positive");
    if (N < j + 1) throw error("omega_interval: horizon must reach past the perturbed index");
    auto mem = [&](const BigRational& x) {
        return is_k_hyponormal(seq.perturb(j, x), k, N).kind != KHypoVerdict::Kind::fails;
    };
    BigRational x0 = seq.weight_sq(j);
    if (!mem(x0)) throw error("empty bracket: the unperturbed sequence is not k-hyponormal");

    IntervalResult out;
    out.tol = tol;
    out.N = N;

    // upper endpoint: double the excursion until membership fails, then bisect
    {
        BigRational hi = 2 * x0;
        int guard = 0;
        while (mem(hi)) {
            hi = x0 + 2 * (hi - x0);
            if (++guard > 256) throw error("omega_interval: no upper bracket found");
        }
        auto br = bisect_bracket(mem, x0, hi, tol);
        out.upper = Enclosure{br.true_end, br.false_end};
        out.upper_member = br.true_end;
    }

    if (j == 0) {
        // Decreasing x = alpha_0^2 scales every matrix with base index >= 1
        // uniformly and turns the base-index-0 matrix into a convex
        // combination with a nonnegative rank-one bump, so membership holds
        // for all 0 < x <= x0: the lower endpoint is 0, excluded because
        // weights must stay positive.
        out.lower = Enclosure{BigRational(0)};
        out.lower_closed = false;
        out.lower_member = std::min(x0, tol);
        if (!mem(out.lower_member))
            throw error("omega_interval: downward monotonicity certification failed");
    } else {
        BigRational lo = x0 / 2;
        int guard = 0;
        while (mem(lo)) {
            lo /= 2;
            if (++guard > 256) throw error("omega_interval: no lower bracket found");
        }
        auto br = bisect_bracket(mem, lo, x0, tol);
        out.lower = Enclosure{br.false_end, br.true_end};
        out.lower_member = br.true_end;
    }
    return out;
}

// ---------------------------------------------------------------------------
// prepend modulus

struct ModulusResult {
    Enclosure value;      // enclosure of sup{x : prepended shift 2-hyponormal}
    BigRational member;   // certified admissible x
    BigRational backstep; // the forced one-step extension weight 1/m_1
};

// Largest squared weight x so that the shift with weights sqrt(x), sqrt(a),
// sqrt(b), sqrt(c), (recursive continuation) remains 2-hyponormal.  The
// search starts from the forced subnormal back-step 1/m_1, which always
// belongs to the set.
inline ModulusResult modulus_h2(const BigRational& a, const BigRational& b, const BigRational& c,
                                const BigRational& tol, size_t N) {
    RecursionSpec spec{phi_from_three(a, b, c), {BigRational(1), a}};
    if (!is_subnormal_recursive(spec)) throw error("modulus_h2: base shift is not subnormal");
    auto ms = spec_inverse_moments(spec, 1);
    if (!ms) throw error("modulus_h2: not integrable");
    BigRational x0 = BigRational(1) / (*ms)[0];
    WeightSequence prepended({x0, a, b}, RecursiveTail{spec.phi});
    IntervalResult omega = omega_interval(prepended, 2, 0, tol, N);
    return {omega.upper, omega.upper_member, x0};
}

// ---------------------------------------------------------------------------
// subnormality vs 2-hyponormality at a perturbed weight

struct PerturbedVerdicts {
    bool subnormal = false;
    bool two_hyponormal = false;
};

// Replace weight j of the shift generated by (a, b, c) with x and decide
// both subnormality (measure walk-back) and 2-hyponormality (moment
// matrices, horizon N).  For perturbations of a recursively generated shift
// the two verdicts coincide.
inline PerturbedVerdicts theorem32_check(const BigRational& a, const BigRational& b,
                                         const BigRational& c, size_t j, const BigRational& x,
                                         size_t N) {
    WeightSequence base({a, b}, RecursiveTail{phi_from_three(a, b, c)});
    WeightSequence pert = base.perturb(j, x);
    PerturbedVerdicts v;
    v.subnormal = is_subnormal(pert).verdict == Tri::yes;
    v.two_hyponormal = is_k_hyponormal(pert, 2, N).kind != KHypoVerdict::Kind::fails;
    return v;
}

// ---------------------------------------------------------------------------
// quadratic-vs-2-hyponormal gap

struct GapWitness {
    BigRational x;         // perturbation value strictly outside Omega^{2,j}
    size_t fail_n = 0;     // base index of the violated moment matrix at x
    BigRational fail_det;  // its negative determinant
};

// Find x' just below the lower endpoint of Omega^{2,j} where 2-hyponormality
// fails while every Maclaurin coefficient c(n, i), n <= N, stays strictly
// positive.  Candidates step outward geometrically in units of tol; the
// search is reported as exhausted rather than treated as a disproof.
inline GapWitness gap_witness(const WeightSequence& seq, size_t j, const BigRational& tol,
                              size_t N) {
    if (j == 0) throw error("gap_witness: no positive lower endpoint at j = 0");
    if (!seq.strictly_increasing_up_to(N + 2))
        throw error("gap_witness: requires strictly increasing weights");
    IntervalResult omega = omega_interval(seq, 2, j, tol, N);
    for (int i = 0; i <= 40; ++i) {
        BigRational x = omega.lower.lo - (pow_int(BigRational(2), i) - 1) * tol;
        if (x <= 0) break;
        auto kh = is_k_hyponormal(seq.perturb(j, x), 2, N);
        if (kh.kind != KHypoVerdict::Kind::fails) continue;
        if (is_positively_quad_hyponormal(seq.perturb(j, x), N, /*strict=*/true).holds)
            return {x, kh.n, kh.witness_det};
    }
    throw error("witness not found within budget");
}

}  // namespace shiftkit
