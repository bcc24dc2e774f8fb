#pragma once

// Subnormal backward extensions.  An n-step extension prepends weights
// x_n, ..., x_1 to a shift with representing measure mu; it exists iff the
// n-th inverse moment m_n = int t^-n dmu is finite, and then
//   x_j^2 = m_{j-1}/m_j  is forced for j = 1 .. n-1,   x_n^2 <= m_{n-1}/m_n.
// The same walk certifies or refutes subnormality of a sequence whose tail
// has a recognized measure.

#include "shiftkit/berger.hpp"
#include "shiftkit/interval.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shiftkit {

// ---------------------------------------------------------------------------
// measures with closed-form inverse moments

// (m+1) t^m dt on [0, 1]: the Berger measure of the shift with squared
// weights (n+m+1)/(n+m+2), n = 0, 1, ...
struct MonomialMeasure {
    long m = 0;
};

inline BigRational moment(const MonomialMeasure& mu, long n) {
    if (n < 0) throw error("moment: negative index");
    return make_rational(mu.m + 1, n + mu.m + 1);
}

// m_1, ..., m_count; nullopt when any of them diverges
inline std::optional<std::vector<BigRational>> try_inverse_moments(const MonomialMeasure& mu,
                                                                   size_t count) {
    if (static_cast<long>(count) > mu.m) return std::nullopt;  // int t^{m-j} dt diverges past j = m
    std::vector<BigRational> out;
    out.reserve(count);
    for (size_t j = 1; j <= count; ++j)
        out.push_back(make_rational(mu.m + 1, mu.m + 1 - static_cast<long>(j)));
    return out;
}

// Exact inverse moments of an atomic measure via the backward moment
// recursion of its generating spec; equal to sum_i rho_i / s_i^n.
inline std::optional<std::vector<BigRational>> try_inverse_moments(const AtomicMeasure& mu,
                                                                   size_t count) {
    return spec_inverse_moments(mu.spec, count);
}

template <typename Measure>
BigRational inverse_moment(const Measure& mu, size_t n) {
    if (n == 0) return BigRational(1);
    auto ms = try_inverse_moments(mu, n);
    if (!ms) throw error("not integrable: the measure has mass at the origin");
    return ms->back();
}

// The unique squared weight a one-step extension can carry when it is forced:
// x_1^2 = 1/m_1.
template <typename Measure>
BigRational unique_backstep(const Measure& mu) {
    return BigRational(1) / inverse_moment(mu, 1);
}

// ---------------------------------------------------------------------------
// n-step extensions

struct ExtensionReport {
    size_t steps = 0;
    bool feasible = false;
    std::string reason;               // set when infeasible
    std::vector<BigRational> forced;  // x_1^2 .. x_{n-1}^2, nearest the base first
    BigRational last_bound = 0;       // inclusive upper bound for x_n^2
};

namespace detail {

inline ExtensionReport extension_from_inverse(std::optional<std::vector<BigRational>> ms,
                                              size_t n) {
    if (n == 0) throw error("extension_weights: need n >= 1");
    ExtensionReport rep;
    rep.steps = n;
    if (!ms) {
        rep.reason = "inverse moment m_" + std::to_string(n) + " diverges";
        return rep;
    }
    const auto& m = *ms;
    for (const auto& v : m)
        if (v <= 0) {
            rep.reason = "inverse moments not positive; not a positive measure";
            return rep;
        }
    rep.feasible = true;
    BigRational mprev(1);
    for (size_t j = 1; j < n; ++j) {
        rep.forced.push_back(mprev / m[j - 1]);
        mprev = m[j - 1];
    }
    rep.last_bound = mprev / m[n - 1];
    return rep;
}

}  // namespace detail

template <typename Measure>
ExtensionReport extension_weights(const Measure& mu, size_t n) {
    return detail::extension_from_inverse(try_inverse_moments(mu, n), n);
}

// ---------------------------------------------------------------------------
// subnormality of a weight sequence

enum class Tri { yes, no, undecided };

struct SubnormalityReport {
    Tri verdict = Tri::undecided;
    std::string reason;
};

namespace detail {

// The measure mu represents the sub-shift starting at index f; extend it
// back across the prefix.  ms = inverse moments m_1 .. m_f of mu.
inline SubnormalityReport walk_back(const WeightSequence& seq, size_t f,
                                    std::optional<std::vector<BigRational>> ms) {
    if (f == 0) return {Tri::yes, "representing measure certified"};
    if (!ms) return {Tri::no, "prefix extension impossible: inverse moments diverge"};
    const auto& m = *ms;
    BigRational mprev(1);
    for (size_t j = 1; j < f; ++j) {
        if (m[j - 1] <= 0) return {Tri::no, "inverse moments not positive"};
        if (seq.weight_sq(f - j) != mprev / m[j - 1])
            return {Tri::no, "backward extension forces a different weight at index " +
                                 std::to_string(f - j)};
        mprev = m[j - 1];
    }
    if (m[f - 1] <= 0) return {Tri::no, "inverse moments not positive"};
    if (seq.weight_sq(0) > mprev / m[f - 1])
        return {Tri::no, "initial weight exceeds the backward extension bound"};
    return {Tri::yes, "certified by backward extension of the tail measure"};
}

}  // namespace detail

// Decide subnormality when the tail has a recognized representing measure:
// constant tails (point mass), recursive tails (atomic measure of the
// restriction), and the (n+1)/(n+2) rational tail (monomial measure).
// Everything else is reported undecided rather than guessed.
inline SubnormalityReport is_subnormal(const WeightSequence& seq, long digits = 50) {
    const auto& pre = seq.prefix_sq();
    size_t L = pre.size();

    if (const auto* t = std::get_if<ConstantTail>(&seq.tail())) {
        // delta_c has m_j = c^-j, so every forced weight equals c
        for (size_t i = 1; i < L; ++i)
            if (pre[i] != t->c)
                return {Tri::no, "point-mass tail forces alpha_i^2 = c for all i >= 1"};
        if (L >= 1 && pre[0] > t->c)
            return {Tri::no, "initial weight exceeds the tail constant"};
        return {Tri::yes, "point mass at the tail constant"};
    }

    if (const auto* t = std::get_if<RecursiveTail>(&seq.tail())) {
        size_t r = t->phi.size();
        // the tail rule guarantees the moment recursion from n = L - r + 1 on;
        // descend to the smallest index f from which it holds throughout
        size_t f = L - r + 1;
        while (f > 0) {
            size_t n = f - 1;
            BigRational rhs(0);
            for (size_t i = 0; i < r; ++i) rhs += t->phi[i] * seq.gamma(n + i);
            if (seq.gamma(n + r) != rhs) break;
            --f;
        }
        RecursionSpec spec;
        spec.phi = t->phi;
        for (size_t i = 0; i < r; ++i) spec.seed_gammas.push_back(seq.gamma(f + i) / seq.gamma(f));
        if (!is_subnormal_recursive(spec, digits))
            return {Tri::no, "tail restriction has no positive representing measure"};
        return detail::walk_back(seq, f, spec_inverse_moments(spec, f));
    }

    const auto& t = std::get<RationalInNTail>(seq.tail());
    // recognize exactly the (n+1)/(n+2) tail: num * (t+2) == den * (t+1)
    RationalPolynomial tp1{BigRational(1), BigRational(1)};
    RationalPolynomial tp2{BigRational(2), BigRational(1)};
    if (!(t.num * tp2 == t.den * tp1))
        return {Tri::undecided, "no exact certificate for this tail shape"};
    MonomialMeasure mm{static_cast<long>(L)};
    return detail::walk_back(seq, L, try_inverse_moments(mm, L));
}

}  // namespace shiftkit
