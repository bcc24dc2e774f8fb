#pragma once

// Quadratic hyponormality.  For a weighted shift the relevant quadratic form
// compresses to tridiagonal matrices D_n(t) with diagonal q_k = u_k + t v_k
// and off-diagonal pair product t w_k; quadratic hyponormality holds iff
// d_n(t) = det D_n(t) >= 0 for all t >= 0 and all n.  Positive quadratic
// hyponormality strengthens this to termwise nonnegative Maclaurin
// coefficients c(n, i) of d_n.

#include "shiftkit/hankel.hpp"
#include "shiftkit/polynomial.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace shiftkit {

// ---------------------------------------------------------------------------
// self-commutator data

struct CommutatorData {
    BigRational u, v, w, p;  // p = u_n v_{n+1} - w_n
};

namespace detail {

// squared weight with the boundary convention alpha_{-1} = alpha_{-2} = 0
inline BigRational wsq_ext(const WeightSequence& seq, long i) {
    return i < 0 ? BigRational(0) : seq.weight_sq(static_cast<size_t>(i));
}

}  // namespace detail

// u_n = a_n - a_{n-1},  v_n = a_n a_{n+1} - a_{n-1} a_{n-2},
// w_n = a_n (a_{n+1} - a_{n-1})^2   where a_i = alpha_i^2
inline CommutatorData commutator_data(const WeightSequence& seq, size_t n) {
    long i = static_cast<long>(n);
    auto a = [&](long k) { return detail::wsq_ext(seq, k); };
    CommutatorData e;
    e.u = a(i) - a(i - 1);
    e.v = a(i) * a(i + 1) - a(i - 1) * a(i - 2);
    e.w = a(i) * pow_int(a(i + 1) - a(i - 1), 2);
    e.p = e.u * (a(i + 1) * a(i + 2) - a(i) * a(i - 1)) - e.w;
    return e;
}

// ---------------------------------------------------------------------------
// the polynomials d_n

struct DnPolynomial {
    size_t level = 0;
    std::vector<BigRational> c;  // c[i] multiplies t^i; size level + 2

    RationalPolynomial poly() const { return RationalPolynomial(c); }
};

// Coefficient rows c(m, 0..m+1) for m = 0 .. n, generated by
//   c(m+2, i) = u_{m+2} c(m+1, i) + v_{m+2} c(m+1, i-1) - w_{m+1} c(m, i-1)
// (out-of-range entries read as zero, which reproduces the boundary columns
// c(m, 0) = u_0...u_m and c(m, m+1) = v_0...v_m) from the seed rows
//   d_0 = u_0 + v_0 t,   d_1 = u_0 u_1 + (u_1 v_0 + v_1 u_0 - w_0) t + v_0 v_1 t^2.
inline std::vector<DnPolynomial> dn_coeff_rows(const WeightSequence& seq, size_t n) {
    std::vector<CommutatorData> cd;
    cd.reserve(n + 1);
    for (size_t m = 0; m <= n; ++m) cd.push_back(commutator_data(seq, m));

    std::vector<DnPolynomial> rows;
    rows.reserve(n + 1);
    rows.push_back({0, {cd[0].u, cd[0].v}});
    if (n >= 1)
        rows.push_back({1,
                        {cd[0].u * cd[1].u, cd[1].u * cd[0].v + cd[1].v * cd[0].u - cd[0].w,
                         cd[0].v * cd[1].v}});
    for (size_t m = 2; m <= n; ++m) {
        const auto& c1 = rows[m - 1].c;
        const auto& c2 = rows[m - 2].c;
        std::vector<BigRational> row(m + 2);
        for (size_t i = 0; i <= m + 1; ++i) {
            BigRational acc = i < c1.size() ? cd[m].u * c1[i] : BigRational(0);
            if (i >= 1) {
                if (i - 1 < c1.size()) acc += cd[m].v * c1[i - 1];
                if (i - 1 < c2.size()) acc -= cd[m - 1].w * c2[i - 1];
            }
            row[i] = acc;
        }
        rows.push_back({m, std::move(row)});
    }
    return rows;
}

inline DnPolynomial dn_coeffs(const WeightSequence& seq, size_t n) {
    return dn_coeff_rows(seq, n).back();
}

// Independent evaluation of d_n(t) through the scalar two-step recursion
//   d_{m+2} = q_{m+2} d_{m+1} - t w_{m+1} d_m,   q_m = u_m + t v_m.
inline BigRational dn_via_det(const WeightSequence& seq, size_t n, const BigRational& t) {
    if (t < 0) throw error("dn_via_det: t must be >= 0");
    auto q = [&](size_t m) {
        CommutatorData e = commutator_data(seq, m);
        return e.u + t * e.v;
    };
    BigRational d0 = q(0);
    if (n == 0) return d0;
    BigRational d1 = q(0) * q(1) - t * commutator_data(seq, 0).w;
    for (size_t m = 2; m <= n; ++m) {
        BigRational d2 = q(m) * d1 - t * commutator_data(seq, m - 1).w * d0;
        d0 = std::move(d1);
        d1 = std::move(d2);
    }
    return d1;
}

// ---------------------------------------------------------------------------
// verdicts

struct QhVerdict {
    bool holds = true;
    size_t n = 0;            // first level whose polynomial dips negative
    BigRational witness_t;   // a t >= 0 with d_n(t) < 0
};

// d_m(t) >= 0 for every t >= 0 and every level m <= N, decided exactly by
// root isolation on each d_m.
inline QhVerdict is_quad_hyponormal(const WeightSequence& seq, size_t N) {
    auto rows = dn_coeff_rows(seq, N);
    for (size_t m = 0; m <= N; ++m) {
        // termwise nonnegative rows need no root isolation
        bool mixed = false;
        for (const auto& c : rows[m].c)
            if (c < 0) mixed = true;
        if (!mixed) continue;
        BigRational t;
        if (!nonneg_on_halfline(rows[m].poly(), &t)) return {false, m, t};
    }
    return {};
}

struct PqhVerdict {
    bool holds = true;
    size_t n = 0, i = 0;  // first offending coefficient position
    BigRational value;
};

// c(m, i) >= 0 for every m <= N (strictly > 0 when strict is set).
inline PqhVerdict is_positively_quad_hyponormal(const WeightSequence& seq, size_t N,
                                                bool strict = false) {
    auto rows = dn_coeff_rows(seq, N);
    for (size_t m = 0; m <= N; ++m)
        for (size_t i = 0; i < rows[m].c.size(); ++i) {
            const BigRational& val = rows[m].c[i];
            if (val < 0 || (strict && val == 0)) return {false, m, i, val};
        }
    return {};
}

// ---------------------------------------------------------------------------
// the product lower bound and its slack

struct BoundCheckVerdict {
    bool holds = true;
    size_t n = 0, i = 0;  // first violation
    BigRational value, bound;
};

namespace detail {

// bound(n, i) = v_0...v_{i-1} u_i...u_n as a table over 0 <= i <= n+1
inline std::vector<std::vector<BigRational>> product_bounds(const WeightSequence& seq, size_t N) {
    std::vector<BigRational> u, vpre{BigRational(1)};
    for (size_t m = 0; m <= N; ++m) {
        CommutatorData e = commutator_data(seq, m);
        u.push_back(e.u);
        vpre.push_back(vpre.back() * e.v);  // vpre[i] = v_0...v_{i-1}
    }
    std::vector<std::vector<BigRational>> b(N + 1);
    for (size_t n = 0; n <= N; ++n) {
        std::vector<BigRational> row(n + 2);
        row[n + 1] = vpre[n + 1];
        BigRational suff(1);
        for (size_t i = n + 1; i-- > 0;) {
            suff *= u[i];  // suff = u_i...u_n
            row[i] = vpre[i] * suff;
        }
        b[n] = std::move(row);
    }
    return b;
}

}  // namespace detail

// Verify the termwise lower bound c(n, i) >= v_0...v_{i-1} u_i...u_n for all
// n <= N.  The bound is a consequence of 2-hyponormality, so that hypothesis
// is checked first (up to N + 2) and other inputs are rejected.
inline BoundCheckVerdict theorem22_bound_check(const WeightSequence& seq, size_t N) {
    if (is_k_hyponormal(seq, 2, N + 2).kind == KHypoVerdict::Kind::fails)
        throw error("requires 2-hyponormality up to N + 2");
    auto rows = dn_coeff_rows(seq, N);
    auto bounds = detail::product_bounds(seq, N);
    for (size_t n = 0; n <= N; ++n)
        for (size_t i = 0; i < rows[n].c.size(); ++i)
            if (rows[n].c[i] < bounds[n][i]) return {false, n, i, rows[n].c[i], bounds[n][i]};
    return {};
}

// Slack beta(n, i) = c(n, i) - v_0...v_{i-1} u_i...u_n; beta(n, 0) = 0 by
// convention (and identically, via the boundary column).
inline BigRational beta(const WeightSequence& seq, size_t n, size_t i) {
    if (i > n + 1) throw error("beta: need i <= n + 1");
    if (i == 0) return BigRational(0);
    return dn_coeffs(seq, n).c[i] - detail::product_bounds(seq, n)[n][i];
}

// ---------------------------------------------------------------------------
// equivalent 2-hyponormality formulations (strictly increasing weights)

struct Lemma41Verdicts {
    bool dets = true;    // (i)   3x3 moment determinants >= 0
    bool square = true;  // (ii)  a_{n+1} (u_{n+1} + u_{n+2})^2 <= u_{n+1} v_{n+2}
    bool ratio = true;   // (iii) (a_n / a_{n+2}) (u_{n+2} / u_{n+3}) <= u_{n+1} / u_{n+2}
    bool pvals = true;   // (iv)  p_n >= 0

    bool all() const { return dets && square && ratio && pvals; }
    bool any() const { return dets || square || ratio || pvals; }
};

// Evaluate the four equivalent conditions over a shared slack window: each of
// (i)-(iii) at base index n controls the sign of p_{n+1}, and p_0 >= 0 is
// automatic, so (i)-(iii) run for n < N and (iv) for n <= N.  On strictly
// increasing input the four verdicts provably agree.
inline Lemma41Verdicts lemma41_equivalences(const WeightSequence& seq, size_t N) {
    if (!seq.strictly_increasing_up_to(N + 2))
        throw error("lemma41_equivalences: requires strictly increasing weights");
    Lemma41Verdicts out;
    std::vector<CommutatorData> cd;
    for (size_t m = 0; m <= N + 3; ++m) cd.push_back(commutator_data(seq, m));
    for (size_t n = 0; n + 1 <= N; ++n) {
        if (det_2hypo(seq, n) < 0) out.dets = false;
        const BigRational& a1 = seq.weight_sq(n + 1);
        if (a1 * pow_int(cd[n + 1].u + cd[n + 2].u, 2) > cd[n + 1].u * cd[n + 2].v)
            out.square = false;
        if (seq.weight_sq(n) / seq.weight_sq(n + 2) * (cd[n + 2].u / cd[n + 3].u) >
            cd[n + 1].u / cd[n + 2].u)
            out.ratio = false;
    }
    for (size_t n = 0; n <= N; ++n)
        if (cd[n].p < 0) out.pvals = false;
    return out;
}

// ---------------------------------------------------------------------------
// growth diagnostics

struct DiagnosticSeries {
    std::vector<BigRational> theta;  // theta[n] = u_{n+1} / u_{n+2},  n = 0 .. N
    std::vector<BigRational> kn;     // kn[j] = v_{j+2} / u_{j+2},     j = 0 .. N-2
    BigRational theta_bound;         // (u_1/u_2) (sup a_m)^2 / (a_0 a_1)
};

inline DiagnosticSeries theta_and_kn(const WeightSequence& seq, size_t N) {
    DiagnosticSeries d;
    std::vector<CommutatorData> cd;
    for (size_t m = 0; m <= N + 2; ++m) cd.push_back(commutator_data(seq, m));
    for (const auto& e : cd)
        if (e.u == 0) throw error("theta_and_kn: flat segment");
    for (size_t n = 0; n <= N; ++n) d.theta.push_back(cd[n + 1].u / cd[n + 2].u);
    for (size_t n = 2; n <= N; ++n) d.kn.push_back(cd[n].v / cd[n].u);
    d.theta_bound = cd[1].u / cd[2].u * pow_int(norm_sq_sup(seq), 2) /
                    (seq.weight_sq(0) * seq.weight_sq(1));
    return d;
}

}  // namespace shiftkit
