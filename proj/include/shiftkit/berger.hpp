#pragma once

// Finitely atomic representing measures of recursively generated moment
// sequences: recover atoms and densities (exactly, or as certified
// enclosures), run the moment recursion in both directions, and decide
// subnormality at the spec level.

#include "shiftkit/interval.hpp"
#include "shiftkit/matrix.hpp"
#include "shiftkit/polynomial.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace shiftkit {

// ---------------------------------------------------------------------------
// recursion specs

inline void validate_spec(const RecursionSpec& spec) {
    if (spec.phi.empty()) throw error("recursion spec: phi must be nonempty");
    if (spec.seed_gammas.size() != spec.phi.size())
        throw error("recursion spec: need exactly one seed moment per coefficient");
    if (spec.seed_gammas[0] != 1) throw error("recursion spec: gamma_0 must be 1");
}

// gamma_0 .. gamma_{count-1} under gamma_{n+r} = sum_i phi_i gamma_{n+i}
inline std::vector<BigRational> spec_moments(const RecursionSpec& spec, size_t count) {
    validate_spec(spec);
    size_t r = spec.phi.size();
    std::vector<BigRational> g = spec.seed_gammas;
    for (size_t m = r; m < count; ++m) {
        BigRational acc(0);
        for (size_t i = 0; i < r; ++i) acc += spec.phi[i] * g[m - r + i];
        g.push_back(acc);
    }
    g.resize(count);
    return g;
}

inline BigRational spec_moment(const RecursionSpec& spec, size_t n) {
    return spec_moments(spec, n + 1).back();
}

// Recover the order-r recursion from 2r leading moments by solving the
// r x r Hankel system gamma_{n+r} = sum_i phi_i gamma_{n+i}, n = 0 .. r-1.
// Throws when the moments admit no order-r recursion (singular system).
inline std::vector<BigRational> phi_from_moments(const std::vector<BigRational>& gam, size_t r) {
    if (r < 1 || gam.size() < 2 * r) throw error("phi_from_moments: need 2r moments");
    Mat A(r, r);
    std::vector<BigRational> b(r);
    for (size_t n = 0; n < r; ++n) {
        for (size_t i = 0; i < r; ++i) A.at(n, i) = gam[n + i];
        b[n] = gam[n + r];
    }
    return solve_linear(std::move(A), std::move(b));
}

// Coefficients of the order-2 recursion continuing the squared weights
// a < b < c:  gamma_{n+2} = phi_1 gamma_{n+1} + phi_0 gamma_n.
inline std::vector<BigRational> phi_from_three(const BigRational& a, const BigRational& b,
                                               const BigRational& c) {
    if (a == b) throw error("phi_from_three: degenerate (division by zero)");
    if (a <= 0 || !(a < b && b < c)) throw error("phi_from_three: need 0 < a < b < c");
    BigRational phi0 = -(a * b * (c - b)) / (b - a);
    BigRational phi1 = b * (c - a) / (b - a);
    return {phi0, phi1};
}

// The squared weights alpha_3^2, alpha_4^2 forced after (a, b, c) by the
// recursive continuation, in closed form.
inline std::pair<BigRational, BigRational> alpha34_closed_forms(const BigRational& a,
                                                                const BigRational& b,
                                                                const BigRational& c) {
    if (a == b) throw error("alpha34_closed_forms: degenerate (division by zero)");
    if (a <= 0 || !(a < b && b < c)) throw error("alpha34_closed_forms: need 0 < a < b < c");
    // c^2 - 2ac + ab > (c - a)^2 >= 0 on this domain, so both are safe
    BigRational k = c * c - 2 * a * c + a * b;
    BigRational a3 = b * k / (c * (b - a));
    BigRational a4 = (b * c * c * c - 4 * a * b * c * c + 2 * a * b * b * c + a * a * b * c -
                      a * a * b * b + a * a * c * c) /
                     ((b - a) * k);
    return {a3, a4};
}

// Strip leading zero coefficients: when phi_0 = 0 the order-(r-1) candidate
// phi' = (phi_1 .. phi_{r-1}) already holds for n >= 1, so it holds globally
// iff it holds at n = 0 (then induction transfers it upward).  Returns
// nullopt when the seeds genuinely need phi_0 -- the measure then carries
// positive mass at the origin.
inline std::optional<RecursionSpec> reduce_spec(RecursionSpec spec) {
    validate_spec(spec);
    while (spec.phi[0] == 0) {
        size_t r = spec.phi.size();
        if (r == 1) return std::nullopt;  // gamma_{n+1} = 0 cannot hold for moments
        BigRational rhs(0);
        for (size_t i = 0; i + 1 < r; ++i) rhs += spec.phi[i + 1] * spec.seed_gammas[i];
        if (spec.seed_gammas[r - 1] != rhs) return std::nullopt;
        spec.phi.erase(spec.phi.begin());
        spec.seed_gammas.pop_back();
    }
    return spec;
}

// Inverse moments m_j = gamma_{-j} = int t^{-j} dmu, j = 1 .. count, obtained
// by running the recursion backwards:
//   gamma_n = (gamma_{n+r} - sum_{i=1}^{r-1} phi_i gamma_{n+i}) / phi_0.
// Finite iff the origin carries no mass, i.e. iff the spec reduces to one
// with phi_0 != 0; otherwise nullopt.
inline std::optional<std::vector<BigRational>> spec_inverse_moments(const RecursionSpec& spec,
                                                                    size_t count) {
    auto red = reduce_spec(spec);
    if (!red) return std::nullopt;
    const auto& phi = red->phi;
    size_t r = phi.size();
    std::vector<BigRational> w = red->seed_gammas;  // gamma_{-j+1} .. gamma_{-j+r}
    std::vector<BigRational> out;
    out.reserve(count);
    for (size_t j = 1; j <= count; ++j) {
        BigRational acc = w[r - 1];
        for (size_t i = 1; i < r; ++i) acc -= phi[i] * w[i - 1];
        acc /= phi[0];
        out.push_back(acc);
        for (size_t i = r; i-- > 1;) w[i] = w[i - 1];
        w[0] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// atomic measures

// sum_i rho_i delta_{s_i} with atoms ascending; rational atoms and densities
// are point enclosures.  An atom at the origin is permitted (flagged); its
// density may legitimately vanish.
struct AtomicMeasure {
    std::vector<RootEnclosure> atoms;
    std::vector<Enclosure> densities;
    bool atom_at_origin = false;
    bool negative_atom = false;
    bool valid = false;  // all atoms >= 0 and all densities >= 0
    RecursionSpec spec;  // generating recursion, kept for exact follow-up queries
};

// Recover the representing measure of the spec.  The atoms are the roots of
// the recursion polynomial g; each density is the Lagrange evaluation
//   rho_i = sum_k q_k gamma_k / g'(s_i),   q = g / (t - s_i),
// computed in enclosure arithmetic (exact whenever s_i is rational).  Atoms
// are refined to width <= 10^-digits, and further until every density sign
// is certain.
inline AtomicMeasure berger_measure(const RecursionSpec& spec, long digits = 50) {
    validate_spec(spec);
    RationalPolynomial g = recursion_polynomial(spec.phi);
    if (square_free_part(g).degree() != g.degree())
        throw error("not a valid recursive subnormal spec: repeated recursion roots");
    auto atoms = isolate_real_roots(g);
    if (atoms.size() != static_cast<size_t>(g.degree()))
        throw error("not a valid recursive subnormal spec: complex recursion roots");

    size_t r = atoms.size();
    BigRational eps = make_rational(1, pow10(digits));
    for (auto& e : atoms) {
        refine_enclosure(g, e, eps);
        // separate every enclosure from zero so atom signs are certain
        while (!e.exact() && e.lo < 0 && e.hi > 0) refine_enclosure(g, e, e.width() / 4);
    }

    RationalPolynomial gd = g.derivative();
    AtomicMeasure mu;
    for (int attempt = 0;; ++attempt) {
        std::vector<Enclosure> dens;
        dens.reserve(r);
        bool certain = true;
        for (size_t i = 0; i < r && certain; ++i) {
            const Enclosure& s = atoms[i];
            Enclosure dgs = evaluate(gd, s);
            if (dgs.contains_zero()) {
                certain = false;
                break;
            }
            std::vector<Enclosure> q(r);  // g / (t - s), top-down synthetic division
            q[r - 1] = Enclosure{g.coeff(r)};
            for (size_t k = r - 1; k >= 1; --k)
                q[k - 1] = Enclosure{g.coeff(k)} + s * q[k];
            Enclosure acc{BigRational(0)};
            for (size_t k = 0; k < r; ++k) acc = acc + q[k] * Enclosure{spec.seed_gammas[k]};
            Enclosure rho = acc / dgs;
            if (!rho.exact() && rho.contains_zero()) certain = false;
            dens.push_back(rho);
        }
        if (certain) {
            mu.densities = std::move(dens);
            break;
        }
        if (attempt >= 4)
            throw error("cannot certify density signs; increase precision or use a minimal recursion");
        eps = eps * eps;
        for (auto& e : atoms) refine_enclosure(g, e, eps);
    }

    mu.atoms = std::move(atoms);
    mu.spec = spec;
    bool dens_ok = true;
    for (const auto& e : mu.atoms) {
        if (e.exact() && e.lo == 0) mu.atom_at_origin = true;
        if (e.certainly_negative() || (e.exact() && e.lo < 0)) mu.negative_atom = true;
    }
    for (const auto& d : mu.densities)
        if (!d.certainly_nonneg()) dens_ok = false;
    mu.valid = !mu.negative_atom && dens_ok;
    return mu;
}

// Subnormality of the shift the spec generates: the representing measure must
// be a positive measure on [0, inf) and must reproduce the moments (checked
// for n <= 2r, which pins a measure with r atoms).
inline bool is_subnormal_recursive(const RecursionSpec& spec, long digits = 50) {
    AtomicMeasure mu = berger_measure(spec, digits);
    if (!mu.valid) return false;
    size_t r = spec.phi.size();
    auto gam = spec_moments(spec, 2 * r + 1);
    for (size_t n = 0; n <= 2 * r; ++n) {
        Enclosure acc{BigRational(0)};
        for (size_t i = 0; i < mu.atoms.size(); ++i)
            acc = acc + mu.densities[i] * pow_int(mu.atoms[i], static_cast<long>(n));
        if (!acc.contains(gam[n])) return false;
    }
    return true;
}

// The weighted shift whose moments the spec generates: prefix alpha_n^2 =
// gamma_{n+1}/gamma_n for n < r, then the recursive tail takes over.
inline WeightSequence sequence_from_spec(const RecursionSpec& spec) {
    validate_spec(spec);
    size_t r = spec.phi.size();
    auto gam = spec_moments(spec, r + 1);
    std::vector<BigRational> prefix;
    prefix.reserve(r);
    for (size_t n = 0; n < r; ++n) {
        if (gam[n] <= 0 || gam[n + 1] <= 0)
            throw error("sequence_from_spec: moments leave the positive cone");
        prefix.push_back(gam[n + 1] / gam[n]);
    }
    return WeightSequence(std::move(prefix), RecursiveTail{spec.phi});
}

}  // namespace shiftkit
