#pragma once

// Weighted shift sequences.  Weights are stored and exchanged as squares
// (alpha_n^2), which keeps every derived quantity rational.  A sequence is a
// finite explicit prefix plus a tail rule; three tail kinds are supported:
//
//   constant       alpha_n^2 = c
//   rational_in_n  alpha_n^2 = num(n)/den(n), integer-coefficient polynomials
//   recursive      moments satisfy gamma_{n+r} = phi_0 gamma_n + ... +
//                  phi_{r-1} gamma_{n+r-1}, seeded by the last r prefix
//                  entries; weights iterate gamma-free via
//                  alpha_N^2 = phi_{r-1} + phi_{r-2}/alpha_{N-1}^2 + ...
//
// Positivity of recursive tails cannot be decided up front, so it is
// certified lazily: probing a weight that leaves the positive cone throws.

#include "shiftkit/polynomial.hpp"
#include "shiftkit/rational.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

namespace shiftkit {

struct ConstantTail {
    BigRational c;
};

struct RecursiveTail {
    std::vector<BigRational> phi;  // phi_0 .. phi_{r-1}
};

struct RationalInNTail {
    RationalPolynomial num, den;  // integer coefficients, den(n) != 0 and num/den > 0 on the tail
};

using TailRule = std::variant<ConstantTail, RecursiveTail, RationalInNTail>;

namespace detail {

inline void require_integer_coeffs(const RationalPolynomial& p, const char* which) {
    for (const auto& c : p.coeffs())
        if (den(c) != 1) throw error(std::string("rational_in_n tail: ") + which +
                                     " must have integer coefficients");
}

// num(n)*den(n) > 0 for every integer n >= start: checked at all integers up
// to the Cauchy root bound, then by the sign at infinity.
inline void require_positive_tail(const RationalPolynomial& num, const RationalPolynomial& den,
                                  size_t start) {
    if (num.is_zero()) throw error("rational_in_n tail: zero numerator");
    if (den.is_zero()) throw error("rational_in_n tail: zero denominator");
    RationalPolynomial prod = num * den;
    if (prod.leading() < 0)
        throw error("rational_in_n tail: negative for large n");
    BigInt bound = rat_ceil(cauchy_root_bound(prod));
    for (BigInt n = BigInt(start); n <= bound; ++n)
        if (prod(BigRational(n)) <= 0)
            throw error("rational_in_n tail: not positive at n = " + n.str());
}

}  // namespace detail

class WeightSequence {
    std::vector<BigRational> prefix_;
    TailRule tail_;

    struct Memo {
        std::mutex mu;
        std::vector<BigRational> weights;  // alpha_n^2, grown on demand
        std::vector<BigRational> gammas;   // gamma_n = alpha_0^2 ... alpha_{n-1}^2
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();

    // requires memo_->mu held
    void grow_weights(size_t upto) const {
        auto& w = memo_->weights;
        if (w.size() > upto) return;
        if (w.empty()) w = prefix_;
        while (w.size() <= upto) {
            size_t n = w.size();
            if (const auto* t = std::get_if<ConstantTail>(&tail_)) {
                w.push_back(t->c);
            } else if (const auto* t = std::get_if<RationalInNTail>(&tail_)) {
                w.push_back(t->num(BigRational(BigInt(n))) / t->den(BigRational(BigInt(n))));
            } else {
                const auto& phi = std::get<RecursiveTail>(tail_).phi;
                size_t r = phi.size();
                // alpha_n^2 = phi_{r-1} + sum_{i<r-1} phi_i / (alpha_{n-1}^2 ... alpha_{n-r+1+i}^2)
                BigRational v = phi[r - 1];
                BigRational prod(1);
                for (size_t i = r - 1; i-- > 0;) {
                    prod *= w[n - (r - 1 - i)];
                    v += phi[i] / prod;
                }
                if (v <= 0)
                    throw error("recursive tail leaves the positive cone at index " +
                                std::to_string(n));
                w.push_back(v);
            }
        }
    }

  public:
    WeightSequence(std::vector<BigRational> prefix_sq, TailRule tail)
        : prefix_(std::move(prefix_sq)), tail_(std::move(tail)) {
        for (const auto& a : prefix_)
            if (a <= 0) throw error("weights must be positive");
        if (const auto* t = std::get_if<ConstantTail>(&tail_)) {
            if (t->c <= 0) throw error("constant tail must be positive");
        } else if (const auto* t = std::get_if<RecursiveTail>(&tail_)) {
            if (t->phi.empty()) throw error("recursive tail needs at least one coefficient");
            if (prefix_.size() < t->phi.size())
                throw error("recursive tail of order " + std::to_string(t->phi.size()) +
                            " needs that many seed weights in the prefix");
        } else {
            const auto& t2 = std::get<RationalInNTail>(tail_);
            detail::require_integer_coeffs(t2.num, "numerator");
            detail::require_integer_coeffs(t2.den, "denominator");
            if (t2.num.degree() > t2.den.degree())
                throw error("rational_in_n tail: unbounded (numerator degree exceeds denominator)");
            detail::require_positive_tail(t2.num, t2.den, prefix_.size());
        }
    }

    const std::vector<BigRational>& prefix_sq() const { return prefix_; }
    const TailRule& tail() const { return tail_; }

    BigRational weight_sq(size_t n) const {
        std::lock_guard<std::mutex> lock(memo_->mu);
        grow_weights(n);
        return memo_->weights[n];
    }

    // gamma_0 = 1, gamma_n = alpha_0^2 ... alpha_{n-1}^2
    BigRational gamma(size_t n) const {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto& g = memo_->gammas;
        if (g.empty()) g.push_back(BigRational(1));
        if (g.size() <= n) {
            grow_weights(n - 1);
            while (g.size() <= n) g.push_back(g.back() * memo_->weights[g.size() - 1]);
        }
        return g[n];
    }

    bool is_hyponormal_up_to(size_t N) const {
        for (size_t n = 0; n + 1 <= N; ++n)
            if (weight_sq(n) > weight_sq(n + 1)) return false;
        return true;
    }

    bool strictly_increasing_up_to(size_t N) const {
        for (size_t n = 0; n + 1 <= N; ++n)
            if (weight_sq(n) >= weight_sq(n + 1)) return false;
        return true;
    }

    // Same sequence except alpha_j^2 = x.  For recursive tails the prefix is
    // first materialized through index j + r with the original values so the
    // seeds, and hence every weight other than j, stay untouched.
    WeightSequence perturb(size_t j, const BigRational& x) const {
        if (x <= 0) throw error("perturb: weight must be positive");
        size_t need = j + 1;
        if (const auto* t = std::get_if<RecursiveTail>(&tail_))
            need = j + t->phi.size() + 1;
        std::vector<BigRational> p = prefix_;
        for (size_t n = p.size(); n < need; ++n) p.push_back(weight_sq(n));
        p[j] = x;
        return WeightSequence(std::move(p), tail_);
    }
};

// g(t) = t^r - phi_{r-1} t^{r-1} - ... - phi_1 t - phi_0, whose roots carry
// the atoms of the associated measure.
inline RationalPolynomial recursion_polynomial(const std::vector<BigRational>& phi) {
    std::vector<BigRational> g(phi.size() + 1);
    for (size_t i = 0; i < phi.size(); ++i) g[i] = -phi[i];
    g[phi.size()] = 1;
    return RationalPolynomial(std::move(g));
}

// The recursion spec (phi, gamma seeds) of a sequence whose moments satisfy
// the recursive tail rule globally, i.e. from n = 0 on, not merely beyond the
// prefix.  Returns nullopt for other sequences.
struct RecursionSpec {
    std::vector<BigRational> phi;
    std::vector<BigRational> seed_gammas;  // gamma_0 .. gamma_{r-1}, gamma_0 = 1
};

inline std::optional<RecursionSpec> globally_recursive_spec(const WeightSequence& seq) {
    const auto* t = std::get_if<RecursiveTail>(&seq.tail());
    if (!t) return std::nullopt;
    size_t r = t->phi.size();
    size_t L = seq.prefix_sq().size();
    for (size_t n = 0; n + r < L + 1; ++n) {  // indices constrained inside the prefix
        BigRational rhs(0);
        for (size_t i = 0; i < r; ++i) rhs += t->phi[i] * seq.gamma(n + i);
        if (seq.gamma(n + r) != rhs) return std::nullopt;
    }
    std::vector<BigRational> seeds;
    for (size_t i = 0; i < r; ++i) seeds.push_back(seq.gamma(i));
    return RecursionSpec{t->phi, std::move(seeds)};
}

// Exact supremum of alpha_n^2 for constant and rational tails; for recursive
// tails an upper bound from the prefix and the largest root of the recursion
// polynomial g(t) = t^r - phi_{r-1} t^{r-1} - ... - phi_0, refined to tol.
inline BigRational norm_sq_sup(const WeightSequence& seq, const BigRational& tol = BigRational(1, 1000000)) {
    BigRational best(0);
    for (const auto& a : seq.prefix_sq()) best = std::max(best, a);
    if (const auto* t = std::get_if<ConstantTail>(&seq.tail())) {
        return std::max(best, t->c);
    }
    if (const auto* t = std::get_if<RationalInNTail>(&seq.tail())) {
        // beyond every critical point the tail is monotone, so the sup over
        // integers is attained at an integer below the bound or in the limit
        RationalPolynomial crit = t->num.derivative() * t->den - t->den.derivative() * t->num;
        BigInt bound = crit.is_zero() ? BigInt(1) : rat_ceil(cauchy_root_bound(crit));
        for (BigInt n = BigInt(seq.prefix_sq().size()); n <= bound + 1; ++n)
            best = std::max(best, t->num(BigRational(n)) / t->den(BigRational(n)));
        if (t->num.degree() == t->den.degree())
            best = std::max(best, t->num.leading() / t->den.leading());
        return best;
    }
    const auto& phi = std::get<RecursiveTail>(seq.tail()).phi;
    RationalPolynomial gp = recursion_polynomial(phi);
    auto roots = isolate_real_roots(gp);
    if (roots.empty()) return std::max(best, cauchy_root_bound(gp));
    RootEnclosure top = roots.back();
    refine_enclosure(square_free_part(gp), top, tol);
    return std::max(best, top.hi);
}

}  // namespace shiftkit
