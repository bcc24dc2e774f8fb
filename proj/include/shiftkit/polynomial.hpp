#pragma once

// Dense univariate polynomials over the rationals: arithmetic, Sturm chains,
// distinct-real-root counting, root isolation with exact detection of
// rational roots, and an exact decision procedure for nonnegativity on the
// closed half-line t >= 0.

#include "shiftkit/interval.hpp"
#include "shiftkit/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace shiftkit {

class RationalPolynomial {
    std::vector<BigRational> c_;  // lowest degree first, no trailing zeros

    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

  public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<BigRational> coeffs) : c_(coeffs) { strip(); }
    explicit RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static RationalPolynomial monomial(const BigRational& a, size_t k) {
        std::vector<BigRational> v(k + 1);
        v[k] = a;
        return RationalPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    const std::vector<BigRational>& coeffs() const { return c_; }

    BigRational coeff(size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
    BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

    BigRational operator()(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigRational> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * BigRational(BigInt(k));
        return RationalPolynomial(std::move(d));
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> v(a.c_.size() + b.c_.size() - 1, BigRational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(v));
    }
    friend RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& a) {
        if (s == 0) return {};
        std::vector<BigRational> v = a.c_;
        for (auto& x : v) x *= s;
        return RationalPolynomial(std::move(v));
    }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    // quotient and remainder; b must be nonzero
    friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                    const RationalPolynomial& b) {
        if (b.is_zero()) throw error("divmod: division by zero polynomial");
        RationalPolynomial r = a;
        std::vector<BigRational> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                                   BigRational(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t k = static_cast<size_t>(r.degree() - b.degree());
            BigRational f = r.leading() / b.leading();
            q[k] = f;
            r = r - monomial(f, k) * b;
        }
        return {RationalPolynomial(std::move(q)), r};
    }

    // drop the t^k factor; returns k (number of roots at the origin, with multiplicity)
    size_t strip_origin_roots() {
        size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        c_.erase(c_.begin(), c_.begin() + k);
        return k;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rat_to_string(c_[k]);
            if (k > 0) s += "*t^" + std::to_string(k);
        }
        return s;
    }
};

// Scale by a positive rational so the coefficients become coprime integers.
inline RationalPolynomial primitive(const RationalPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt l(1), g(0);
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    std::vector<BigRational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c * BigRational(l));
    for (const auto& c : v) g = boost::multiprecision::gcd(g, num(c));
    if (g > 1)
        for (auto& c : v) c /= BigRational(g);
    return RationalPolynomial(std::move(v));
}

// Primitive positive-leading gcd.
inline RationalPolynomial gcd_poly(RationalPolynomial a, RationalPolynomial b) {
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        RationalPolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = primitive(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = BigRational(-1) * a;
    return a;
}

// Same distinct roots, all simple.
inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
    if (p.degree() <= 1) return primitive(p);
    RationalPolynomial g = gcd_poly(p, p.derivative());
    if (g.degree() == 0) return primitive(p);
    return primitive(divmod(p, g).first);
}

// All real roots lie strictly inside (-B, B).
inline BigRational cauchy_root_bound(const RationalPolynomial& p) {
    if (p.degree() < 1) return BigRational(1);
    BigRational m(0);
    for (int k = 0; k < p.degree(); ++k)
        m = std::max(m, rat_abs(p.coeff(static_cast<size_t>(k))));
    return BigRational(1) + m / rat_abs(p.leading());
}

// ---------------------------------------------------------------------------
// Sturm chains

// p, p', then negated remainders down to the gcd.  Every element is kept
// primitive; positive scaling does not change sign variation counts.
inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(primitive(p));
    RationalPolynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive(d));
    while (true) {
        const RationalPolynomial& a = chain[chain.size() - 2];
        const RationalPolynomial& b = chain[chain.size() - 1];
        RationalPolynomial r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(primitive(BigRational(-1) * r));
    }
    return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int variations_at(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sign(q(x)));
    return sign_variations(signs);
}

// dir = +1 for +infinity, -1 for -infinity
inline int variations_at_infinity(const std::vector<RationalPolynomial>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        int s = sign(q.leading());
        if (dir < 0 && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

// Number of distinct real roots in (a, b].  Sign variations ignore zero
// entries, so b (but not a) is allowed to be a root of the chain head.
inline int count_roots_halfopen(const std::vector<RationalPolynomial>& chain, const BigRational& a,
                                const BigRational& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

// Distinct real roots in the open interval (0, +inf).  Roots at the origin
// and multiplicities are ignored.  The zero polynomial has no well-defined
// answer.
inline int count_positive_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw error("count_positive_roots: zero polynomial has indeterminate sign");
    RationalPolynomial q = p;
    q.strip_origin_roots();
    if (q.degree() < 1) return 0;
    RationalPolynomial h = square_free_part(q);
    auto chain = sturm_chain(h);
    return variations_at(chain, BigRational(0)) - variations_at_infinity(chain, +1);
}

inline int count_distinct_real_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw error("count_distinct_real_roots: zero polynomial");
    if (p.degree() < 1) return 0;
    RationalPolynomial h = square_free_part(p);
    auto chain = sturm_chain(h);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

// ---------------------------------------------------------------------------
// root isolation

// lo == hi encodes an exact rational root; otherwise the unique root lies in
// the open interval (lo, hi) and neither endpoint is a root.
using RootEnclosure = Enclosure;

namespace detail {

// A point in (a, b) that is not a root of h, found by scanning dyadic
// subdivisions; h has finitely many roots so the scan terminates.
inline BigRational nonroot_split(const RationalPolynomial& h, const BigRational& a,
                                 const BigRational& b) {
    BigRational span = b - a;
    for (long level = 1;; ++level) {
        BigInt d = BigInt(1) << level;
        for (BigInt k = 1; k < d; k += 2) {
            BigRational m = a + span * BigRational(k, d);
            if (h(m) != 0) return m;
        }
    }
}

// If the open interval (lo, hi) contains a rational root of h it must be a
// grid point k/L where L = |leading coefficient of the primitive integer
// form| (rational root theorem).  Shrink the interval below the grid spacing
// and test the single candidate.
inline std::optional<BigRational> rational_root_in(const RationalPolynomial& h, BigRational& lo,
                                                   BigRational& hi) {
    BigInt L = boost::multiprecision::abs(num(primitive(h).leading()));
    BigRational spacing(BigInt(1), L);
    int slo = sign(h(lo));
    while (hi - lo >= spacing) {
        BigRational m = (lo + hi) / 2;
        BigRational v = h(m);
        if (v == 0) return m;
        if (sign(v) == slo)
            lo = m;
        else
            hi = m;
    }
    BigInt k = rat_floor(hi * BigRational(L));
    BigRational cand(k, L);
    if (cand > lo && cand < hi && h(cand) == 0) return cand;
    return std::nullopt;
}

}  // namespace detail

// Shrink a non-exact enclosure to width <= target by sign bisection on the
// square-free polynomial h owning the root.
inline void refine_enclosure(const RationalPolynomial& h, RootEnclosure& e,
                             const BigRational& target) {
    if (e.exact()) return;
    int slo = sign(h(e.lo));
    while (e.width() > target) {
        BigRational m = (e.lo + e.hi) / 2;
        BigRational v = h(m);
        if (v == 0) {  // landed on the root exactly
            e.lo = e.hi = m;
            return;
        }
        if (sign(v) == slo)
            e.lo = m;
        else
            e.hi = m;
    }
}

// Ascending enclosures of all distinct real roots of p.  Rational roots are
// reported exactly; irrational ones as open intervals with non-root rational
// endpoints, pairwise disjoint.
inline std::vector<RootEnclosure> isolate_real_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw error("isolate_real_roots: zero polynomial");
    std::vector<RootEnclosure> out;
    RationalPolynomial q = p;
    if (q.strip_origin_roots() > 0) out.push_back({BigRational(0), BigRational(0)});
    if (q.degree() >= 1) {
        RationalPolynomial h = square_free_part(q);
        auto chain = sturm_chain(h);
        BigRational bound = cauchy_root_bound(h);
        struct Node {
            BigRational a, b;
            int count;
        };
        std::vector<Node> stack;
        int total = count_roots_halfopen(chain, -bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
        while (!stack.empty()) {
            Node nd = stack.back();
            stack.pop_back();
            if (nd.count == 1) {
                RootEnclosure e{nd.a, nd.b};
                if (auto r = detail::rational_root_in(h, e.lo, e.hi)) e.lo = e.hi = *r;
                out.push_back(e);
                continue;
            }
            BigRational m = detail::nonroot_split(h, nd.a, nd.b);
            int left = count_roots_halfopen(chain, nd.a, m);
            if (left > 0) stack.push_back({nd.a, m, left});
            if (nd.count - left > 0) stack.push_back({m, nd.b, nd.count - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& x, const RootEnclosure& y) { return x.lo + x.hi < y.lo + y.hi; });
    return out;
}

// ---------------------------------------------------------------------------
// half-line nonnegativity

// Exact decision of "p(t) >= 0 for all t >= 0".  Sign changes can only occur
// at roots, so it suffices to check p at the origin, the sign at +infinity,
// and one sample between each pair of adjacent distinct positive roots
// (even-multiplicity roots merely touch zero and are allowed).  On failure
// *witness, when given, receives a t >= 0 with p(t) < 0.
inline bool nonneg_on_halfline(const RationalPolynomial& p, BigRational* witness = nullptr) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) {
        if (p.coeff(0) >= 0) return true;
        if (witness) *witness = 0;
        return false;
    }
    if (p(BigRational(0)) < 0) {
        if (witness) *witness = 0;
        return false;
    }
    if (p.leading() < 0) {
        // beyond every root the sign is that of the leading coefficient
        BigRational t = cauchy_root_bound(p) + 1;
        if (witness) *witness = t;
        return false;
    }

    RationalPolynomial q = p;
    q.strip_origin_roots();
    if (q.degree() < 1) return true;
    RationalPolynomial h = square_free_part(q);

    std::vector<RootEnclosure> roots;
    for (auto& e : isolate_real_roots(h)) {
        // separate every enclosure from the origin; 0 is not a root of h here
        while (!e.exact() && e.lo < 0 && e.hi > 0) refine_enclosure(h, e, e.width() / 4);
        if (e.exact() ? e.lo > 0 : e.lo >= 0) roots.push_back(e);
    }
    if (roots.empty()) return true;  // constant sign on (0, inf), positive at infinity

    // sample strictly left of the first root
    RootEnclosure& first = roots.front();
    while (!first.exact() && first.lo == 0) refine_enclosure(h, first, first.width() / 4);
    std::vector<BigRational> samples;
    samples.push_back(first.exact() ? first.lo / 2 : first.lo);
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        const BigRational& r = roots[i].hi;
        const BigRational& l = roots[i + 1].lo;
        samples.push_back(r < l ? (r + l) / 2 : r);
    }
    for (const auto& s : samples)
        if (s > 0 && p(s) < 0) {
            if (witness) *witness = s;
            return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// interval evaluation

// Horner scheme over enclosures; the result contains p(x) for every x in e.
inline Enclosure evaluate(const RationalPolynomial& p, const Enclosure& e) {
    Enclosure acc{BigRational(0)};
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * e + Enclosure{p.coeff(static_cast<size_t>(k))};
    return acc;
}

}  // namespace shiftkit
