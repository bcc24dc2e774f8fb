#pragma once

// Closed rational intervals used as certified enclosures of real values.
// Endpoints are exact rationals, so interval arithmetic here has no rounding
// step: results are the tightest representable bounds.

#include "shiftkit/rational.hpp"

#include <algorithm>
#include <string>

namespace shiftkit {

struct Enclosure {
    BigRational lo, hi;

    Enclosure() : lo(0), hi(0) {}
    Enclosure(BigRational point) : lo(point), hi(std::move(point)) {}
    Enclosure(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw error("Enclosure: lo > hi");
    }

    bool exact() const { return lo == hi; }
    BigRational mid() const { return (lo + hi) / 2; }
    BigRational width() const { return hi - lo; }
    bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool certainly_positive() const { return lo > 0; }
    bool certainly_negative() const { return hi < 0; }
    bool certainly_nonneg() const { return lo >= 0; }

    std::string str() const {
        if (exact()) return rat_to_string(lo);
        return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + "]";
    }
};

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }

inline Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero()) throw error("Enclosure division by interval containing zero");
    return a * Enclosure{BigRational(1) / b.hi, BigRational(1) / b.lo};
}

inline Enclosure pow_int(const Enclosure& a, long e) {
    if (e < 0) return Enclosure{BigRational(1)} / pow_int(a, -e);
    // even powers of sign-straddling intervals need the hull through zero
    if (e % 2 == 0 && a.contains_zero()) {
        BigRational m = std::max(rat_abs(a.lo), rat_abs(a.hi));
        return {BigRational(0), pow_int(m, e)};
    }
    return {std::min(pow_int(a.lo, e), pow_int(a.hi, e)),
            std::max(pow_int(a.lo, e), pow_int(a.hi, e))};
}

}  // namespace shiftkit
