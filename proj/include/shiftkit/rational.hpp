#pragma once

// Exact rational scalar used everywhere in this library, plus string
// conversions.  All arithmetic is arbitrary precision; values are kept in
// canonical reduced form (gcd(num, den) = 1, den > 0) by the backing type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

// p/q with any sign pattern; the backing type's two-argument constructor
// rejects negative denominators instead of normalizing them.
inline BigRational make_rational(BigInt p, BigInt q) {
    if (q == 0) throw error("make_rational: zero denominator");
    if (q < 0) { p = -p; q = -q; }
    return BigRational(p, q);
}

inline int sign(const BigRational& q) { return q.sign(); }

inline BigRational rat_abs(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

// q^e for any integer e; q must be nonzero when e < 0.
inline BigRational pow_int(const BigRational& q, long e) {
    if (e < 0) {
        if (q == 0) throw error("pow_int: zero base with negative exponent");
        return pow_int(BigRational(1) / q, -e);
    }
    BigRational acc(1), base(q);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline BigInt pow10(long e) {
    BigInt r(1), ten(10);
    for (long i = 0; i < e; ++i) r *= ten;
    return r;
}

// floor(a/b) with sign-correct semantics (cpp_int division truncates).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rat_floor(const BigRational& q) { return floor_div(num(q), den(q)); }

inline BigInt rat_ceil(const BigRational& q) { return -rat_floor(-q); }

// ---------------------------------------------------------------------------
// parsing

// Strict "p" or "p/q" form, q > 0 after normalization.
inline BigRational parse_rational(std::string_view s) {
    auto bad = [&] { throw error("parse_rational: invalid rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto parse_int = [&](std::string_view t) -> BigInt {
        if (t.empty()) bad();
        bool neg = t[0] == '-';
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) bad();
        // skip leading zeros: the backing type reads them as an octal prefix
        while (i + 1 < t.size() && t[i] == '0') ++i;
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') bad();
        BigInt v(std::string(t.substr(i)));
        return neg ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return BigRational(parse_int(s));
    BigInt p = parse_int(s.substr(0, slash));
    BigInt q = parse_int(s.substr(slash + 1));
    if (q == 0) throw error("parse_rational: zero denominator in '" + std::string(s) + "'");
    return make_rational(std::move(p), std::move(q));
}

// Accepts "p/q", plain integers, and decimal/scientific literals ("0.645",
// "1e-9", "-2.5e3"); everything converts exactly to a rational.
inline BigRational parse_number(std::string_view s) {
    if (s.find('/') != std::string_view::npos) return parse_rational(s);
    auto bad = [&] { throw error("parse_number: invalid number '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
    std::string digits;
    long frac_len = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_point) ++frac_len;
        } else if (c == '.') {
            if (seen_point) bad();
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            bad();
        }
    }
    if (!seen_digit) bad();
    long exp10 = 0;
    if (i < s.size()) {  // exponent part
        ++i;
        if (i >= s.size()) bad();
        bool eneg = false;
        if (s[i] == '+' || s[i] == '-') { eneg = s[i] == '-'; ++i; }
        if (i >= s.size()) bad();
        long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') bad();
            v = v * 10 + (s[i] - '0');
            if (v > 100000) throw error("parse_number: exponent out of range");
        }
        exp10 = eneg ? -v : v;
    }
    size_t first = digits.find_first_not_of('0');  // octal-prefix trap, as above
    BigRational r(first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first)));
    long e = exp10 - frac_len;
    if (e > 0) r *= BigRational(pow10(e));
    if (e < 0) r /= BigRational(pow10(-e));
    return neg ? BigRational(-r) : r;
}

// ---------------------------------------------------------------------------
// formatting

// "p/q", with "/q" omitted for integers.
inline std::string rat_to_string(const BigRational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

enum class Round { nearest, down, up };

// 10^e as a rational for any integer e.
inline BigRational pow10_signed(long e) {
    return e >= 0 ? BigRational(pow10(e)) : BigRational(BigInt(1), pow10(-e));
}

// Decimal exponent e with 10^e <= |q| < 10^{e+1}; q must be nonzero.
inline long dec_exponent(const BigRational& q) {
    BigRational a = rat_abs(q);
    long bits = static_cast<long>(boost::multiprecision::msb(num(a))) -
                static_cast<long>(boost::multiprecision::msb(den(a)));
    long e = static_cast<long>(bits * 0.3010299956639812) - 2;
    while (pow10_signed(e + 1) <= a) ++e;
    while (pow10_signed(e) > a) --e;
    return e;
}

// Rounded decimal rendering with `sig` significant digits.  Round::down /
// Round::up round toward -inf / +inf, which is what outward rounding of
// enclosure endpoints needs.
inline std::string decimal_string(const BigRational& q, int sig = 12, Round mode = Round::nearest) {
    if (sig < 1) throw error("decimal_string: sig must be >= 1");
    if (q == 0) return "0";
    long e = dec_exponent(q);
    long scale = sig - 1 - e;
    BigRational v = q * pow10_signed(scale);
    BigInt n;
    switch (mode) {
        case Round::nearest: n = rat_floor(v + BigRational(1, 2)); break;
        case Round::down: n = rat_floor(v); break;
        case Round::up: n = rat_ceil(v); break;
    }
    if (n == 0) return "0";
    bool neg = n < 0;
    BigInt mag = neg ? BigInt(-n) : n;
    if (mag >= pow10(sig)) {  // rounding bumped into one more digit
        mag /= 10;
        ++e;
    }
    std::string digits = mag.str();
    // digits has exactly sig characters now except when rounding down crossed
    // a power of ten; re-derive the exponent from its length to stay honest.
    e += static_cast<long>(digits.size()) - sig;
    std::string out;
    if (e >= -5 && e <= 14) {
        if (e >= static_cast<long>(digits.size()) - 1) {
            out = digits + std::string(e - digits.size() + 1, '0');
        } else if (e >= 0) {
            out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
        } else {
            out = "0." + std::string(-e - 1, '0') + digits;
        }
        if (out.find('.') != std::string::npos) {
            while (out.back() == '0') out.pop_back();
            if (out.back() == '.') out.pop_back();
        }
    } else {
        out = digits.substr(0, 1);
        std::string rest = digits.substr(1);
        while (!rest.empty() && rest.back() == '0') rest.pop_back();
        if (!rest.empty()) out += "." + rest;
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace shiftkit
