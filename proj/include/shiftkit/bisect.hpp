#pragma once

// Guarded bisection on a monotone boolean predicate with exact rational
// midpoints.  The caller supplies a bracket on which the predicate flips
// exactly once; the bracket invariant is maintained every step, so the
// returned points certify themselves.

#include "shiftkit/rational.hpp"

#include <functional>
#include <utility>

namespace shiftkit {

struct BisectBracket {
    BigRational true_end, false_end;  // pred(true_end) holds, pred(false_end) does not
};

template <class Pred>
BisectBracket bisect_bracket(Pred&& pred, const BigRational& lo, const BigRational& hi,
                             const BigRational& tol) {
    if (tol <= 0) throw error("bisect: tol must be positive");
    if (lo >= hi) throw error("bisect: empty bracket");
    bool plo = pred(lo), phi = pred(hi);
    if (plo == phi) throw error("bisect: predicate does not flip across the bracket");
    BigRational t = plo ? lo : hi;
    BigRational f = plo ? hi : lo;
    while (rat_abs(t - f) > tol) {
        BigRational mid = (t + f) / 2;
        (pred(mid) ? t : f) = mid;
    }
    return {t, f};
}

// A point within tol of the unique predicate boundary in [lo, hi].
template <class Pred>
BigRational bisect_boundary(Pred&& pred, const BigRational& lo, const BigRational& hi,
                            const BigRational& tol) {
    BisectBracket b = bisect_bracket(std::forward<Pred>(pred), lo, hi, tol);
    return (b.true_end + b.false_end) / 2;
}

}  // namespace shiftkit
