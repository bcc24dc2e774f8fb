#pragma once

// k-hyponormality of a weighted shift via its moment matrices: the shift is
// k-hyponormal iff every (k+1)x(k+1) Hankel matrix (gamma_{n+i+j})_{i,j}
// is positive semidefinite.

#include "shiftkit/extension.hpp"
#include "shiftkit/matrix.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace shiftkit {

struct HankelMatrix {
    size_t n = 0;  // base index
    size_t k = 0;  // order
    SymMatrix entries;
};

inline HankelMatrix hankel(const WeightSequence& seq, size_t n, size_t k) {
    if (k < 1) throw error("hankel: order k must be >= 1");
    HankelMatrix h{n, k, SymMatrix(k + 1)};
    for (size_t i = 0; i <= k; ++i)
        for (size_t j = i; j <= k; ++j) h.entries.set(i, j, seq.gamma(n + i + j));
    return h;
}

// Exact determinant of the 3x3 moment matrix at base index n, the binding
// quantity for 2-hyponormality of strictly increasing sequences.
inline BigRational det_2hypo(const WeightSequence& seq, size_t n) {
    return determinant(hankel(seq, n, 2).entries);
}

struct KHypoVerdict {
    enum class Kind { holds_up_to, holds_for_all, fails };
    Kind kind = Kind::holds_up_to;
    size_t k = 0;
    size_t N = 0;             // horizon probed
    size_t n = 0;             // least violating base index when kind == fails
    BigRational witness_det;  // determinant of the violating principal minor
};

// Decide k-hyponormality for base indices n <= N.  For strictly increasing
// weights and k = 2 the 1x1 and 2x2 principal minors are automatically
// positive, so positive semidefiniteness reduces to the 3x3 determinant
// sign; otherwise every principal minor is checked.  A verdict that survives
// the horizon upgrades to holds_for_all when the sequence carries a
// certified representing measure (subnormal => k-hyponormal for every k).
inline KHypoVerdict is_k_hyponormal(const WeightSequence& seq, size_t k, size_t N) {
    if (k < 1) throw error("is_k_hyponormal: k must be >= 1");
    KHypoVerdict v;
    v.k = k;
    v.N = N;
    bool fast = k == 2 && seq.strictly_increasing_up_to(N + 3);
    for (size_t n = 0; n <= N; ++n) {
        if (fast) {
            BigRational d = det_2hypo(seq, n);
            if (d < 0) {
                v.kind = KHypoVerdict::Kind::fails;
                v.n = n;
                v.witness_det = d;
                return v;
            }
        } else {
            PsdWitness w;
            if (!is_psd(hankel(seq, n, k).entries, &w)) {
                v.kind = KHypoVerdict::Kind::fails;
                v.n = n;
                v.witness_det = w.det;
                return v;
            }
        }
    }
    v.kind = is_subnormal(seq).verdict == Tri::yes ? KHypoVerdict::Kind::holds_for_all
                                                   : KHypoVerdict::Kind::holds_up_to;
    return v;
}

// ---------------------------------------------------------------------------
// scale interpolation on a symmetric index set

using IndexSet = std::vector<std::pair<size_t, size_t>>;

// Given PSD matrices A and C where C = c*A on the symmetric index set J and
// C = A off J, the matrix B with scale b on J is PSD for every b between 1
// and c inclusive: B = ((c-b) A + (b-1) C) / (c-1) is a nonnegative
// combination.  Returns B; membership of b is validated, and C is checked
// against the stated form entry by entry.
inline SymMatrix lemma64_interpolate(const SymMatrix& A, const SymMatrix& C, const IndexSet& J,
                                     const BigRational& c, const BigRational& b) {
    if (c <= 0) throw error("lemma64_interpolate: scale c must be positive");
    size_t n = A.dim();
    if (C.dim() != n) throw error("lemma64_interpolate: dimension mismatch");
    std::vector<char> on(n * n, 0);
    for (const auto& [i, j] : J) {
        if (i >= n || j >= n) throw error("lemma64_interpolate: index out of range");
        on[i * n + j] = on[j * n + i] = 1;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            BigRational want = on[i * n + j] ? c * A.at(i, j) : A.at(i, j);
            if (C.at(i, j) != want)
                throw error("lemma64_interpolate: C does not have the stated form");
        }
    if (c == 1) {
        if (b != 1) throw error("degenerate scale");
        return A;
    }
    if (!((1 <= b && b <= c) || (c <= b && b <= 1)))
        throw error("lemma64_interpolate: b must lie between 1 and c");
    SymMatrix B(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            B.set(i, j, ((c - b) * A.at(i, j) + (b - 1) * C.at(i, j)) / (c - 1));
    return B;
}

}  // namespace shiftkit
