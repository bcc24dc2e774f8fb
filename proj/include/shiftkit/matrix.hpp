#pragma once

// Dense exact-rational matrices.  Dimensions stay tiny here (moment matrices
// are at most (k+1) x (k+1)), so plain Gaussian elimination and explicit
// enumeration of principal minors are the right tools.

#include "shiftkit/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace shiftkit {

class Mat {
    size_t n_ = 0, m_ = 0;
    std::vector<BigRational> a_;

  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : n_(rows), m_(cols), a_(rows * cols, BigRational(0)) {}

    size_t rows() const { return n_; }
    size_t cols() const { return m_; }
    BigRational& at(size_t i, size_t j) { return a_[i * m_ + j]; }
    const BigRational& at(size_t i, size_t j) const { return a_[i * m_ + j]; }
};

// Exact determinant by fraction-free-ish Gaussian elimination (pivot search
// only needs any nonzero entry; rationals keep everything exact).
inline BigRational determinant(Mat m) {
    if (m.rows() != m.cols()) throw error("determinant: matrix not square");
    size_t n = m.rows();
    BigRational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) return BigRational(0);
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            BigRational f = m.at(i, col) / m.at(col, col);
            for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// Solve A x = b exactly; A must be square and nonsingular.
inline std::vector<BigRational> solve_linear(Mat a, std::vector<BigRational> b) {
    size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw error("solve_linear: shape mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw error("solve_linear: singular matrix");
        if (piv != col) {
            for (size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            BigRational f = a.at(i, col) / a.at(col, col);
            for (size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<BigRational> x(n, BigRational(0));
    for (size_t i = n; i-- > 0;) {
        BigRational s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
        x[i] = s / a.at(i, i);
    }
    return x;
}

class SymMatrix {
    size_t n_ = 0;
    std::vector<BigRational> a_;  // full row-major storage; set() keeps it symmetric

  public:
    SymMatrix() = default;
    explicit SymMatrix(size_t n) : n_(n), a_(n * n, BigRational(0)) {}

    size_t dim() const { return n_; }
    const BigRational& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
    void set(size_t i, size_t j, const BigRational& v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    Mat dense() const {
        Mat m(n_, n_);
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
        return m;
    }

    SymMatrix principal_submatrix(const std::vector<size_t>& idx) const {
        SymMatrix s(idx.size());
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i; j < idx.size(); ++j) s.set(i, j, at(idx[i], idx[j]));
        return s;
    }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
};

inline BigRational determinant(const SymMatrix& m) { return determinant(m.dense()); }

// The principal minor that certifies a failed PSD test.
struct PsdWitness {
    std::vector<size_t> indices;
    BigRational det;
};

// A symmetric matrix is positive semidefinite iff every principal minor is
// nonnegative.  Leading minors alone do not suffice for singular matrices,
// and the moment matrices probed here are often exactly singular, so all
// 2^n - 1 minors are checked (n <= 5 or so in practice).  Minors are visited
// smallest-first so a failure witness is as small as possible.
inline bool is_psd(const SymMatrix& m, PsdWitness* witness = nullptr) {
    size_t n = m.dim();
    std::vector<std::vector<size_t>> subsets;
    for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& idx : subsets) {
        BigRational d = determinant(m.principal_submatrix(idx));
        if (d < 0) {
            if (witness) *witness = {idx, d};
            return false;
        }
    }
    return true;
}

}  // namespace shiftkit
