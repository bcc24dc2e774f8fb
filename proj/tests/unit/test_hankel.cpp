#include "shiftkit/hankel.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace shiftkit;

namespace {
RationalPolynomial P(std::initializer_list<long> coeffs) {
    std::vector<BigRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return RationalPolynomial(std::move(v));
}

WeightSequence bergman() {
    return WeightSequence({}, RationalInNTail{P({1, 1}), P({2, 1})});
}

// front weight 1/2, second weight x, then the (n+1)/(n+2) ramp
WeightSequence ex31(const BigRational& x) {
    return WeightSequence({BigRational(1, 2), x}, RationalInNTail{P({1, 1}), P({2, 1})});
}

WeightSequence three_step() {
    return WeightSequence({BigRational(1), BigRational(2)},
                          RecursiveTail{{BigRational(-2), BigRational(4)}});
}
}  // namespace

TEST_CASE("moment matrix entries") {
    auto h = hankel(ex31(BigRational(7, 10)), 0, 2);
    CHECK(h.entries.at(0, 0) == 1);
    CHECK(h.entries.at(0, 1) == BigRational(1, 2));
    CHECK(h.entries.at(0, 2) == BigRational(7, 20));
    CHECK(h.entries.at(1, 2) == BigRational(21, 80));
    CHECK(h.entries.at(2, 2) == BigRational(21, 100));
    CHECK(h.entries.at(2, 1) == h.entries.at(1, 2));

    auto h1 = hankel(bergman(), 3, 1);
    CHECK(h1.entries.at(0, 0) == BigRational(1, 4));
    CHECK(h1.entries.at(1, 1) == BigRational(1, 6));

    CHECK_THROWS_AS(hankel(bergman(), 0, 0), error);
}

TEST_CASE("3x3 determinant oracle values") {
    // at x = 2/3 the front matrix is the 3x3 Hilbert matrix
    CHECK(det_2hypo(ex31(BigRational(2, 3)), 0) == BigRational(1, 2160));
    // at x = 24/35 the matrix at base index 1 is singular
    CHECK(det_2hypo(ex31(BigRational(24, 35)), 1) == 0);
    // just past it the determinant goes negative
    CHECK(det_2hypo(ex31(BigRational(7, 10)), 1) == BigRational(-49, 2560000));
}

TEST_CASE("k-hyponormality verdicts") {
    CHECK_THROWS_AS(is_k_hyponormal(bergman(), 0, 5), error);

    // a certified measure upgrades the verdict past the horizon
    auto v = is_k_hyponormal(bergman(), 2, 10);
    CHECK(v.kind == KHypoVerdict::Kind::holds_for_all);
    CHECK(is_k_hyponormal(three_step(), 4, 15).kind == KHypoVerdict::Kind::holds_for_all);

    // inside the 2-hyponormal window but not subnormal: no upgrade
    auto w = is_k_hyponormal(ex31(BigRational(33, 50)), 2, 10);
    CHECK(w.kind == KHypoVerdict::Kind::holds_up_to);
    CHECK(w.N == 10);

    auto f = is_k_hyponormal(ex31(BigRational(7, 10)), 2, 10);
    REQUIRE(f.kind == KHypoVerdict::Kind::fails);
    CHECK(f.n == 1);
    CHECK(f.witness_det == BigRational(-49, 2560000));

    // boundary membership: the singular matrix still counts as PSD
    CHECK(is_k_hyponormal(ex31(BigRational(24, 35)), 2, 10).kind !=
          KHypoVerdict::Kind::fails);
}

TEST_CASE("fast path and minor enumeration agree off the strict-increase hypothesis") {
    // flat sequences skip the 3x3 shortcut; verdicts must still be right
    WeightSequence flat({}, ConstantTail{BigRational(1)});
    CHECK(is_k_hyponormal(flat, 2, 8).kind == KHypoVerdict::Kind::holds_for_all);

    WeightSequence drop({BigRational(1), BigRational(1, 2)}, ConstantTail{BigRational(1, 2)});
    auto v = is_k_hyponormal(drop, 2, 8);
    REQUIRE(v.kind == KHypoVerdict::Kind::fails);
    CHECK(v.n == 0);
    CHECK(v.witness_det < 0);
}

TEST_CASE("k-hyponormality is monotone in k") {
    for (size_t k = 1; k <= 3; ++k)
        CHECK(is_k_hyponormal(three_step(), k, 12).kind != KHypoVerdict::Kind::fails);

    // increasing weights give 1-hyponormality even when 2-hyponormality fails
    auto bad = ex31(BigRational(7, 10));
    CHECK(is_k_hyponormal(bad, 1, 12).kind != KHypoVerdict::Kind::fails);
    CHECK(is_k_hyponormal(bad, 2, 12).kind == KHypoVerdict::Kind::fails);
    CHECK(is_k_hyponormal(bad, 3, 12).kind == KHypoVerdict::Kind::fails);
}

TEST_CASE("scale interpolation between matched PSD matrices") {
    SymMatrix A = hankel(bergman(), 0, 2).entries;
    REQUIRE(is_psd(A));
    BigRational c(3);
    IndexSet J{{0, 0}};
    SymMatrix C = A;
    C.set(0, 0, c * A.at(0, 0));
    REQUIRE(is_psd(C));

    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> num(0, 1000);
    for (int trial = 0; trial < 25; ++trial) {
        BigRational b = 1 + BigRational(num(rng), 500);  // in [1, 3]
        SymMatrix B = lemma64_interpolate(A, C, J, c, b);
        CHECK(B.at(0, 0) == b * A.at(0, 0));
        CHECK(B.at(1, 1) == A.at(1, 1));
        CHECK(is_psd(B));
    }

    // scaling the whole index set is plain scalar multiplication
    IndexSet all;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j) all.emplace_back(i, j);
    SymMatrix C2(3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j) C2.set(i, j, c * A.at(i, j));
    SymMatrix B2 = lemma64_interpolate(A, C2, all, c, BigRational(2));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(B2.at(i, j) == 2 * A.at(i, j));
}

TEST_CASE("scale interpolation input validation") {
    SymMatrix A = hankel(bergman(), 0, 1).entries;
    SymMatrix C = A;
    C.set(1, 1, 2 * A.at(1, 1));
    IndexSet J{{1, 1}};

    CHECK_NOTHROW(lemma64_interpolate(A, C, J, BigRational(2), BigRational(3, 2)));
    CHECK_THROWS_AS(lemma64_interpolate(A, C, J, BigRational(2), BigRational(5, 2)), error);
    CHECK_THROWS_AS(lemma64_interpolate(A, C, J, BigRational(0), BigRational(1)), error);
    CHECK_THROWS_AS(lemma64_interpolate(A, C, J, BigRational(3), BigRational(2)), error);
    CHECK_THROWS_AS(lemma64_interpolate(A, C, {{0, 3}}, BigRational(2), BigRational(2)), error);
    CHECK_THROWS_AS(lemma64_interpolate(A, hankel(bergman(), 0, 2).entries, J, BigRational(2),
                                        BigRational(2)),
                    error);
    // c = 1 collapses the segment to a single matrix
    CHECK_THROWS_AS(lemma64_interpolate(A, A, J, BigRational(1), BigRational(2)), error);
    SymMatrix same = lemma64_interpolate(A, A, J, BigRational(1), BigRational(1));
    CHECK(same == A);

    // b may interpolate downward when c < 1
    SymMatrix Cs = A;
    Cs.set(1, 1, A.at(1, 1) / 2);
    CHECK_NOTHROW(lemma64_interpolate(A, Cs, J, BigRational(1, 2), BigRational(3, 4)));
}
