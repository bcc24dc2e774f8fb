#include "shiftkit/perturb.hpp"

#include <catch2/catch_amalgamated.hpp>

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

WeightSequence six_one() {
    return WeightSequence({BigRational(1, 2), BigRational(2)},
                          RecursiveTail{{BigRational(-2), BigRational(4)}});
}

const BigRational kTol(1, 1000000);
}  // namespace

TEST_CASE("second-weight window of the rational-ramp shift") {
    auto r = omega_interval(bergman(), 2, 1, kTol, 12);
    CHECK(r.upper.width() <= kTol);
    CHECK(r.lower.width() <= kTol);
    CHECK(r.N == 12);

    // upper endpoint is exactly 24/35
    CHECK(r.upper.contains(BigRational(24, 35)));
    CHECK(is_k_hyponormal(bergman().perturb(1, BigRational(24, 35)), 2, 12).kind !=
          KHypoVerdict::Kind::fails);
    CHECK(is_k_hyponormal(bergman().perturb(1, BigRational(24, 35) + kTol), 2, 12).kind ==
          KHypoVerdict::Kind::fails);

    // lower endpoint is the smaller root of 40 x^2 - 63 x + 24
    RationalPolynomial edge{BigRational(24), BigRational(-63), BigRational(40)};
    CHECK(evaluate(edge, r.lower).contains_zero());
    CHECK(r.lower.hi < BigRational(13, 20));  // so it is the smaller root

    // certified members really belong to the window
    for (const auto& x : {r.lower_member, r.upper_member})
        CHECK(is_k_hyponormal(bergman().perturb(1, x), 2, 12).kind !=
              KHypoVerdict::Kind::fails);
}

TEST_CASE("front-weight window reaches down to zero") {
    auto r = omega_interval(bergman(), 2, 0, kTol, 10);
    CHECK(r.lower.exact());
    CHECK(r.lower.lo == 0);
    CHECK(!r.lower_closed);
    CHECK(r.lower_member == kTol);
    CHECK(r.upper_closed);
    CHECK(r.upper.lo >= BigRational(1, 2));
    CHECK(is_k_hyponormal(bergman().perturb(0, r.upper_member), 2, 10).kind !=
          KHypoVerdict::Kind::fails);
}

TEST_CASE("recursively generated family pins its endpoints") {
    auto r2 = omega_interval(six_one(), 2, 1, kTol, 15);
    CHECK(r2.upper_member == 2);  // the unperturbed weight is the top of the window
    CHECK(r2.upper.lo == 2);
    // lower endpoint solves x^2 - 8x + 10 = 0, i.e. 4 - sqrt(6)
    RationalPolynomial edge{BigRational(10), BigRational(-8), BigRational(1)};
    CHECK(evaluate(edge, r2.lower).contains_zero());

    // one order higher the window degenerates to the single point 2
    auto r3 = omega_interval(six_one(), 3, 1, kTol, 15);
    CHECK(r3.lower_member == 2);
    CHECK(r3.upper_member == 2);
    CHECK(r3.upper.hi - r3.lower.lo <= 2 * kTol);
}

TEST_CASE("window search input validation") {
    CHECK_THROWS_AS(omega_interval(bergman(), 2, 1, BigRational(0), 10), error);
    CHECK_THROWS_AS(omega_interval(bergman(), 2, 3, kTol, 3), error);

    WeightSequence bad({BigRational(1, 2), BigRational(7, 10)},
                       RationalInNTail{P({1, 1}), P({2, 1})});
    CHECK_THROWS_AS(omega_interval(bad, 2, 1, kTol, 10), error);
}

TEST_CASE("prepend modulus of a three-weight germ") {
    auto m = modulus_h2(BigRational(1), BigRational(2), BigRational(3), kTol, 15);
    CHECK(m.backstep == BigRational(2, 3));
    CHECK(m.member == BigRational(2, 3));
    CHECK(m.value.contains(BigRational(2, 3)));
    CHECK(m.value.width() <= kTol);

    // a second germ: the modulus starts at the forced backstep and stays >= it
    auto m2 = modulus_h2(BigRational(1), BigRational(3), BigRational(4), kTol, 15);
    CHECK(m2.member >= m2.backstep);
    CHECK(m2.value.hi >= m2.backstep);

    CHECK_THROWS_AS(modulus_h2(BigRational(1), BigRational(3), BigRational(2), kTol, 10), error);
}

TEST_CASE("perturbing one weight of a recursively generated shift") {
    BigRational a(1), b(2), c(3);

    // at the second weight, only the original value survives
    auto keep = theorem32_check(a, b, c, 1, BigRational(2), 12);
    CHECK(keep.subnormal);
    CHECK(keep.two_hyponormal);
    for (const auto& x : {BigRational(199, 100), BigRational(201, 100)}) {
        auto v = theorem32_check(a, b, c, 1, x, 12);
        CHECK(!v.subnormal);
        CHECK(!v.two_hyponormal);
    }

    // at the front weight, anything in (0, a] survives
    for (const auto& x : {BigRational(1, 2), BigRational(1)}) {
        auto v = theorem32_check(a, b, c, 0, x, 12);
        CHECK(v.subnormal);
        CHECK(v.two_hyponormal);
    }
    auto over = theorem32_check(a, b, c, 0, BigRational(11, 10), 12);
    CHECK(!over.subnormal);
    CHECK(!over.two_hyponormal);
}

TEST_CASE("quadratic window strictly contains the 2-hyponormal window") {
    auto g = gap_witness(bergman(), 1, kTol, 12);
    CHECK(g.x > 0);
    CHECK(g.fail_det < 0);
    auto pert = bergman().perturb(1, g.x);
    CHECK(is_k_hyponormal(pert, 2, 12).kind == KHypoVerdict::Kind::fails);
    CHECK(is_positively_quad_hyponormal(pert, 12, /*strict=*/true).holds);
    // the witness sits below the lower edge of the 2-hyponormal window
    auto r = omega_interval(bergman(), 2, 1, kTol, 12);
    CHECK(g.x < r.lower.hi);

    CHECK_THROWS_AS(gap_witness(bergman(), 0, kTol, 10), error);
    WeightSequence flat({}, ConstantTail{BigRational(1)});
    CHECK_THROWS_AS(gap_witness(flat, 1, kTol, 10), error);
}
