#include "shiftkit/berger.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace shiftkit;

namespace {
RecursionSpec spec123() {
    // the recursion continuing squared weights 1, 2, 3
    return {{BigRational(-2), BigRational(4)}, {BigRational(1), BigRational(1)}};
}

RecursionSpec two_atom_spec() {
    // (delta_1 + delta_2) / 2
    return {{BigRational(-2), BigRational(3)}, {BigRational(1), BigRational(3, 2)}};
}
}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate_spec({{}, {}}), error);
    CHECK_THROWS_AS(validate_spec({{BigRational(1)}, {BigRational(1), BigRational(2)}}), error);
    CHECK_THROWS_AS(validate_spec({{BigRational(1)}, {BigRational(2)}}), error);
    CHECK_NOTHROW(validate_spec(spec123()));
}

TEST_CASE("forward moments") {
    auto g = spec_moments(spec123(), 6);
    CHECK(g == std::vector<BigRational>{BigRational(1), BigRational(1), BigRational(2),
                                        BigRational(6), BigRational(20), BigRational(68)});
    CHECK(spec_moment(spec123(), 5) == 68);
    CHECK(spec_moment(spec123(), 0) == 1);

    auto h = spec_moments(two_atom_spec(), 4);
    CHECK(h[2] == BigRational(5, 2));
    CHECK(h[3] == BigRational(9, 2));
}

TEST_CASE("phi recovered from leading moments") {
    // moments of (delta_1 + delta_2)/2
    std::vector<BigRational> gam{BigRational(1), BigRational(3, 2), BigRational(5, 2),
                                 BigRational(9, 2)};
    auto phi = phi_from_moments(gam, 2);
    CHECK(phi == std::vector<BigRational>{BigRational(-2), BigRational(3)});

    CHECK(phi_from_moments({BigRational(1), BigRational(3)}, 1) ==
          std::vector<BigRational>{BigRational(3)});

    // point mass: the order-2 Hankel system is singular
    std::vector<BigRational> ones(4, BigRational(1));
    CHECK_THROWS_AS(phi_from_moments(ones, 2), error);
    CHECK_THROWS_AS(phi_from_moments(gam, 3), error);
}

TEST_CASE("recursion coefficients from three weights") {
    auto phi = phi_from_three(BigRational(1), BigRational(2), BigRational(3));
    CHECK(phi == std::vector<BigRational>{BigRational(-2), BigRational(4)});
    auto phi2 = phi_from_three(BigRational(1), BigRational(2), BigRational(4));
    CHECK(phi2 == std::vector<BigRational>{BigRational(-4), BigRational(6)});

    CHECK_THROWS_AS(phi_from_three(BigRational(2), BigRational(2), BigRational(3)), error);
    CHECK_THROWS_AS(phi_from_three(BigRational(0), BigRational(1), BigRational(2)), error);
    CHECK_THROWS_AS(phi_from_three(BigRational(3), BigRational(2), BigRational(1)), error);
}

TEST_CASE("closed forms for the next two weights match the recursion orbit") {
    auto [a3, a4] = alpha34_closed_forms(BigRational(1), BigRational(2), BigRational(3));
    CHECK(a3 == BigRational(10, 3));
    CHECK(a4 == BigRational(17, 5));
    auto [b3, b4] = alpha34_closed_forms(BigRational(1), BigRational(2), BigRational(4));
    CHECK(b3 == 5);
    CHECK(b4 == BigRational(26, 5));

    // cross-check against the generated sequence on a less tidy triple
    BigRational a(1, 2), b(7, 8), c(9, 8);
    WeightSequence seq({a, b}, RecursiveTail{phi_from_three(a, b, c)});
    auto [c3, c4] = alpha34_closed_forms(a, b, c);
    CHECK(seq.weight_sq(2) == c);
    CHECK(seq.weight_sq(3) == c3);
    CHECK(seq.weight_sq(4) == c4);
}

TEST_CASE("reduce_spec strips removable leading zeros") {
    // gamma_n = 2^n satisfies the padded order-2 recursion with phi_0 = 0
    RecursionSpec padded{{BigRational(0), BigRational(2)}, {BigRational(1), BigRational(2)}};
    auto red = reduce_spec(padded);
    REQUIRE(red.has_value());
    CHECK(red->phi == std::vector<BigRational>{BigRational(2)});
    CHECK(red->seed_gammas == std::vector<BigRational>{BigRational(1)});

    // (delta_0 + delta_1)/2 genuinely needs phi_0 = 0: mass at the origin
    RecursionSpec origin{{BigRational(0), BigRational(1)}, {BigRational(1), BigRational(1, 2)}};
    CHECK(!reduce_spec(origin).has_value());
    RecursionSpec zero{{BigRational(0)}, {BigRational(1)}};
    CHECK(!reduce_spec(zero).has_value());

    // nothing to strip
    auto same = reduce_spec(spec123());
    REQUIRE(same.has_value());
    CHECK(same->phi == spec123().phi);
}

TEST_CASE("backward moments") {
    auto ms = spec_inverse_moments(spec123(), 5);
    REQUIRE(ms.has_value());
    CHECK(*ms == std::vector<BigRational>{BigRational(3, 2), BigRational(5, 2), BigRational(17, 4),
                                          BigRational(29, 4), BigRational(99, 8)});

    auto two = spec_inverse_moments(two_atom_spec(), 2);
    REQUIRE(two.has_value());
    CHECK((*two)[0] == BigRational(3, 4));
    CHECK((*two)[1] == BigRational(5, 8));

    // mass at the origin: every inverse moment diverges
    RecursionSpec origin{{BigRational(0), BigRational(1)}, {BigRational(1), BigRational(1, 2)}};
    CHECK(!spec_inverse_moments(origin, 1).has_value());
}

TEST_CASE("atomic measure with rational atoms is exact") {
    auto mu = berger_measure(two_atom_spec());
    REQUIRE(mu.atoms.size() == 2);
    CHECK(mu.atoms[0].exact());
    CHECK(mu.atoms[0].lo == 1);
    CHECK(mu.atoms[1].lo == 2);
    CHECK(mu.densities[0].exact());
    CHECK(mu.densities[0].lo == BigRational(1, 2));
    CHECK(mu.densities[1].lo == BigRational(1, 2));
    CHECK(mu.valid);
    CHECK(!mu.atom_at_origin);
    CHECK(!mu.negative_atom);
}

TEST_CASE("a density may vanish exactly") {
    // seeds of delta_1 under the (t-1)(t-2) recursion: the atom at 2 is empty
    RecursionSpec spec{{BigRational(-2), BigRational(3)}, {BigRational(1), BigRational(1)}};
    auto mu = berger_measure(spec);
    CHECK(mu.densities[0].lo == 1);
    CHECK(mu.densities[1].lo == 0);
    CHECK(mu.valid);
}

TEST_CASE("irrational atoms come back as certified enclosures") {
    auto mu = berger_measure(spec123());
    REQUIRE(mu.atoms.size() == 2);
    RationalPolynomial g = recursion_polynomial(spec123().phi);  // t^2 - 4t + 2

    // atoms are 2 -+ sqrt(2), ascending
    CHECK(evaluate(g, mu.atoms[0]).contains_zero());
    CHECK(evaluate(g, mu.atoms[1]).contains_zero());
    CHECK(mu.atoms[0].lo > BigRational(58, 100));
    CHECK(mu.atoms[0].hi < BigRational(59, 100));
    CHECK(mu.atoms[1].lo > BigRational(341, 100));
    CHECK(mu.atoms[1].hi < BigRational(342, 100));
    CHECK(mu.atoms[0].width() <= make_rational(1, pow10(50)));

    // the smaller atom carries density (2 + sqrt(2))/4, the larger (2 - sqrt(2))/4
    CHECK(mu.densities[0].lo > BigRational(85, 100));
    CHECK(mu.densities[0].hi < BigRational(86, 100));
    CHECK(mu.densities[1].lo > BigRational(14, 100));
    CHECK(mu.densities[1].hi < BigRational(15, 100));
    CHECK((mu.densities[0] + mu.densities[1]).contains(BigRational(1)));
    // first moment reproduced: rho_1 s_1 + rho_2 s_2 = gamma_1 = 1
    Enclosure m1 = mu.densities[0] * mu.atoms[0] + mu.densities[1] * mu.atoms[1];
    CHECK(m1.contains(BigRational(1)));
    CHECK(mu.valid);
}

TEST_CASE("measure recovery rejects defective recursions") {
    // (t - 1)^2: repeated root
    CHECK_THROWS_AS(berger_measure({{BigRational(-1), BigRational(2)},
                                    {BigRational(1), BigRational(1)}}),
                    error);
    // t^2 - t + 1: no real roots
    CHECK_THROWS_AS(berger_measure({{BigRational(-1), BigRational(1)},
                                    {BigRational(1), BigRational(1)}}),
                    error);
}

TEST_CASE("subnormality at the spec level") {
    CHECK(is_subnormal_recursive(spec123()));
    CHECK(is_subnormal_recursive(two_atom_spec()));

    // seeds (1, 4) put negative mass on the smaller atom
    CHECK(!is_subnormal_recursive({{BigRational(-2), BigRational(4)},
                                   {BigRational(1), BigRational(4)}}));
    // (t - 2)(t + 1) has a negative atom
    CHECK(!is_subnormal_recursive({{BigRational(2), BigRational(1)},
                                   {BigRational(1), BigRational(1)}}));
}

TEST_CASE("sequence generated by a spec") {
    auto seq = sequence_from_spec(spec123());
    CHECK(seq.weight_sq(0) == 1);
    CHECK(seq.weight_sq(1) == 2);
    CHECK(seq.weight_sq(2) == 3);
    CHECK(seq.weight_sq(3) == BigRational(10, 3));
    CHECK(seq.gamma(3) == 6);

    CHECK_THROWS_AS(sequence_from_spec({{BigRational(-2), BigRational(4)},
                                        {BigRational(1), BigRational(-1)}}),
                    error);
}
