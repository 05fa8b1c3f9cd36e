#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resolvent/tower.hpp"

using namespace resolvent;

TEST_CASE("sqrt 2") {
    auto t = tower_root(2, tower_rational(Rational(2)), 0);
    Ball v = tower_eval(t, 128);
    CHECK(v.mid_re_d() == doctest::Approx(1.41421356237).epsilon(1e-10));
    CHECK(v.rad_below_2exp(-64));
    // the exact value is irrational; square the ball and compare against 2
    Ball sq = v * v - Ball::from_long(2, 128);
    CHECK(sq.may_contain_zero());
}

TEST_CASE("branch enumeration of root(2, 4, .)") {
    auto t = tower_root(2, tower_rational(Rational(4)), 0);
    auto vals = tower_enumerate(t, 128);
    REQUIRE(vals.size() == 2);
    bool saw_pos = false, saw_neg = false;
    for (const auto& v : vals) {
        if (v.contains_point(Rational(2), Rational(0))) saw_pos = true;
        if (v.contains_point(Rational(-2), Rational(0))) saw_neg = true;
    }
    CHECK(saw_pos);
    CHECK(saw_neg);
}

TEST_CASE("prime-index roots of a nonzero value are p distinct values") {
    for (long p : {2, 3, 5}) {
        auto t = tower_root(p, tower_rational(make_rational(7, 3)), 1);
        auto vals = tower_enumerate(t, 128);
        CHECK(vals.size() == static_cast<std::size_t>(p));
    }
}

TEST_CASE("shared nodes bind branches jointly") {
    auto u = tower_root(2, tower_rational(Rational(4)), 0);
    // u - u: one root node, always 0
    auto shared = tower_sum({u, tower_negate(u)});
    auto vals = tower_enumerate(shared, 128);
    REQUIRE(vals.size() == 1);
    CHECK(vals[0].contains_point(Rational(0), Rational(0)));

    // independent copies: u1 - u2 takes values {0, 4, -4}
    auto u2 = tower_root(2, tower_rational(Rational(4)), 0);
    auto indep = tower_sum({u, tower_negate(u2)});
    CHECK(tower_enumerate(indep, 128).size() == 3);
}

TEST_CASE("nested roots and quotients") {
    // root(2, root(2, 16)) = 2
    auto t = tower_root(2, tower_root(2, tower_rational(Rational(16)), 0), 0);
    CHECK(tower_eval(t, 128).contains_point(Rational(2), Rational(0)));

    // (1 + root(2, 9, 0)) / 2 = 2
    auto q = tower_quotient(tower_sum({tower_rational(Rational(1)), tower_root(2, tower_rational(Rational(9)), 0)}),
                            tower_rational(Rational(2)));
    CHECK(tower_eval(q, 128).contains_point(Rational(2), Rational(0)));

    // division by an exact zero is indeterminate
    auto bad = tower_quotient(tower_rational(Rational(1)), tower_rational(Rational(0)));
    CHECK_THROWS_AS(tower_eval(bad, 128), indeterminate_error);
}

TEST_CASE("cyclotomic constants in towers") {
    // (-1 + root(2, -3, 0)) / 2 is the principal primitive cube root of unity
    auto t = tower_quotient(
        tower_sum({tower_rational(Rational(-1)), tower_root(2, tower_rational(Rational(-3)), 0)}),
        tower_rational(Rational(2)));
    Ball v = tower_eval(t, 128);
    Ball target = cyc_to_ball(CycElem::zeta(3), 128);
    CHECK((v - target).may_contain_zero());
    CHECK(!disjoint(v, target));

    // omega as an embedded constant multiplies exactly
    auto w = tower_product({tower_cyc(CycElem::zeta(3)), tower_cyc(CycElem::zeta(3, 2))});
    CHECK(tower_eval(w, 128).contains_point(Rational(1), Rational(0)));
}

TEST_CASE("eval refines to the requested radius") {
    auto t = tower_root(3, tower_rational(make_rational(2, 1)), 0);
    Ball v = tower_eval(t, 256);
    CHECK(v.rad_below_2exp(-128));
}
