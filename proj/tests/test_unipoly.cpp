#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resolvent/unipoly.hpp"

using namespace resolvent;

namespace {

UniPoly<Rational> P(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly<Rational>(std::move(v));
}

UniPoly<Rational> random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> degd(0, maxdeg);
    std::uniform_int_distribution<long> cd(-9, 9);
    const int d = degd(rng);
    std::vector<Rational> v;
    for (int i = 0; i <= d; ++i) v.push_back(make_rational(cd(rng), 1 + std::abs(cd(rng))));
    return UniPoly<Rational>(std::move(v));
}

}  // namespace

TEST_CASE("division basics") {
    // (t^3 - 1) / (t - 1) = t^2 + t + 1 rem 0
    auto [q, r] = poly_divide(P({-1, 0, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1, 1}));
    CHECK(r.is_zero());

    // (t^2 + 1) / (t + 1) = t - 1 rem 2
    auto [q2, r2] = poly_divide(P({1, 0, 1}), P({1, 1}));
    CHECK(q2 == P({-1, 1}));
    CHECK(r2 == P({2}));
}

TEST_CASE("division invariant on random pairs") {
    std::mt19937_64 rng(12345);
    int done = 0;
    while (done < 1000) {
        auto A = random_poly(rng, 7);
        auto B = random_poly(rng, 5);
        if (B.is_zero()) continue;
        auto [q, r] = poly_divide(A, B);
        CHECK(A == B * q + r);
        CHECK(r.degree() < B.degree());
        ++done;
    }
}

TEST_CASE("extended gcd identities") {
    SUBCASE("shared simple root") {
        auto g = extended_gcd(P({-1, 0, 1}), P({1, -2, 1}));
        CHECK(g.gcd == P({-1, 1}));  // t - 1, monic
    }
    SUBCASE("B = 1") {
        auto g = extended_gcd(P({3, 1, 4, 1}), P({1}));
        CHECK(g.gcd == P({1}));
        CHECK(g.gcd * g.p == P({3, 1, 4, 1}));
        CHECK(g.gcd * g.q == P({1}));
    }
    SUBCASE("planted common factor Phi_3") {
        auto phi3 = P({1, 1, 1});
        auto A = phi3 * P({-2, 1});
        auto B = phi3 * P({-5, 1});
        auto g = extended_gcd(A, B);
        CHECK(g.gcd == phi3);
        CHECK(g.gcd * g.p == A);
        CHECK(g.gcd * g.q == B);
    }
}

TEST_CASE("extended gcd invariants on random pairs") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 300) {
        auto A = random_poly(rng, 6);
        auto B = random_poly(rng, 6);
        if (A.is_zero() || B.is_zero()) continue;
        if (B.degree() > A.degree()) std::swap(A, B);
        auto g = extended_gcd(A, B);
        CHECK(g.gcd * g.p == A);
        CHECK(g.gcd * g.q == B);
        // q_n p_{n-1} - p_n q_{n-1} = (-1)^n on the raw window
        auto det = g.q_raw * g.p_prev - g.p_raw * g.q_prev;
        CHECK(det.degree() == 0);
        CHECK(det[0] == Rational(g.steps % 2 == 0 ? 1 : -1));
        // Bezout pair
        auto [s, t] = g.bezout();
        CHECK(s * A + t * B == g.gcd);
        ++done;
    }
}

TEST_CASE("resultant goldens") {
    CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == Rational(0));  // shared root
    CHECK(resultant(P({-1, 0, 1}), P({-2, 1})) == Rational(3));  // (-1)^2 Q(1)Q(-1)
}

TEST_CASE("resultant equals root-product form on random rooted pairs") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> rd(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<Rational> xs, ys;
        UniPoly<Rational> Pp({1}), Qp({1});
        for (int i = 0; i < m; ++i) {
            Rational x = make_rational(rd(rng), 1 + std::abs(rd(rng)));
            xs.push_back(x);
            Pp = Pp * UniPoly<Rational>({-x, Rational(1)});
        }
        for (int j = 0; j < n; ++j) {
            Rational y = make_rational(rd(rng), 1 + std::abs(rd(rng)));
            ys.push_back(y);
            Qp = Qp * UniPoly<Rational>({-y, Rational(1)});
        }
        Rational expect(1);
        for (const auto& x : xs) expect *= Qp.eval(x);
        if ((static_cast<long>(m) * n) % 2 != 0) expect = -expect;
        CHECK(resultant(Pp, Qp) == expect);
        // resultant is zero iff the gcd is nonconstant
        auto g = poly_gcd(Pp, Qp);
        CHECK((resultant(Pp, Qp) == 0) == (g.degree() > 0));
    }
}

TEST_CASE("discriminant goldens") {
    SUBCASE("quadratic t^2 + bt + c") {
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                auto d = discriminant(P({c, b, 1}));
                CHECK(d.delta_sq == Rational(b * b - 4 * c));
            }
    }
    SUBCASE("t^3 + t^2 + t + 1") {
        auto d = discriminant(P({1, 1, 1, 1}));
        CHECK(d.res == Rational(16));
        CHECK(d.delta_sq == Rational(-16));
    }
    SUBCASE("repeated root gives zero") {
        auto d = discriminant(P({1, 2, 1}));  // (t+1)^2
        CHECK(d.delta_sq == Rational(0));
    }
    SUBCASE("non-monic scaling") {
        // P = 2t^2 - 2 has roots +-1, Delta^2 = 4
        auto d = discriminant(P({-2, 0, 2}));
        CHECK(d.delta_sq == Rational(4));
    }
}

TEST_CASE("compose and pow") {
    auto f = P({1, 0, 1});            // t^2 + 1
    auto g = P({0, 0, 1});            // t^2
    CHECK(poly_compose(f, g) == P({1, 0, 0, 0, 1}));
    CHECK(poly_pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
}

TEST_CASE("printing") {
    CHECK(poly_to_string(P({2, -2, 1})) == "t^2-2t+2");
    CHECK(poly_to_string(P({16, 0, 4, 0, 4, 0, 1})) == "t^6+4t^4+4t^2+16");
    CHECK(poly_to_string(UniPoly<Rational>()) == "0");
}
