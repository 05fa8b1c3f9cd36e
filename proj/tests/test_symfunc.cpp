#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "resolvent/multipoly.hpp"

using namespace resolvent;

namespace {

using QPoly = MultiPoly<Rational>;

QPoly var(int n, int i) { return QPoly::variable(n, i, Rational(1)); }

// brute-force count of h x k 0,1-matrices with row sums mu and column sums
// lambda (the Prop 1.1 oracle)
long count_01_matrices(const Partition& mu, const Partition& lambda) {
    const std::size_t h = mu.size(), k = lambda.size();
    std::vector<long> colsum(k, 0);
    long count = 0;
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == h) {
            for (std::size_t j = 0; j < k; ++j)
                if (colsum[j] != lambda[j]) return;
            ++count;
            return;
        }
        // choose a subset of columns of size mu[row]
        std::vector<int> pick;
        auto choose = [&](auto&& go, std::size_t start, long need) -> void {
            if (need == 0) {
                for (int j : pick) ++colsum[static_cast<std::size_t>(j)];
                bool feasible = true;
                for (std::size_t j = 0; j < k; ++j)
                    if (colsum[j] > lambda[j]) feasible = false;
                if (feasible) self(self, row + 1);
                for (int j : pick) --colsum[static_cast<std::size_t>(j)];
                return;
            }
            for (std::size_t j = start; j + static_cast<std::size_t>(need) <= k + 1 && j < k; ++j) {
                pick.push_back(static_cast<int>(j));
                go(go, j + 1, need - 1);
                pick.pop_back();
            }
        };
        choose(choose, 0, mu[row]);
    };
    rec(rec, 0);
    return count;
}

QPoly random_symmetric(std::mt19937_64& rng, int nvars, int maxdeg) {
    std::uniform_int_distribution<long> cd(-4, 4);
    QPoly f(nvars);
    auto parts_all = partitions(1 + static_cast<long>(rng() % maxdeg));
    for (const auto& lambda : parts_all) {
        if (static_cast<int>(lambda.size()) > nvars) continue;
        long c = cd(rng);
        if (c == 0) continue;
        f = f + Rational(c) * monomial_sym<Rational>(lambda, nvars, Rational(1));
    }
    return f;
}

}  // namespace

TEST_CASE("partitions enumeration") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(0)[0].empty());
    CHECK(partitions(6).size() == 11);
    // lexicographic order
    auto p4 = partitions(4);
    CHECK(p4.front() == Partition{1, 1, 1, 1});
    CHECK(p4.back() == Partition{4});
    for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] < p4[i + 1]);
}

TEST_CASE("conjugate and dominance") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(conjugate({4, 2, 1})) == Partition{4, 2, 1});
    CHECK(dominates({2, 2}, {2, 1, 1}));
    CHECK(!dominates({2, 1, 1}, {2, 2}));
    CHECK_THROWS_AS(dominates({2}, {1}), argument_error);
    // anti-isomorphism under conjugation for all partitions of n <= 8
    for (long n = 1; n <= 8; ++n) {
        auto ps = partitions(n);
        for (const auto& a : ps)
            for (const auto& b : ps) CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
    }
}

TEST_CASE("elementary and monomial symmetric polynomials") {
    // e_2(x1,x2,x3) = x1x2 + x1x3 + x2x3
    auto e2 = elementary_sym<Rational>(2, 3, Rational(1));
    auto expect = var(3, 0) * var(3, 1) + var(3, 0) * var(3, 2) + var(3, 1) * var(3, 2);
    CHECK(e2 == expect);
    // m_(2)(x1,x2) = x1^2 + x2^2
    auto m2 = monomial_sym<Rational>({2}, 2, Rational(1));
    CHECK(m2 == var(2, 0) * var(2, 0) + var(2, 1) * var(2, 1));
    // m_(1,1) = e_2
    CHECK(monomial_sym<Rational>({1, 1}, 3, Rational(1)) == e2);
    // e_0 = 1
    CHECK(elementary_sym<Rational>(0, 3, Rational(1)) == QPoly::constant(3, Rational(1)));
    CHECK_THROWS_AS(monomial_sym<Rational>({1, 1, 1}, 2, Rational(1)), argument_error);
}

TEST_CASE("e-product expansion vs 0,1-matrix counts") {
    SUBCASE("spot checks") {
        auto c11 = e_product_expand({1, 1}, 2);
        CHECK(c11[Partition{2}] == 1);
        CHECK(c11[Partition{1, 1}] == 2);
        auto c2 = e_product_expand({2}, 2);
        CHECK(c2.size() == 1);
        CHECK(c2[Partition{1, 1}] == 1);
    }
    SUBCASE("oracle equality for all mu of weight <= 6") {
        for (long n = 1; n <= 6; ++n) {
            for (const auto& mu : partitions(n)) {
                auto expansion = e_product_expand(mu, static_cast<int>(n));
                for (const auto& lambda : partitions(n)) {
                    long got = expansion.count(lambda) ? expansion.at(lambda) : 0;
                    CHECK(got == count_01_matrices(mu, lambda));
                }
                // diagonal: lambda = mu' has coefficient exactly 1
                CHECK(expansion.at(conjugate(mu)) == 1);
            }
        }
    }
    SUBCASE("unitriangularity") {
        // c_{lambda mu} = 0 unless mu' dominates lambda
        for (long n = 1; n <= 6; ++n)
            for (const auto& mu : partitions(n)) {
                auto expansion = e_product_expand(mu, static_cast<int>(n));
                for (const auto& [lambda, c] : expansion) {
                    if (c != 0) CHECK(dominates(conjugate(mu), lambda));
                }
            }
    }
}

TEST_CASE("apply_perm") {
    // f = x1, sigma = (1,2) -> x2
    auto f = var(2, 0);
    CHECK(apply_perm(f, Perm::from_cycles("(1,2)", 2)) == var(2, 1));
    // e_2 invariant under every sigma
    auto e2 = elementary_sym<Rational>(2, 3, Rational(1));
    const auto s3 = PermGroup::symmetric(3);
    for (const auto& s : s3.elements()) CHECK(apply_perm(e2, s) == e2);
    // left action composition
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        const auto s4g = PermGroup::symmetric(4);
        const auto& elems = s4g.elements();
        const Perm& s = elems[rng() % elems.size()];
        const Perm& t = elems[rng() % elems.size()];
        auto f4 = random_symmetric(rng, 4, 3) + var(4, 0) * var(4, 1);
        CHECK(apply_perm(apply_perm(f4, t), s) == apply_perm(f4, s * t));
    }
}

TEST_CASE("apply_perm over cyclotomic coefficients") {
    // f = x1 + w x2 + w^2 x3 with w = zeta_3; cyclic shift multiplies by w^2
    using CPoly = MultiPoly<CycElem>;
    const CycElem one = CycElem::from_rational(1, 3);
    const CycElem w = CycElem::zeta(3);
    CPoly f(3);
    f.add_term({1, 0, 0}, one);
    f.add_term({0, 1, 0}, w);
    f.add_term({0, 0, 1}, w * w);
    auto g = apply_perm(f, Perm::from_cycles("(1,2,3)", 3));
    CHECK(g == w * w * f);
}

TEST_CASE("decompose_in_elementary") {
    SUBCASE("power sum p2 = e1^2 - 2 e2") {
        auto f = monomial_sym<Rational>({2}, 2, Rational(1));
        auto g = decompose_in_elementary(f, Rational(1));
        QPoly expect(2);
        expect.add_term({2, 0}, Rational(1));
        expect.add_term({0, 1}, Rational(-2));
        CHECK(g == expect);
        CHECK(expand_elementary_form(g, 2, Rational(1)) == f);
    }
    SUBCASE("e_3 is a fixed point") {
        auto e3 = elementary_sym<Rational>(3, 4, Rational(1));
        auto g = decompose_in_elementary(e3, Rational(1));
        QPoly expect(4);
        expect.add_term({0, 0, 1, 0}, Rational(1));
        CHECK(g == expect);
    }
    SUBCASE("(x1-x2)^2 = e1^2 - 4 e2") {
        auto d = var(2, 0) - var(2, 1);
        auto g = decompose_in_elementary(d * d, Rational(1));
        QPoly expect(2);
        expect.add_term({2, 0}, Rational(1));
        expect.add_term({0, 1}, Rational(-4));
        CHECK(g == expect);
    }
    SUBCASE("non-symmetric input is rejected with a witness") {
        CHECK_THROWS_AS(decompose_in_elementary(var(3, 0), Rational(1)), argument_error);
    }
    SUBCASE("round trip on random symmetric polynomials") {
        std::mt19937_64 rng(11);
        for (int iter = 0; iter < 40; ++iter) {
            const int n = 2 + static_cast<int>(rng() % 3);
            auto f = random_symmetric(rng, n, 6);
            auto g = decompose_in_elementary(f, Rational(1));
            CHECK(expand_elementary_form(g, n, Rational(1)) == f);
        }
    }
}

TEST_CASE("eval_multi") {
    // e_1 at the roots of t^3 + t^2 + t + 1 (namely -1, i, -i) is -1
    auto e1 = elementary_sym<Rational>(1, 3, Rational(1));
    std::vector<CycElem> roots{CycElem::from_rational(-1, 4), CycElem::zeta(4), CycElem::zeta(4, 3)};
    auto val = e1.eval<CycElem>(roots, [](const Rational& c) { return CycElem::from_rational(c, 4); });
    CHECK(val == CycElem::from_rational(-1, 4));

    // v = x2 - x1 at (-1, i, -i) equals i + 1, a root of t^2 - 2t + 2
    QPoly v = var(3, 1) - var(3, 0);
    auto vv = v.eval<CycElem>(roots, [](const Rational& c) { return CycElem::from_rational(c, 4); });
    CHECK(vv == CycElem::zeta(4) + CycElem::from_rational(1, 4));
    auto sq = vv * vv - CycElem::from_rational(2, 4) * vv + CycElem::from_rational(2, 4);
    CHECK(sq.is_zero());

    // any f at all-zero values gives the constant term
    auto f = random_symmetric(*(new std::mt19937_64(1)), 3, 4) + QPoly::constant(3, Rational(7));
    std::vector<CycElem> zeros(3, CycElem::from_rational(0, 1));
    auto c0 = f.eval<CycElem>(zeros, [](const Rational& c) { return CycElem::from_rational(c, 1); });
    bool has_const = f.terms().count({0, 0, 0}) > 0;
    CHECK(c0 == (has_const ? CycElem::from_rational(f.terms().at({0, 0, 0}), 1) : CycElem::from_rational(0, 1)));
}

TEST_CASE("symbolic stabilizer basics") {
    // e_2 has stabilizer S_n
    auto e2 = elementary_sym<Rational>(2, 4, Rational(1));
    CHECK(symbolic_stabilizer(e2).order() == 24);
    // w2*w3 has stabilizer {id, (1,2), (3,4), (1,2)(3,4)}
    auto w2 = var(4, 0) + var(4, 2) - var(4, 1) - var(4, 3);
    auto w3 = var(4, 0) + var(4, 3) - var(4, 1) - var(4, 2);
    auto st = symbolic_stabilizer(w2 * w3);
    CHECK(st.order() == 4);
    CHECK(st.contains(Perm::from_cycles("(1,2)", 4)));
    CHECK(st.contains(Perm::from_cycles("(3,4)", 4)));
    CHECK(st.contains(Perm::from_cycles("(1,2)(3,4)", 4)));
}
