#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resolvent/multipoly.hpp"
#include "resolvent/perm.hpp"

using namespace resolvent;

TEST_CASE("cycle notation round trip") {
    CHECK(Perm::identity(4).cycle_string() == "id");
    CHECK(Perm::from_cycles("(1,2)(3,4)", 4).cycle_string() == "(1,2)(3,4)");
    CHECK(Perm::from_cycles("(1,2,3)", 3).cycle_string() == "(1,2,3)");
    CHECK(Perm::from_cycles("id", 5) == Perm::identity(5));
    CHECK_THROWS_AS(Perm::from_cycles("(1,9)", 4), parse_error);
}

TEST_CASE("composition convention (st)_i = s_{t_i}") {
    auto s = Perm::from_cycles("(1,2)", 3);
    auto t = Perm::from_cycles("(2,3)", 3);
    auto st = s * t;
    // t sends 2->3, s sends 3->3; images: st(1) = s(t(1)) = s(1) = 2
    CHECK(st(0) == 1);
    CHECK(st(1) == 2);
    CHECK(st(2) == 0);
    CHECK((st * st.inverse()).is_identity());
}

TEST_CASE("closure") {
    auto s4 = PermGroup::closure({Perm::from_cycles("(1,2)", 4), Perm::from_cycles("(1,2,3,4)", 4)});
    CHECK(s4.order() == 24);
    auto c3 = PermGroup::closure({Perm::from_cycles("(1,2,3)", 3)});
    CHECK(c3.order() == 3);
    auto v4 = PermGroup::closure({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
    CHECK(v4.order() == 4);
    CHECK(v4.contains(Perm::from_cycles("(1,4)(2,3)", 4)));
    // closure is idempotent
    CHECK(PermGroup::closure(v4.elements()) == v4);
    // guard
    CHECK_THROWS_AS(PermGroup::closure({Perm::from_cycles("(1,2)", 8), Perm::from_cycles("(1,2,3,4,5,6,7,8)", 8)},
                                       10000),
                    unsupported_error);
}

TEST_CASE("left cosets") {
    auto s3 = PermGroup::symmetric(3);
    auto a3 = PermGroup::alternating(3);
    auto reps = left_cosets(s3, a3);
    CHECK(reps.size() == 2);
    CHECK(reps[0].is_identity());

    auto s4 = PermGroup::symmetric(4);
    auto v4 = PermGroup::closure({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
    CHECK(left_cosets(s4, v4).size() == 6);

    // C12 = <g>, H = <g^3>: transversal {id, g, g^2}
    auto g = Perm::from_cycles("(1,2,3,4,5,6,7,8,9,10,11,12)", 12);
    auto c12 = PermGroup::cyclic_from(g);
    auto h = PermGroup::cyclic_from(g * g * g);
    auto t = left_cosets(c12, h);
    REQUIRE(t.size() == 3);
    CHECK(t[0].is_identity());
    CHECK(t[1] == g);
    CHECK(t[2] == g * g);

    CHECK_THROWS_AS(left_cosets(a3, s3), argument_error);
}

TEST_CASE("Lagrange invariant") {
    auto s4 = PermGroup::symmetric(4);
    for (auto gens : std::vector<std::vector<std::string>>{
             {"(1,2)"}, {"(1,2,3)"}, {"(1,2)(3,4)", "(1,3)(2,4)"}, {"(1,2,3,4)"}, {"(1,2)", "(3,4)"}}) {
        std::vector<Perm> gs;
        for (const auto& s : gens) gs.push_back(Perm::from_cycles(s, 4));
        auto h = PermGroup::closure(gs);
        CHECK(s4.order() % h.order() == 0);
        CHECK(left_cosets(s4, h).size() * h.order() == s4.order());
    }
}

TEST_CASE("normality, derived series, solvability") {
    auto s4 = PermGroup::symmetric(4);
    auto a4 = PermGroup::alternating(4);
    auto v4 = PermGroup::closure({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
    CHECK(is_normal(a4, s4));
    CHECK(is_normal(v4, s4));
    CHECK(!is_normal(PermGroup::cyclic_from(Perm::from_cycles("(1,2)", 4)), s4));

    auto series = derived_series(s4);
    REQUIRE(series.size() == 4);
    CHECK(series[0].order() == 24);
    CHECK(series[1] == a4);
    CHECK(series[2] == v4);
    CHECK(series[3].order() == 1);
    CHECK(is_solvable(s4));
    CHECK(!is_solvable(PermGroup::symmetric(5)));
    CHECK(!is_solvable(PermGroup::alternating(5)));
    // abelian groups are solvable
    CHECK(is_solvable(PermGroup::cyclic_from(Perm::from_cycles("(1,2,3,4,5)", 5))));
}

TEST_CASE("3-cycle classification") {
    CHECK(contains_all_3cycles(PermGroup::alternating(5)) == ThreeCycleClass::AlternatingGroup);
    CHECK(contains_all_3cycles(PermGroup::symmetric(4)) == ThreeCycleClass::SymmetricGroup);
    auto v4 = PermGroup::closure({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
    CHECK(contains_all_3cycles(v4) == ThreeCycleClass::Neither);
}

TEST_CASE("prime cyclic coset witness") {
    // V4 over {id, (1,2)(3,4)}: gamma = (1,3)(2,4)
    auto v4 = PermGroup::closure({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
    auto h = PermGroup::cyclic_from(Perm::from_cycles("(1,2)(3,4)", 4));
    auto w = prime_cyclic_coset_witness(v4, h, 2);
    REQUIRE(w.has_value());
    CHECK(w->cycle_string() == "(1,3)(2,4)");

    // C4 = <c>, H = <c^2>: gamma = c
    auto c = Perm::from_cycles("(1,2,3,4)", 4);
    auto c4 = PermGroup::cyclic_from(c);
    auto h2 = PermGroup::cyclic_from(c * c);
    auto w2 = prime_cyclic_coset_witness(c4, h2, 2);
    REQUIRE(w2.has_value());
    CHECK((*w2 == c || *w2 == c * c * c));

    // S3 over A3: all transpositions qualify; canonical (image-lex) order
    // picks (2,3), whose image sequence (1,3,2) is smallest
    auto s3 = PermGroup::symmetric(3);
    auto a3 = PermGroup::alternating(3);
    auto w3 = prime_cyclic_coset_witness(s3, a3, 2);
    REQUIRE(w3.has_value());
    CHECK(w3->order() == 2);
    CHECK(w3->cycle_string() == "(2,3)");
    // the witness normalizes H
    for (const auto& h_el : a3.elements()) CHECK(a3.contains(w3->inverse() * h_el * *w3));

    CHECK_THROWS_AS(prime_cyclic_coset_witness(v4, PermGroup::trivial(4), 2), argument_error);
}

TEST_CASE("orbit-stabilizer in Lagrange form for the quартic scheme functions") {
    // orbit size * |stabilizer| = n! for Phi under S_n
    using QPoly = MultiPoly<Rational>;
    auto var = [](int i) { return QPoly::variable(4, i, Rational(1)); };
    auto y1 = var(0) * var(1) + var(2) * var(3);
    auto w2w3 = (var(0) + var(2) - var(1) - var(3)) * (var(0) + var(3) - var(1) - var(2));
    for (const auto& f : {y1, w2w3, elementary_sym<Rational>(2, 4, Rational(1))}) {
        auto stab = symbolic_stabilizer(f);
        std::set<MultiPoly<Rational>::TermMap> orbit;
        const auto s4g = PermGroup::symmetric(4);
        for (const auto& s : s4g.elements()) orbit.insert(apply_perm(f, s).terms());
        CHECK(orbit.size() * stab.order() == 24);
    }
}
