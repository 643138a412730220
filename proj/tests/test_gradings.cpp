#include <catch2/catch_amalgamated.hpp>

#include "gradpos/gradings.hpp"

using namespace gradpos;

TEST_CASE("grading spec parsing") {
    GradingSpec g = GradingSpec::parse("standard:3");
    CHECK(g.kind == GradingSpec::Kind::OneStandard);
    CHECK(g.i == 3);
    CHECK(g.to_string() == "standard:3");
    CHECK(GradingSpec::parse("extra-special").kind == GradingSpec::Kind::ExtraSpecial);
    CHECK(GradingSpec::parse("7").i == 7);
    CHECK_THROWS_AS(GradingSpec::parse("standard:"), std::invalid_argument);
    CHECK_THROWS_AS(GradingSpec::parse("weird"), std::invalid_argument);
    CHECK_THROWS_AS(GradingSpec::parse(""), std::invalid_argument);
}

TEST_CASE("A3 standard gradings") {
    RootSystem rs('A', 3);
    CHECK(delta1(rs, 1).poset.size() == 3);
    WeightPoset mid = delta1(rs, 2);
    CHECK(mid.poset.size() == 4);
    CHECK(are_isomorphic(mid.poset, grid(2, 2)).has_value());
    CHECK_THROWS_AS(delta1(rs, 0), std::invalid_argument);
    CHECK_THROWS_AS(delta1(rs, 4), std::invalid_argument);
}

TEST_CASE("B3 standard:1 is a chain of 5") {
    RootSystem rs('B', 3);
    WeightPoset wp = delta1(rs, 1);
    CHECK(wp.poset.size() == 5);
    CHECK(are_isomorphic(wp.poset, chain(5)).has_value());
}

TEST_CASE("extra-special gradings") {
    RootSystem a3('A', 3);
    WeightPoset es = delta1_extra_special(a3);
    CHECK(es.poset.size() == 4);
    CHECK(are_isomorphic(es.poset, disjoint_union(chain(2), chain(2))).has_value());

    RootSystem a1('A', 1);
    CHECK(delta1_extra_special(a1).poset.size() == 0);

    RootSystem g2('G', 2);
    CHECK(delta1_extra_special(g2).poset.size() == 4);
}

TEST_CASE("weight poset elements are degree-one roots in display order") {
    RootSystem rs('C', 3);
    WeightPoset wp = delta1(rs, 3);
    CHECK(wp.poset.size() == 6);
    for (const RootVec& v : wp.roots) CHECK(v[2] == 1);
    CHECK(std::is_sorted(wp.roots.begin(), wp.roots.end(), root_less));
}

TEST_CASE("invariants of G2 and F4") {
    InvariantsReport g2 = invariants_report(RootSystem('G', 2));
    CHECK(g2.coxeter_number == 6);
    CHECK(g2.dual_coxeter_number == 4);
    CHECK(g2.num_long_simple == 1);
    CHECK(g2.extra_special_size == 4);

    InvariantsReport f4 = invariants_report(RootSystem('F', 4));
    CHECK(f4.coxeter_number == 12);
    CHECK(f4.dual_coxeter_number == 9);
    CHECK(f4.num_long_simple == 2);
    CHECK(f4.extra_special_size == 14);
}

TEST_CASE("invariants of classical families") {
    InvariantsReport b4 = invariants_report(RootSystem('B', 4));
    CHECK(b4.coxeter_number == 8);
    CHECK(b4.dual_coxeter_number == 7);
    CHECK(b4.num_long_simple == 3);

    InvariantsReport c4 = invariants_report(RootSystem('C', 4));
    CHECK(c4.coxeter_number == 8);
    CHECK(c4.dual_coxeter_number == 5);
    CHECK(c4.num_long_simple == 1);

    InvariantsReport d5 = invariants_report(RootSystem('D', 5));
    CHECK(d5.coxeter_number == 8);
    CHECK(d5.dual_coxeter_number == 8);
    CHECK(d5.num_long_simple == 5);
}

TEST_CASE("delta1_of dispatches on the grading kind") {
    RootSystem rs('B', 3);
    CHECK(delta1_of(rs, GradingSpec::one_standard(2)).poset.size() ==
          delta1(rs, 2).poset.size());
    CHECK(delta1_of(rs, GradingSpec::extra_special()).poset.size() ==
          delta1_extra_special(rs).poset.size());
}

TEST_CASE("F4 standard:1 is K3") {
    RootSystem rs('F', 4);
    WeightPoset wp = delta1(rs, 1);
    CHECK(wp.poset.size() == 8);
    CHECK(are_isomorphic(wp.poset, poset_K(3)).has_value());
}
