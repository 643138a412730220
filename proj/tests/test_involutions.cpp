#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "gradpos/gradings.hpp"
#include "gradpos/involutions.hpp"
#include "gradpos/polynomials.hpp"

using namespace gradpos;

TEST_CASE("permutation predicates") {
    Poset a = antichain_poset(3);
    CHECK(is_permutation(a, {2, 0, 1}));
    CHECK_FALSE(is_permutation(a, {0, 0, 1}));
    CHECK_FALSE(is_permutation(a, {0, 1}));
    CHECK(is_involution({1, 0, 2}));
    CHECK_FALSE(is_involution({1, 2, 0}));
    CHECK(fixed_points({1, 0, 2}) == std::vector<int>{2});
}

TEST_CASE("order reversal on a chain") {
    Poset c = chain(3);
    Permutation rev = {2, 1, 0};
    CHECK(is_order_reversing(c, rev));
    CHECK_FALSE(is_order_reversing(c, Permutation{0, 1, 2}));
    auto all = all_order_reversing_involutions(c);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == rev);
}

TEST_CASE("complement ideal on a 2-chain") {
    Poset c = chain(2);
    Permutation rev = {1, 0};
    DynBitset empty(2), low(2), full(2);
    low.set(0);
    full.set(0);
    full.set(1);
    CHECK(complement_ideal(c, rev, empty) == full);
    CHECK(complement_ideal(c, rev, full) == empty);
    CHECK(complement_ideal(c, rev, low) == low);  // the unique self-complementary ideal
    CHECK(count_self_complementary(c, rev) == 1);
    CHECK(m_polynomial(c).value_at_minus_one() == 1);
}

TEST_CASE("complementation is an involution on ideals") {
    Poset g = grid(2, 3);
    auto invs = all_order_reversing_involutions(g);
    REQUIRE(invs.size() == 1);
    for (const auto& I : g.ideals()) {
        DynBitset c = complement_ideal(g, invs[0], I);
        CHECK(g.is_ideal(c));
        CHECK(complement_ideal(g, invs[0], c) == I);
    }
    CHECK(count_self_complementary(g, invs[0]) == m_polynomial(g).value_at_minus_one());
}

TEST_CASE("K posets have exactly two reversing involutions") {
    for (int r = 1; r <= 4; ++r) {
        auto invs = all_order_reversing_involutions(poset_K(r));
        REQUIRE(invs.size() == 2);
        std::vector<std::size_t> fp;
        for (const auto& f : invs) fp.push_back(fixed_points(f).size());
        std::sort(fp.begin(), fp.end());
        CHECK(fp == std::vector<std::size_t>{0, 2});
    }
}

TEST_CASE("canonical involution on A2 standard:1") {
    RootSystem rs('A', 2);
    WeightPoset wp = delta1(rs, 1);
    REQUIRE(wp.poset.size() == 2);
    Permutation inv = w0i_involution(rs, 1, wp);
    CHECK(inv == Permutation{1, 0});
    CHECK(fixed_points(inv).empty());
    CHECK(count_self_complementary(wp.poset, inv) == 1);
}

TEST_CASE("canonical involution is order-reversing on sample instances") {
    for (const char* name : {"A4", "B3", "C3", "D4", "G2"}) {
        auto [f, n] = parse_type_name(name);
        RootSystem rs(f, n);
        for (int i = 1; i <= n; ++i) {
            WeightPoset wp = delta1(rs, i);
            Permutation inv = w0i_involution(rs, i, wp);
            CHECK(is_involution(inv));
            CHECK(is_order_reversing(wp.poset, inv));
        }
    }
}

TEST_CASE("fixed point criterion on small instances") {
    for (const char* name : {"A3", "B3", "C3"}) {
        auto [f, n] = parse_type_name(name);
        RootSystem rs(f, n);
        for (int i = 1; i <= n; ++i) {
            WeightPoset wp = delta1(rs, i);
            Permutation inv = w0i_involution(rs, i, wp);
            bool zero = m_polynomial(wp.poset).value_at_minus_one() == 0;
            bool has_fixed = !fixed_points(inv).empty();
            CHECK(zero == has_fixed);
        }
    }
}
