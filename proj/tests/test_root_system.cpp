#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gradpos/root_system.hpp"

using namespace gradpos;

TEST_CASE("type name parsing") {
    CHECK(parse_type_name("A1") == std::make_pair('A', 1));
    CHECK(parse_type_name("D10") == std::make_pair('D', 10));
    CHECK(parse_type_name("G2") == std::make_pair('G', 2));
    CHECK_THROWS_AS(parse_type_name(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_name("A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_name("H3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_name("A2x"), std::invalid_argument);
}

TEST_CASE("invalid ranks are rejected") {
    CHECK_THROWS_AS(RootSystem('A', 0), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('C', 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('D', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('E', 5), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('F', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('G', 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem('X', 2), std::invalid_argument);
}

TEST_CASE("A2 positive roots") {
    RootSystem rs('A', 2);
    REQUIRE(rs.positive_roots().size() == 3);
    std::set<RootVec> got(rs.positive_roots().begin(), rs.positive_roots().end());
    std::set<RootVec> want = {{1, 0}, {0, 1}, {1, 1}};
    CHECK(got == want);
    CHECK(rs.highest_root() == RootVec{1, 1});
}

TEST_CASE("G2 positive roots") {
    RootSystem rs('G', 2);
    REQUIRE(rs.positive_roots().size() == 6);
    std::set<RootVec> got(rs.positive_roots().begin(), rs.positive_roots().end());
    std::set<RootVec> want = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    CHECK(got == want);
    CHECK(rs.highest_root() == RootVec{3, 2});
    CHECK(root_height(rs.highest_root()) == 5);
}

TEST_CASE("B3 and C3 positive root counts") {
    CHECK(RootSystem('B', 3).positive_roots().size() == 9);
    CHECK(RootSystem('C', 3).positive_roots().size() == 9);
    CHECK(RootSystem('D', 4).positive_roots().size() == 12);
    CHECK(RootSystem('F', 4).positive_roots().size() == 24);
    CHECK(RootSystem('E', 6).positive_roots().size() == 36);
}

TEST_CASE("positive roots are sorted by height then lexicographically") {
    RootSystem rs('F', 4);
    CHECK(std::is_sorted(rs.positive_roots().begin(), rs.positive_roots().end(), root_less));
}

TEST_CASE("pairing of a root with itself is 2") {
    for (const char* name : {"A3", "B3", "C4", "D4", "F4", "G2"}) {
        auto [f, n] = parse_type_name(name);
        RootSystem rs(f, n);
        for (const RootVec& a : rs.positive_roots()) CHECK(rs.pairing(a, a) == 2);
    }
}

TEST_CASE("simple reflections are involutions on root space") {
    RootSystem rs('D', 4);
    for (int i = 1; i <= 4; ++i)
        for (const RootVec& b : rs.positive_roots())
            CHECK(rs.apply_word({i, i}, b) == b);
}

TEST_CASE("simple reflection negates its own simple root") {
    RootSystem rs('C', 3);
    for (int i = 1; i <= 3; ++i) {
        RootVec neg = rs.simple_root(i);
        for (int& c : neg) c = -c;
        CHECK(rs.apply_word({i}, rs.simple_root(i)) == neg);
    }
}

TEST_CASE("longest element word lengths") {
    std::set<int> full;
    RootSystem a3('A', 3);
    for (int i = 1; i <= 3; ++i) full.insert(i);
    CHECK(a3.longest_element_word(full).size() == 6);
    CHECK(a3.longest_element_word({}).empty());
    CHECK(a3.longest_element_word({2}).size() == 1);

    RootSystem g2('G', 2);
    CHECK(g2.longest_element_word({1, 2}).size() == 6);
}

TEST_CASE("longest element negates the positive system") {
    RootSystem rs('B', 3);
    std::vector<int> w0 = rs.longest_element_word({1, 2, 3});
    for (const RootVec& b : rs.positive_roots()) {
        RootVec img = rs.apply_word(w0, b);
        RootVec neg = b;
        for (int& c : neg) c = -c;
        bool is_neg_of_positive = rs.is_positive_root(RootVec{-img[0], -img[1], -img[2]});
        CHECK(is_neg_of_positive);
        CHECK(rs.apply_word(w0, img) == b);  // w0 is an involution in types B
        (void)neg;
    }
}
