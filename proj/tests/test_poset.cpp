#include <catch2/catch_amalgamated.hpp>

#include "gradpos/common.hpp"
#include "gradpos/poset.hpp"

using namespace gradpos;

TEST_CASE("chain basics") {
    Poset c = chain(4);
    CHECK(c.size() == 4);
    CHECK(c.covers().size() == 3);
    CHECK(c.height() == 4);
    CHECK(c.is_graded());
    CHECK(c.leq(0, 3));
    CHECK_FALSE(c.leq(3, 0));
    CHECK(c.rank(0) == 1);
    CHECK(c.rank(3) == 4);
    CHECK(c.ideals().size() == 5);
    CHECK(c.antichains().size() == 5);
}

TEST_CASE("grid ideal counts follow the gaussian binomial") {
    Poset g = grid(2, 3);
    CHECK(g.size() == 6);
    CHECK(g.is_graded());
    CHECK(g.height() == 4);
    // [5 choose 2]_t = 1 + t + 2t^2 + 2t^3 + 2t^4 + t^5 + t^6
    CHECK(g.ideal_counts_by_size() ==
          std::vector<long long>{1, 1, 2, 2, 2, 1, 1});
    CHECK(g.ideals().size() == 10);
}

TEST_CASE("below and above are inclusive") {
    Poset g = grid(2, 2);
    for (int x = 0; x < g.size(); ++x) {
        CHECK(g.below(x).test(static_cast<std::size_t>(x)));
        CHECK(g.above(x).test(static_cast<std::size_t>(x)));
    }
}

TEST_CASE("K poset shape") {
    Poset k = poset_K(2);
    CHECK(k.size() == 6);
    CHECK(k.is_graded());
    CHECK(k.height() == 5);
    CHECK(k.rank_levels() == std::vector<long long>{1, 1, 2, 1, 1});
    CHECK(k.ideals().size() == 8);  // 2n + 2 levels' worth: L_0..L_5, In, In'
}

TEST_CASE("H poset shape") {
    Poset h = poset_H(3);
    CHECK(h.size() == 6);
    CHECK(h.is_graded());
    Poset h1 = poset_H(1);
    CHECK(h1.size() == 1);
}

TEST_CASE("ideal and antichain predicates") {
    Poset g = grid(2, 2);  // 0 < 1, 0 < 2, 1 < 3, 2 < 3
    DynBitset s(4);
    s.set(0);
    CHECK(g.is_ideal(s));
    CHECK(g.is_antichain(s));
    s.set(3);
    CHECK_FALSE(g.is_ideal(s));
    CHECK_FALSE(g.is_antichain(s));
    DynBitset mid(4);
    mid.set(1);
    mid.set(2);
    CHECK(g.is_antichain(mid));
    CHECK_FALSE(g.is_ideal(mid));
}

TEST_CASE("ideal count equals antichain count") {
    for (const Poset& P : {grid(3, 3), poset_K(3), poset_H(4),
                           disjoint_union(chain(2), chain(3))}) {
        CHECK(P.ideals().size() == P.antichains().size());
    }
}

TEST_CASE("ideals lattice of an antichain pair is the 2x2 grid") {
    CHECK(are_isomorphic(antichain_poset(2).ideals_lattice(), grid(2, 2)).has_value());
}

TEST_CASE("isomorphism positives and negatives") {
    CHECK(are_isomorphic(grid(2, 3), grid(3, 2)).has_value());
    CHECK_FALSE(are_isomorphic(grid(2, 3), chain(6)).has_value());
    CHECK_FALSE(are_isomorphic(poset_K(2), grid(2, 3)).has_value());
    CHECK(are_isomorphic(chain(0), Poset(0, {})).has_value());
    auto iso = are_isomorphic(poset_K(3), poset_K(3));
    REQUIRE(iso.has_value());
    CHECK(iso->size() == 8);
}

TEST_CASE("ordinal sum stacks posets") {
    Poset p = ordinal_sum(antichain_poset(2), chain(1));
    CHECK(p.size() == 3);
    CHECK(p.leq(0, 2));
    CHECK(p.leq(1, 2));
    CHECK_FALSE(p.leq(0, 1));
}

TEST_CASE("product order") {
    Poset p = product(chain(2), chain(3));
    CHECK(p.size() == 6);
    CHECK(are_isomorphic(p, grid(2, 3)).has_value());
}

TEST_CASE("enumeration bound raises resource errors") {
    Poset c = chain(10);
    CHECK_THROWS_AS(c.ideals(5), resource_error);
    CHECK_THROWS_AS(c.ideal_counts_by_size(5), resource_error);
    CHECK_THROWS_AS(c.antichains(5), resource_error);
    CHECK_NOTHROW(c.ideals(11));
}

TEST_CASE("minuscule ideal lattices of K posets") {
    CHECK(are_isomorphic(poset_K(1).ideals_lattice(), poset_K(2)).has_value());
    CHECK(are_isomorphic(poset_K(2).ideals_lattice(), poset_K(3)).has_value());
}

TEST_CASE("J2 and J3 sizes") {
    CHECK(poset_J2().size() == 16);
    CHECK(poset_J2().covers().size() == 20);
    CHECK(poset_J3().size() == 27);
    CHECK(poset_J3().covers().size() == 36);
}

TEST_CASE("from_leq agrees with cover construction") {
    Poset byleq = Poset::from_leq(4, [](int a, int b) {
        // the 2x2 grid via divisibility of {1,2,3,6}
        const int v[4] = {1, 2, 3, 6};
        return v[b] % v[a] == 0;
    });
    CHECK(are_isomorphic(byleq, grid(2, 2)).has_value());
}
