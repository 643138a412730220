#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "gradpos/gradings.hpp"
#include "gradpos/polynomials.hpp"
#include "gradpos/rowmotion.hpp"

using namespace gradpos;

TEST_CASE("rowmotion is the ideal of the minimal complement") {
    for (const Poset& P : {chain(4), grid(2, 3), poset_K(2), poset_H(3),
                           disjoint_union(chain(2), chain(1))}) {
        for (const auto& I : P.ideals()) {
            DynBitset expected = P.ideal_generated_by(P.min_elements_outside(I));
            CHECK(rowmotion_ideal(P, I) == expected);
        }
    }
}

TEST_CASE("rowmotion orbit of a 2-chain") {
    Poset c = chain(2);
    DynBitset empty(2), low(2), full(2);
    low.set(0);
    full.set(0);
    full.set(1);
    CHECK(rowmotion_ideal(c, empty) == low);
    CHECK(rowmotion_ideal(c, low) == full);
    CHECK(rowmotion_ideal(c, full) == empty);
    OrbitReport orbits = all_orbits(c);
    REQUIRE(orbits.orbits.size() == 1);
    CHECK(orbits.sizes() == std::vector<long long>{3});
}

TEST_CASE("rowmotion inverse undoes rowmotion") {
    for (const Poset& P : {grid(2, 2), poset_K(2), antichain_poset(3)}) {
        for (const auto& I : P.ideals()) {
            CHECK(rowmotion_ideal_inverse(P, rowmotion_ideal(P, I)) == I);
            CHECK(rowmotion_ideal(P, rowmotion_ideal_inverse(P, I)) == I);
        }
    }
}

TEST_CASE("panyushev complement pairs with its inverse") {
    Poset g = grid(2, 3);
    for (const auto& A : g.antichains()) {
        CHECK(g.is_antichain(panyushev_complement(g, A)));
        CHECK(panyushev_inverse(g, panyushev_complement(g, A)) == A);
    }
}

TEST_CASE("orbits partition the ideals") {
    for (const Poset& P : {grid(2, 3), poset_K(2), poset_H(3)}) {
        OrbitReport orbits = all_orbits(P);
        long long total = 0;
        for (const auto& orb : orbits.orbits) total += static_cast<long long>(orb.size());
        CHECK(total == static_cast<long long>(P.ideals().size()));
        // Each orbit is a genuine cycle of rowmotion.
        for (const auto& orb : orbits.orbits) {
            for (std::size_t k = 0; k < orb.size(); ++k)
                CHECK(rowmotion_ideal(P, orb[k]) == orb[(k + 1) % orb.size()]);
        }
    }
}

TEST_CASE("orbit report helpers") {
    OrbitReport orbits = all_orbits(grid(2, 2));
    auto ms = orbits.size_multiset();
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    CHECK(std::accumulate(ms.begin(), ms.end(), 0LL) == 6);
    auto traces = orbits.size_traces();
    CHECK(traces.size() == orbits.orbits.size());
}

TEST_CASE("csp on a 2-chain") {
    CSPReport rep = csp_check(chain(2));
    CHECK(rep.order == 3);
    CHECK(rep.m_fold == std::vector<long long>{1, 1, 1});
    CHECK(rep.orbit_side == std::vector<long long>{1, 1, 1});
    CHECK(rep.holds);
}

TEST_CASE("csp on small weight posets") {
    RootSystem rs('A', 3);
    for (int i = 1; i <= 3; ++i) {
        CSPReport rep = csp_check(delta1(rs, i).poset);
        CHECK(rep.holds);
    }
    CHECK(csp_check(delta1(RootSystem('G', 2), 2).poset).holds);
}

TEST_CASE("extra-special orbits of B3 have uniform size h - 1") {
    RootSystem rs('B', 3);
    WeightPoset wp = delta1_extra_special(rs);
    InvariantsReport inv = invariants_report(rs);
    OrbitReport orbits = all_orbits(wp.poset);
    CHECK(static_cast<int>(orbits.orbits.size()) == inv.num_long_simple);
    for (long long s : orbits.sizes()) CHECK(s == inv.coxeter_number - 1);
}

TEST_CASE("duality verdicts have one entry per orbit") {
    Poset g = grid(2, 3);
    auto invs = all_order_reversing_involutions(g);
    REQUIRE(invs.size() == 1);
    OrbitReport orbits = all_orbits(g);
    auto verdicts = duality_verdicts(g, invs[0], orbits);
    CHECK(verdicts.size() == orbits.orbits.size());
}
