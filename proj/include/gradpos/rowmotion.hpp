#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gradpos/involutions.hpp"
#include "gradpos/poly.hpp"
#include "gradpos/polynomials.hpp"
#include "gradpos/poset.hpp"

namespace gradpos {

/// Rowmotion on order ideals: I maps to the ideal generated by the minimal
/// elements of the complement of I.
inline DynBitset rowmotion_ideal(const Poset& P, const DynBitset& I) {
    if (!P.is_ideal(I)) throw std::invalid_argument("rowmotion_ideal: input is not an order ideal");
    return P.ideal_generated_by(P.min_elements_outside(I));
}

namespace detail {

inline DynBitset filter_generated_by(const Poset& P, const DynBitset& A) {
    DynBitset r(static_cast<std::size_t>(P.size()));
    for (int x : A.to_indices()) r |= P.above(x);
    return r;
}

} // namespace detail

/// Rowmotion transported to antichains along A <-> (ideal generated by A):
/// A maps to the minimal elements outside the ideal generated by A.
inline DynBitset panyushev_complement(const Poset& P, const DynBitset& A) {
    if (!P.is_antichain(A)) throw std::invalid_argument("panyushev_complement: input is not an antichain");
    return P.min_elements_outside(P.ideal_generated_by(A));
}

/// Inverse map on antichains: A maps to the maximal elements outside the
/// order filter generated by A.
inline DynBitset panyushev_inverse(const Poset& P, const DynBitset& A) {
    if (!P.is_antichain(A)) throw std::invalid_argument("panyushev_inverse: input is not an antichain");
    DynBitset rest = detail::filter_generated_by(P, A).complement_in(static_cast<std::size_t>(P.size()));
    // Maximal elements of the complement of the filter.
    DynBitset out(static_cast<std::size_t>(P.size()));
    for (int x : rest.to_indices()) {
        bool maximal = true;
        for (int u : P.up_covers(x))
            if (rest.test(static_cast<std::size_t>(u))) {
                maximal = false;
                break;
            }
        if (maximal) out.set(static_cast<std::size_t>(x));
    }
    return out;
}

/// Inverse rowmotion on ideals.
inline DynBitset rowmotion_ideal_inverse(const Poset& P, const DynBitset& I) {
    if (!P.is_ideal(I)) throw std::invalid_argument("rowmotion_ideal_inverse: input is not an order ideal");
    DynBitset filter = detail::filter_generated_by(P, P.max_elements(I));
    return filter.complement_in(static_cast<std::size_t>(P.size()));
}

/// Decomposition of J(P) into rowmotion orbits.  Orbits are discovered by
/// scanning ideals in canonical (size, set) order and following rowmotion, so
/// the orbit list and each orbit's internal rotation are deterministic.
struct OrbitReport {
    std::vector<std::vector<DynBitset>> orbits;

    std::vector<long long> sizes() const {
        std::vector<long long> s;
        s.reserve(orbits.size());
        for (const auto& o : orbits) s.push_back(static_cast<long long>(o.size()));
        return s;
    }

    /// Sorted multiset of orbit sizes.
    std::vector<long long> size_multiset() const {
        auto s = sizes();
        std::sort(s.begin(), s.end());
        return s;
    }

    /// Per orbit: the sorted multiset of ideal cardinalities along the orbit.
    std::vector<std::vector<long long>> size_traces() const {
        std::vector<std::vector<long long>> out;
        out.reserve(orbits.size());
        for (const auto& o : orbits) {
            std::vector<long long> tr;
            tr.reserve(o.size());
            for (const auto& I : o) tr.push_back(static_cast<long long>(I.count()));
            std::sort(tr.begin(), tr.end());
            out.push_back(std::move(tr));
        }
        return out;
    }

    /// Per orbit: how many ideals have exactly `target` elements.
    std::vector<long long> count_with_size(long long target) const {
        std::vector<long long> out;
        out.reserve(orbits.size());
        for (const auto& o : orbits) {
            long long c = 0;
            for (const auto& I : o)
                if (static_cast<long long>(I.count()) == target) ++c;
            out.push_back(c);
        }
        return out;
    }
};

inline OrbitReport all_orbits(const Poset& P, std::size_t bound = max_ideals_bound()) {
    std::vector<DynBitset> ids = P.ideals(bound);
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> pos;
    pos.reserve(ids.size() * 2);
    for (std::size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = k;
    std::vector<char> visited(ids.size(), 0);
    OrbitReport rep;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (visited[k]) continue;
        std::vector<DynBitset> orbit;
        DynBitset cur = ids[k];
        for (;;) {
            std::size_t at = pos.at(cur);
            if (visited[at]) break;
            visited[at] = 1;
            orbit.push_back(cur);
            cur = rowmotion_ideal(P, cur);
        }
        rep.orbits.push_back(std::move(orbit));
    }
    return rep;
}

/// Cyclic sieving data.  With n the lcm of the orbit sizes, an orbit of size
/// s contributes the residue polynomial sum_{(n/s) | j} t^j modulo t^n - 1,
/// so the sieving phenomenon holds exactly when folding M_P modulo t^n - 1
/// yields, in coefficient i, the count #{orbits O : (n/|O|) divides i}.
struct CSPReport {
    long long order = 1;                    // n = lcm of orbit sizes
    std::vector<long long> m_fold;          // M_P folded mod t^n - 1
    std::vector<long long> orbit_side;      // predicted from the orbit sizes
    bool holds = false;
};

inline CSPReport csp_check(const Poset& P, std::size_t bound = max_ideals_bound()) {
    OrbitReport orbits = all_orbits(P, bound);
    CSPReport rep;
    rep.order = 1;
    for (long long s : orbits.sizes()) rep.order = std::lcm(rep.order, s);
    Poly m = m_polynomial(P, bound);
    rep.m_fold.assign(static_cast<std::size_t>(rep.order), 0);
    for (std::size_t k = 0; k < m.coeff.size(); ++k)
        rep.m_fold[k % static_cast<std::size_t>(rep.order)] += m.coeff[k];
    rep.orbit_side.assign(static_cast<std::size_t>(rep.order), 0);
    for (long long s : orbits.sizes()) {
        long long step = rep.order / s;
        for (long long i = 0; i < rep.order; i += step) ++rep.orbit_side[static_cast<std::size_t>(i)];
    }
    rep.holds = (rep.m_fold == rep.orbit_side);
    return rep;
}

/// For each orbit: whether ideal complementation under the given
/// order-reversing involution maps the orbit into itself.
inline std::vector<bool> duality_verdicts(const Poset& P, const Permutation& f, const OrbitReport& orbits) {
    std::unordered_map<DynBitset, std::size_t, DynBitsetHash> orbit_of;
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
        for (const auto& I : orbits.orbits[o]) orbit_of[I] = o;
    std::vector<bool> out;
    out.reserve(orbits.orbits.size());
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
        bool closed = true;
        for (const auto& I : orbits.orbits[o]) {
            DynBitset c = complement_ideal(P, f, I);
            if (orbit_of.at(c) != o) {
                closed = false;
                break;
            }
        }
        out.push_back(closed);
    }
    return out;
}

} // namespace gradpos
