#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gradpos/gradings.hpp"
#include "gradpos/poset.hpp"
#include "gradpos/root_system.hpp"

namespace gradpos {

/// A permutation of poset elements, as an index vector.
using Permutation = std::vector<int>;

inline bool is_permutation(const Poset& P, const Permutation& f) {
    if (static_cast<int>(f.size()) != P.size()) return false;
    std::vector<char> seen(f.size(), 0);
    for (int y : f) {
        if (y < 0 || y >= P.size() || seen[static_cast<std::size_t>(y)]) return false;
        seen[static_cast<std::size_t>(y)] = 1;
    }
    return true;
}

inline bool is_involution(const Permutation& f) {
    for (std::size_t x = 0; x < f.size(); ++x) {
        int y = f[x];
        if (y < 0 || y >= static_cast<int>(f.size()) || f[static_cast<std::size_t>(y)] != static_cast<int>(x))
            return false;
    }
    return true;
}

inline bool is_order_reversing(const Poset& P, const Permutation& f) {
    if (!is_permutation(P, f)) return false;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b)
            if (P.leq(a, b) != P.leq(f[static_cast<std::size_t>(b)], f[static_cast<std::size_t>(a)])) return false;
    return true;
}

inline std::vector<int> fixed_points(const Permutation& f) {
    std::vector<int> out;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] == static_cast<int>(x)) out.push_back(static_cast<int>(x));
    return out;
}

/// The involution on Delta(1) induced by the longest element of the parabolic
/// Weyl group generated by all simple reflections except s_i.  Throws
/// logic_error if the action fails to stabilize Delta(1) or fails to be an
/// order-reversing involution.
inline Permutation w0i_involution(const RootSystem& rs, int i, const WeightPoset& wp) {
    std::set<int> J;
    for (int j = 1; j <= rs.rank(); ++j)
        if (j != i) J.insert(j);
    std::vector<int> word = rs.longest_element_word(J);

    std::map<RootVec, int> pos;
    for (std::size_t k = 0; k < wp.roots.size(); ++k) pos[wp.roots[k]] = static_cast<int>(k);

    Permutation f(wp.roots.size(), -1);
    for (std::size_t k = 0; k < wp.roots.size(); ++k) {
        RootVec img = rs.apply_word(word, wp.roots[k]);
        auto it = pos.find(img);
        if (it == pos.end())
            throw std::logic_error("parabolic longest element does not stabilize the weight poset");
        f[k] = it->second;
    }
    if (!is_involution(f)) throw std::logic_error("induced permutation is not an involution");
    if (!is_order_reversing(wp.poset, f)) throw std::logic_error("induced permutation is not order-reversing");
    return f;
}

inline Permutation w0i_involution(const RootSystem& rs, int i) {
    WeightPoset wp = delta1(rs, i);
    return w0i_involution(rs, i, wp);
}

/// Complement of an ideal under an order-reversing involution:
/// I^c = P \ f(I).  Requires I to be an ideal and f order-reversing.
inline DynBitset complement_ideal(const Poset& P, const Permutation& f, const DynBitset& I) {
    if (!P.is_ideal(I)) throw std::invalid_argument("complement_ideal: input is not an order ideal");
    if (!is_involution(f) || !is_order_reversing(P, f))
        throw std::invalid_argument("complement_ideal: map is not an order-reversing involution");
    DynBitset image(static_cast<std::size_t>(P.size()));
    for (int x : I.to_indices()) image.set(static_cast<std::size_t>(f[static_cast<std::size_t>(x)]));
    DynBitset out = image.complement_in(static_cast<std::size_t>(P.size()));
    if (!P.is_ideal(out)) throw std::logic_error("complement of an ideal failed to be an ideal");
    return out;
}

/// Number of ideals with I = I^c under the involution.
inline long long count_self_complementary(const Poset& P, const Permutation& f,
                                          std::size_t bound = max_ideals_bound()) {
    if (!is_involution(f) || !is_order_reversing(P, f))
        throw std::invalid_argument("count_self_complementary: map is not an order-reversing involution");
    long long cnt = 0;
    for (const DynBitset& I : P.ideals(bound)) {
        DynBitset image(static_cast<std::size_t>(P.size()));
        for (int x : I.to_indices()) image.set(static_cast<std::size_t>(f[static_cast<std::size_t>(x)]));
        if (image.complement_in(static_cast<std::size_t>(P.size())) == I) ++cnt;
    }
    return cnt;
}

namespace detail {

inline void search_reversing_involutions(const Poset& P, Permutation& f, std::vector<char>& used, int x,
                                         std::vector<Permutation>& out, std::size_t cap) {
    int n = P.size();
    while (x < n && f[static_cast<std::size_t>(x)] >= 0) ++x;
    if (x == n) {
        out.push_back(f);
        if (out.size() > cap) throw resource_error("too many order-reversing involutions");
        return;
    }
    for (int y = x; y < n; ++y) {
        if (used[static_cast<std::size_t>(y)]) continue;
        // Partial consistency: compare against every already-assigned pair.
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            int fa = f[static_cast<std::size_t>(a)];
            if (fa < 0) continue;
            if (P.leq(x, a) != P.leq(fa, y)) ok = false;
            if (P.leq(a, x) != P.leq(y, fa)) ok = false;
        }
        if (!ok) continue;
        f[static_cast<std::size_t>(x)] = y;
        f[static_cast<std::size_t>(y)] = x;
        used[static_cast<std::size_t>(x)] = 1;
        used[static_cast<std::size_t>(y)] = 1;
        search_reversing_involutions(P, f, used, x + 1, out, cap);
        f[static_cast<std::size_t>(x)] = -1;
        f[static_cast<std::size_t>(y)] = -1;
        used[static_cast<std::size_t>(x)] = 0;
        used[static_cast<std::size_t>(y)] = 0;
    }
}

} // namespace detail

/// All order-reversing involutions of P, sorted lexicographically.
inline std::vector<Permutation> all_order_reversing_involutions(const Poset& P, std::size_t cap = 100000) {
    Permutation f(static_cast<std::size_t>(P.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(P.size()), 0);
    std::vector<Permutation> out;
    detail::search_reversing_involutions(P, f, used, 0, out, cap);
    std::vector<Permutation> valid;
    for (auto& g : out)
        if (is_order_reversing(P, g)) valid.push_back(std::move(g));
    std::sort(valid.begin(), valid.end());
    return valid;
}

} // namespace gradpos
