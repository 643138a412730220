#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "gradpos/bitset.hpp"
#include "gradpos/common.hpp"

namespace gradpos {

/// Finite poset given by its Hasse diagram.  Elements are 0..n-1; covers are
/// pairs (a, b) with a covered by b.  Construction validates that the cover
/// relation is acyclic and transitively reduced.  Rank is the longest-path
/// grading: minimal elements have rank 1 and rank(x) is one more than the
/// largest rank among elements covered by x.
class Poset {
public:
    Poset() = default;

    Poset(int n, std::vector<std::pair<int, int>> covers) : n_(n), covers_(std::move(covers)) {
        if (n_ < 0) throw std::invalid_argument("poset size must be nonnegative");
        for (auto [a, b] : covers_) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_)
                throw std::invalid_argument("cover index out of range");
            if (a == b) throw std::invalid_argument("cover relates an element to itself");
        }
        std::sort(covers_.begin(), covers_.end());
        covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
        build_adjacency();
        compute_ranks_and_validate();
    }

    /// Builds the poset whose order relation is the given reflexive partial
    /// order predicate, taking the transitive reduction as cover set.
    static Poset from_leq(int n, const std::function<bool(int, int)>& leq) {
        std::vector<std::pair<int, int>> covers;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || !leq(a, b)) continue;
                bool direct = true;
                for (int c = 0; c < n && direct; ++c)
                    if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
                if (direct) covers.emplace_back(a, b);
            }
        return Poset(n, std::move(covers));
    }

    int size() const { return n_; }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    const std::vector<int>& up_covers(int x) const { return up_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& down_covers(int x) const { return down_[static_cast<std::size_t>(x)]; }

    bool leq(int a, int b) const { return below_[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }

    /// {y : y <= x} as a bitset (includes x).
    const DynBitset& below(int x) const { return below_[static_cast<std::size_t>(x)]; }
    /// {y : y >= x} as a bitset (includes x).
    const DynBitset& above(int x) const { return above_[static_cast<std::size_t>(x)]; }

    int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }

    /// Largest rank (0 for the empty poset).
    int height() const { return height_; }

    bool is_graded() const { return graded_; }

    /// Element counts per rank 1..height.
    std::vector<long long> rank_levels() const {
        std::vector<long long> lv(static_cast<std::size_t>(height_), 0);
        for (int x = 0; x < n_; ++x) ++lv[static_cast<std::size_t>(rank_[static_cast<std::size_t>(x)] - 1)];
        return lv;
    }

    /// Linear extension ordering elements by (rank, index).
    const std::vector<int>& topo_order() const { return topo_; }

    bool is_ideal(const DynBitset& s) const {
        for (int x : s.to_indices())
            for (int d : down_[static_cast<std::size_t>(x)])
                if (!s.test(static_cast<std::size_t>(d))) return false;
        return true;
    }

    bool is_antichain(const DynBitset& s) const {
        auto idx = s.to_indices();
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (leq(idx[i], idx[j]) || leq(idx[j], idx[i])) return false;
        return true;
    }

    /// Maximal elements of an ideal, as an antichain.
    DynBitset max_elements(const DynBitset& ideal) const {
        DynBitset a(static_cast<std::size_t>(n_));
        for (int x : ideal.to_indices()) {
            bool covered = false;
            for (int u : up_[static_cast<std::size_t>(x)])
                if (ideal.test(static_cast<std::size_t>(u))) {
                    covered = true;
                    break;
                }
            if (!covered) a.set(static_cast<std::size_t>(x));
        }
        return a;
    }

    /// Minimal elements of the complement of an ideal.
    DynBitset min_elements_outside(const DynBitset& ideal) const {
        DynBitset a(static_cast<std::size_t>(n_));
        for (int x = 0; x < n_; ++x) {
            if (ideal.test(static_cast<std::size_t>(x))) continue;
            bool ok = true;
            for (int d : down_[static_cast<std::size_t>(x)])
                if (!ideal.test(static_cast<std::size_t>(d))) {
                    ok = false;
                    break;
                }
            if (ok) a.set(static_cast<std::size_t>(x));
        }
        return a;
    }

    /// Order ideal generated by a set: the union of principal ideals.
    DynBitset ideal_generated_by(const DynBitset& s) const {
        DynBitset r(static_cast<std::size_t>(n_));
        for (int x : s.to_indices()) r |= below_[static_cast<std::size_t>(x)];
        return r;
    }

    /// All order ideals, sorted by (size, canonical set order).  Throws
    /// resource_error when more than `bound` ideals exist.
    std::vector<DynBitset> ideals(std::size_t bound = max_ideals_bound()) const {
        std::vector<DynBitset> out;
        DynBitset cur(static_cast<std::size_t>(n_));
        enumerate_ideals(0, cur, [&](const DynBitset& I, std::size_t) {
            if (out.size() >= bound)
                throw resource_error("ideal enumeration exceeds bound " + std::to_string(bound) +
                                     " on a poset with " + std::to_string(n_) + " elements");
            out.push_back(I);
        });
        std::sort(out.begin(), out.end(), [](const DynBitset& a, const DynBitset& b) { return set_less(a, b); });
        return out;
    }

    /// Number of ideals of each size, without storing them.
    std::vector<long long> ideal_counts_by_size(std::size_t bound = max_ideals_bound()) const {
        std::vector<long long> counts(static_cast<std::size_t>(n_) + 1, 0);
        std::size_t total = 0;
        DynBitset cur(static_cast<std::size_t>(n_));
        enumerate_ideals(0, cur, [&](const DynBitset&, std::size_t sz) {
            if (++total > bound)
                throw resource_error("ideal enumeration exceeds bound " + std::to_string(bound) +
                                     " on a poset with " + std::to_string(n_) + " elements");
            ++counts[sz];
        });
        return counts;
    }

    /// All antichains, sorted by (size, canonical set order).
    std::vector<DynBitset> antichains(std::size_t bound = max_ideals_bound()) const {
        std::vector<DynBitset> out;
        DynBitset cur(static_cast<std::size_t>(n_));
        DynBitset allowed(static_cast<std::size_t>(n_));
        allowed.set_all();
        enumerate_antichains(0, cur, allowed, [&](const DynBitset& A, std::size_t) {
            if (out.size() >= bound)
                throw resource_error("antichain enumeration exceeds bound " + std::to_string(bound) +
                                     " on a poset with " + std::to_string(n_) + " elements");
            out.push_back(A);
        });
        std::sort(out.begin(), out.end(), [](const DynBitset& a, const DynBitset& b) { return set_less(a, b); });
        return out;
    }

    /// Number of antichains of each size, without storing them.
    std::vector<long long> antichain_counts_by_size(std::size_t bound = max_ideals_bound()) const {
        std::vector<long long> counts(static_cast<std::size_t>(n_) + 1, 0);
        std::size_t total = 0;
        DynBitset cur(static_cast<std::size_t>(n_));
        DynBitset allowed(static_cast<std::size_t>(n_));
        allowed.set_all();
        enumerate_antichains(0, cur, allowed, [&](const DynBitset&, std::size_t sz) {
            if (++total > bound)
                throw resource_error("antichain enumeration exceeds bound " + std::to_string(bound) +
                                     " on a poset with " + std::to_string(n_) + " elements");
            ++counts[sz];
        });
        return counts;
    }

    /// The lattice of order ideals J(P) as a poset ordered by inclusion,
    /// with covers given by single-element additions.
    Poset ideals_lattice(std::size_t bound = max_ideals_bound()) const {
        std::vector<DynBitset> ids = ideals(bound);
        std::unordered_map<DynBitset, int, DynBitsetHash> pos;
        pos.reserve(ids.size() * 2);
        for (std::size_t k = 0; k < ids.size(); ++k) pos[ids[k]] = static_cast<int>(k);
        std::vector<std::pair<int, int>> covers;
        for (std::size_t k = 0; k < ids.size(); ++k) {
            DynBitset addable = min_elements_outside(ids[k]);
            for (int x : addable.to_indices()) {
                DynBitset nxt = ids[k];
                nxt.set(static_cast<std::size_t>(x));
                covers.emplace_back(static_cast<int>(k), pos.at(nxt));
            }
        }
        return Poset(static_cast<int>(ids.size()), std::move(covers));
    }

private:
    void build_adjacency() {
        up_.assign(static_cast<std::size_t>(n_), {});
        down_.assign(static_cast<std::size_t>(n_), {});
        for (auto [a, b] : covers_) {
            up_[static_cast<std::size_t>(a)].push_back(b);
            down_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    void compute_ranks_and_validate() {
        // Topological order by Kahn's algorithm; failure means a cycle.
        std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
        for (auto [a, b] : covers_) ++indeg[static_cast<std::size_t>(b)];
        std::vector<int> queue;
        for (int x = 0; x < n_; ++x)
            if (indeg[static_cast<std::size_t>(x)] == 0) queue.push_back(x);
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n_));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            order.push_back(x);
            for (int u : up_[static_cast<std::size_t>(x)])
                if (--indeg[static_cast<std::size_t>(u)] == 0) queue.push_back(u);
        }
        if (static_cast<int>(order.size()) != n_)
            throw std::invalid_argument("cover relation contains a cycle");

        below_.assign(static_cast<std::size_t>(n_), DynBitset(static_cast<std::size_t>(n_)));
        above_.assign(static_cast<std::size_t>(n_), DynBitset(static_cast<std::size_t>(n_)));
        rank_.assign(static_cast<std::size_t>(n_), 1);
        for (int x : order) {
            below_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(x));
            for (int d : down_[static_cast<std::size_t>(x)]) {
                below_[static_cast<std::size_t>(x)] |= below_[static_cast<std::size_t>(d)];
                rank_[static_cast<std::size_t>(x)] =
                    std::max(rank_[static_cast<std::size_t>(x)], rank_[static_cast<std::size_t>(d)] + 1);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            above_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(x));
            for (int u : up_[static_cast<std::size_t>(x)])
                above_[static_cast<std::size_t>(x)] |= above_[static_cast<std::size_t>(u)];
        }

        // Transitive reduction: no cover may be implied by a longer path.
        for (auto [a, b] : covers_) {
            DynBitset strictly_between = above_[static_cast<std::size_t>(a)] & below_[static_cast<std::size_t>(b)];
            strictly_between.reset(static_cast<std::size_t>(a));
            strictly_between.reset(static_cast<std::size_t>(b));
            if (strictly_between.any())
                throw std::invalid_argument("cover relation is not transitively reduced: " + std::to_string(a) +
                                            " < " + std::to_string(b) + " has an intermediate element");
        }

        height_ = 0;
        for (int x = 0; x < n_; ++x) height_ = std::max(height_, rank_[static_cast<std::size_t>(x)]);
        graded_ = true;
        for (auto [a, b] : covers_)
            if (rank_[static_cast<std::size_t>(b)] != rank_[static_cast<std::size_t>(a)] + 1) graded_ = false;

        topo_.assign(static_cast<std::size_t>(n_), 0);
        for (int x = 0; x < n_; ++x) topo_[static_cast<std::size_t>(x)] = x;
        std::sort(topo_.begin(), topo_.end(), [&](int a, int b) {
            int ra = rank_[static_cast<std::size_t>(a)], rb = rank_[static_cast<std::size_t>(b)];
            return std::tie(ra, a) < std::tie(rb, b);
        });
    }

    /// DFS over the (rank, index) linear extension: at each position the
    /// element may always be skipped and may be added iff all elements it
    /// covers are already present.  Each leaf of the recursion is an ideal.
    template <typename Fn>
    void enumerate_ideals(std::size_t k, DynBitset& cur, const Fn& emit, std::size_t sz = 0) const {
        if (k == topo_.size()) {
            emit(cur, sz);
            return;
        }
        int x = topo_[k];
        enumerate_ideals(k + 1, cur, emit, sz);
        for (int d : down_[static_cast<std::size_t>(x)])
            if (!cur.test(static_cast<std::size_t>(d))) return;
        cur.set(static_cast<std::size_t>(x));
        enumerate_ideals(k + 1, cur, emit, sz + 1);
        cur.reset(static_cast<std::size_t>(x));
    }

    /// Jumps directly to the next selectable element, so every recursion node
    /// branches twice and the node count stays linear in the output size.
    template <typename Fn>
    void enumerate_antichains(int from, DynBitset& cur, DynBitset& allowed, const Fn& emit, std::size_t sz = 0) const {
        int x = allowed.next_set_bit(static_cast<std::size_t>(from));
        if (x < 0) {
            emit(cur, sz);
            return;
        }
        allowed.reset(static_cast<std::size_t>(x));
        {
            DynBitset saved = allowed;
            cur.set(static_cast<std::size_t>(x));
            allowed.subtract(below_[static_cast<std::size_t>(x)]);
            allowed.subtract(above_[static_cast<std::size_t>(x)]);
            enumerate_antichains(x + 1, cur, allowed, emit, sz + 1);
            cur.reset(static_cast<std::size_t>(x));
            allowed = saved;
        }
        enumerate_antichains(x + 1, cur, allowed, emit, sz);
        allowed.set(static_cast<std::size_t>(x));
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<DynBitset> below_, above_;
    std::vector<int> rank_;
    std::vector<int> topo_;
    int height_ = 0;
    bool graded_ = true;
};

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Chain [k] with k elements 0 < 1 < ... < k-1 (empty for k = 0).
inline Poset chain(int k) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return Poset(k, std::move(covers));
}

/// Antichain with k pairwise-incomparable elements.
inline Poset antichain_poset(int k) { return Poset(k, {}); }

/// Direct product; element (a, b) of P x Q has index a * |Q| + b.
inline Poset product(const Poset& P, const Poset& Q) {
    int np = P.size(), nq = Q.size();
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : P.covers())
        for (int v = 0; v < nq; ++v) covers.emplace_back(a * nq + v, b * nq + v);
    for (int u = 0; u < np; ++u)
        for (auto [a, b] : Q.covers()) covers.emplace_back(u * nq + a, u * nq + b);
    return Poset(np * nq, std::move(covers));
}

/// Disjoint union; P keeps its indices, Q is shifted by |P|.
inline Poset disjoint_union(const Poset& P, const Poset& Q) {
    int np = P.size();
    std::vector<std::pair<int, int>> covers = P.covers();
    for (auto [a, b] : Q.covers()) covers.emplace_back(a + np, b + np);
    return Poset(np + Q.size(), std::move(covers));
}

/// Ordinal sum P (+) Q: every element of P below every element of Q.
/// Covers join the maximal elements of P to the minimal elements of Q.
inline Poset ordinal_sum(const Poset& P, const Poset& Q) {
    int np = P.size();
    std::vector<std::pair<int, int>> covers = P.covers();
    for (auto [a, b] : Q.covers()) covers.emplace_back(a + np, b + np);
    std::vector<int> maxP, minQ;
    for (int x = 0; x < np; ++x)
        if (P.up_covers(x).empty()) maxP.push_back(x);
    for (int y = 0; y < Q.size(); ++y)
        if (Q.down_covers(y).empty()) minQ.push_back(y);
    for (int x : maxP)
        for (int y : minQ) covers.emplace_back(x, y + np);
    return Poset(np + Q.size(), std::move(covers));
}

/// Grid [a] x [b].
inline Poset grid(int a, int b) { return product(chain(a), chain(b)); }

/// K_r = [r] (+) ([1] u [1]) (+) [r]; 2r + 2 elements.
inline Poset poset_K(int r) {
    return ordinal_sum(ordinal_sum(chain(r), antichain_poset(2)), chain(r));
}

/// H_r = J([2] x [r-1]); H_1 is the one-element poset.
inline Poset poset_H(int r) {
    if (r < 1) throw std::invalid_argument("poset_H requires r >= 1");
    return grid(2, r - 1).ideals_lattice();
}

/// J^2([2] x [3]) — 16 elements.
inline Poset poset_J2() { return grid(2, 3).ideals_lattice().ideals_lattice(); }

/// J^3([2] x [3]) — 27 elements.
inline Poset poset_J3() { return poset_J2().ideals_lattice(); }

// ---------------------------------------------------------------------------
// Isomorphism testing
// ---------------------------------------------------------------------------

namespace detail {

/// Iterative refinement of element classes by (rank, down-class multiset,
/// up-class multiset), using one id table shared by both posets so class ids
/// are comparable across them.
inline std::pair<std::vector<int>, std::vector<int>> refine_classes(const Poset& P, const Poset& Q) {
    auto init = [](const Poset& X) {
        std::vector<std::tuple<int, int, int>> sig;
        sig.reserve(static_cast<std::size_t>(X.size()));
        for (int x = 0; x < X.size(); ++x)
            sig.emplace_back(X.rank(x), static_cast<int>(X.down_covers(x).size()),
                             static_cast<int>(X.up_covers(x).size()));
        return sig;
    };
    std::map<std::tuple<int, int, int>, int> first_ids;
    auto assign_first = [&](const Poset& X) {
        std::vector<int> ids(static_cast<std::size_t>(X.size()));
        auto sig = init(X);
        for (int x = 0; x < X.size(); ++x) {
            auto [it, _] = first_ids.emplace(sig[static_cast<std::size_t>(x)], static_cast<int>(first_ids.size()));
            ids[static_cast<std::size_t>(x)] = it->second;
        }
        return ids;
    };
    std::vector<int> ip = assign_first(P), iq = assign_first(Q);

    for (int round = 0; round < P.size() + 1; ++round) {
        std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
        auto next = [&](const Poset& X, const std::vector<int>& cur) {
            std::vector<int> out(static_cast<std::size_t>(X.size()));
            for (int x = 0; x < X.size(); ++x) {
                std::vector<int> dn, up;
                for (int d : X.down_covers(x)) dn.push_back(cur[static_cast<std::size_t>(d)]);
                for (int u : X.up_covers(x)) up.push_back(cur[static_cast<std::size_t>(u)]);
                std::sort(dn.begin(), dn.end());
                std::sort(up.begin(), up.end());
                auto [it, _] = ids.emplace(std::make_tuple(cur[static_cast<std::size_t>(x)], std::move(dn), std::move(up)),
                                           static_cast<int>(ids.size()));
                out[static_cast<std::size_t>(x)] = it->second;
            }
            return out;
        };
        std::vector<int> np = next(P, ip), nq = next(Q, iq);
        bool stable = true;
        for (int x = 0; x < P.size() && stable; ++x)
            for (int y = x + 1; y < P.size() && stable; ++y)
                if ((ip[static_cast<std::size_t>(x)] == ip[static_cast<std::size_t>(y)]) !=
                    (np[static_cast<std::size_t>(x)] == np[static_cast<std::size_t>(y)]))
                    stable = false;
        ip = std::move(np);
        iq = std::move(nq);
        if (stable) break;
    }
    return {ip, iq};
}

inline bool extend_isomorphism(const Poset& P, const Poset& Q, const std::vector<int>& order, std::size_t k,
                               std::vector<int>& map, std::vector<char>& used,
                               const std::vector<int>& ip, const std::vector<int>& iq) {
    if (k == order.size()) return true;
    int x = order[k];
    for (int y = 0; y < Q.size(); ++y) {
        if (used[static_cast<std::size_t>(y)]) continue;
        if (iq[static_cast<std::size_t>(y)] != ip[static_cast<std::size_t>(x)]) continue;
        bool ok = true;
        for (int d : P.down_covers(x)) {
            int md = map[static_cast<std::size_t>(d)];
            if (md >= 0) {
                const auto& dq = Q.down_covers(y);
                if (std::find(dq.begin(), dq.end(), md) == dq.end()) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            for (int u : P.up_covers(x)) {
                int mu = map[static_cast<std::size_t>(u)];
                if (mu >= 0) {
                    const auto& uq = Q.up_covers(y);
                    if (std::find(uq.begin(), uq.end(), mu) == uq.end()) {
                        ok = false;
                        break;
                    }
                }
            }
        if (!ok) continue;
        map[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = 1;
        if (extend_isomorphism(P, Q, order, k + 1, map, used, ip, iq)) return true;
        map[static_cast<std::size_t>(x)] = -1;
        used[static_cast<std::size_t>(y)] = 0;
    }
    return false;
}

} // namespace detail

/// Returns a poset isomorphism P -> Q as an index mapping, or nullopt.
inline std::optional<std::vector<int>> are_isomorphic(const Poset& P, const Poset& Q) {
    if (P.size() != Q.size()) return std::nullopt;
    if (P.covers().size() != Q.covers().size()) return std::nullopt;
    auto [ip, iq] = detail::refine_classes(P, Q);
    {
        std::vector<int> sp = ip, sq = iq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return std::nullopt;
    }
    // Match rare classes first to prune the search.
    std::vector<int> freq(static_cast<std::size_t>(P.size()) + 1, 0);
    std::vector<int> class_count;
    {
        int mx = 0;
        for (int c : ip) mx = std::max(mx, c);
        class_count.assign(static_cast<std::size_t>(mx) + 1, 0);
        for (int c : ip) ++class_count[static_cast<std::size_t>(c)];
    }
    std::vector<int> order(static_cast<std::size_t>(P.size()));
    for (int x = 0; x < P.size(); ++x) order[static_cast<std::size_t>(x)] = x;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = class_count[static_cast<std::size_t>(ip[static_cast<std::size_t>(a)])];
        int cb = class_count[static_cast<std::size_t>(ip[static_cast<std::size_t>(b)])];
        return std::tie(ca, a) < std::tie(cb, b);
    });
    std::vector<int> map(static_cast<std::size_t>(P.size()), -1);
    std::vector<char> used(static_cast<std::size_t>(Q.size()), 0);
    if (!detail::extend_isomorphism(P, Q, order, 0, map, used, ip, iq)) return std::nullopt;
    // Final exactness check: covers must correspond one-to-one.
    for (auto [a, b] : P.covers()) {
        int ma = map[static_cast<std::size_t>(a)], mb = map[static_cast<std::size_t>(b)];
        const auto& uq = Q.up_covers(ma);
        if (std::find(uq.begin(), uq.end(), mb) == uq.end()) return std::nullopt;
    }
    return map;
}

} // namespace gradpos
