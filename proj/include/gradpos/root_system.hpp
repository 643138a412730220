#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradpos/common.hpp"

namespace gradpos {

/// A root is stored as its coefficient vector over the simple roots.
using RootVec = std::vector<int>;

inline int root_height(const RootVec& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

/// Order by (height, lexicographic coefficient vector).
inline bool root_less(const RootVec& a, const RootVec& b) {
    int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

/// Finite irreducible root system of type X_n, realized through its Cartan
/// matrix.  Convention: cartan(i, j) = <alpha_j, alpha_i^vee> with 1-based
/// simple-root indices on the public interface.
class RootSystem {
public:
    RootSystem(char family, int rank) : family_(family), rank_(rank) {
        build_cartan();
        build_positive_roots();
    }

    char family() const { return family_; }
    int rank() const { return rank_; }
    std::string type_name() const { return std::string(1, family_) + std::to_string(rank_); }

    /// <alpha_j, alpha_i^vee>, 1-based i, j.
    int cartan(int i, int j) const { return cartan_[idx(i)][idx(j)]; }

    /// Symmetrizer entry d_i (half the squared length of alpha_i), 1-based.
    int symmetrizer(int i) const { return sym_[idx(i)]; }

    const std::vector<RootVec>& positive_roots() const { return positive_; }

    bool is_positive_root(const RootVec& v) const { return index_.count(v) > 0; }

    RootVec simple_root(int i) const {
        RootVec v(static_cast<std::size_t>(rank_), 0);
        v[idx(i)] = 1;
        return v;
    }

    const RootVec& highest_root() const { return positive_.back(); }

    /// 2(a, b) / (b, b) for integer vectors in the root lattice; requires
    /// b != 0 and exact integrality of the result.
    int pairing(const RootVec& a, const RootVec& b) const {
        long long ab = bilinear(a, b), bb = bilinear(b, b);
        if (bb == 0) throw std::invalid_argument("pairing: second argument is zero");
        long long num = 2 * ab;
        if (num % bb != 0) throw std::domain_error("pairing: result is not an integer");
        return static_cast<int>(num / bb);
    }

    /// Reduced word (1-based letters) for the longest element of the standard
    /// parabolic subgroup generated by {s_j : j in J}; J uses 1-based indices.
    std::vector<int> longest_element_word(const std::set<int>& J) const {
        std::vector<int> js;
        for (int j : J) {
            if (j < 1 || j > rank_) throw std::invalid_argument("longest_element_word: index out of range");
            js.push_back(idx(j));
        }
        std::sort(js.begin(), js.end());
        // img[l] = current image of alpha_l under the word built so far.
        std::vector<RootVec> img;
        for (int l = 0; l < rank_; ++l) {
            RootVec e(static_cast<std::size_t>(rank_), 0);
            e[static_cast<std::size_t>(l)] = 1;
            img.push_back(std::move(e));
        }
        std::vector<int> word;
        for (;;) {
            int pick = -1;
            for (int j : js) {
                const RootVec& w = img[static_cast<std::size_t>(j)];
                bool nonneg = std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
                if (nonneg) {
                    pick = j;
                    break;
                }
            }
            if (pick < 0) break;
            word.push_back(pick + 1);
            // Append s_pick on the right: img[l] -= cartan_[pick][l] * img[pick].
            RootVec ipick = img[static_cast<std::size_t>(pick)];
            for (int l = 0; l < rank_; ++l) {
                int c = cartan_[static_cast<std::size_t>(pick)][static_cast<std::size_t>(l)];
                if (c == 0) continue;
                RootVec& t = img[static_cast<std::size_t>(l)];
                for (int k = 0; k < rank_; ++k) t[static_cast<std::size_t>(k)] -= c * ipick[static_cast<std::size_t>(k)];
            }
        }
        return word;
    }

    /// Applies the word s_{l_1} ... s_{l_m} (as a composed function, rightmost
    /// letter acting first) to a vector in the root lattice.
    RootVec apply_word(const std::vector<int>& word, RootVec v) const {
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            int j = idx(*it);
            long long c = 0;
            for (int k = 0; k < rank_; ++k)
                c += static_cast<long long>(cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) *
                     v[static_cast<std::size_t>(k)];
            v[static_cast<std::size_t>(j)] -= static_cast<int>(c);
        }
        return v;
    }

private:
    std::size_t idx(int i) const {
        if (i < 1 || i > rank_) throw std::invalid_argument("simple-root index out of range");
        return static_cast<std::size_t>(i - 1);
    }

    long long bilinear(const RootVec& a, const RootVec& b) const {
        if (a.size() != static_cast<std::size_t>(rank_) || b.size() != static_cast<std::size_t>(rank_))
            throw std::invalid_argument("vector length does not match rank");
        // (alpha_i, alpha_j) = d_i * cartan_[i][j]; the matrix is symmetric.
        long long s = 0;
        for (int i = 0; i < rank_; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long long>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] *
                     sym_[static_cast<std::size_t>(i)] * cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return s;
    }

    void build_cartan() {
        int n = rank_;
        auto bad = [&]() {
            throw std::invalid_argument("invalid type " + std::string(1, family_) + std::to_string(rank_));
        };
        switch (family_) {
            case 'A': if (n < 1) bad(); break;
            case 'B': if (n < 2) bad(); break;
            case 'C': if (n < 3) bad(); break;
            case 'D': if (n < 4) bad(); break;
            case 'E': if (n < 6 || n > 8) bad(); break;
            case 'F': if (n != 4) bad(); break;
            case 'G': if (n != 2) bad(); break;
            default: bad();
        }
        cartan_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        sym_.assign(static_cast<std::size_t>(n), 1);
        for (int i = 0; i < n; ++i) cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        auto chain = [&](int upto) {
            for (int i = 0; i + 1 < upto; ++i) {
                cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
                cartan_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
            }
        };
        switch (family_) {
            case 'A':
                chain(n);
                break;
            case 'B':
                chain(n);
                cartan_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
                for (int i = 0; i < n - 1; ++i) sym_[static_cast<std::size_t>(i)] = 2;
                break;
            case 'C':
                chain(n);
                cartan_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
                sym_[static_cast<std::size_t>(n - 1)] = 2;
                break;
            case 'D':
                chain(n - 1);
                cartan_[static_cast<std::size_t>(n - 3)][static_cast<std::size_t>(n - 1)] = -1;
                cartan_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 3)] = -1;
                break;
            case 'E': {
                auto edge = [&](int a, int b) {
                    cartan_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
                    cartan_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
                };
                edge(1, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(2, 4);
                if (n >= 7) edge(6, 7);
                if (n >= 8) edge(7, 8);
                break;
            }
            case 'F':
                cartan_ = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
                sym_ = {1, 1, 2, 2};
                break;
            case 'G':
                cartan_ = {{2, -3}, {-1, 2}};
                sym_ = {1, 3};
                break;
        }
    }

    void build_positive_roots() {
        int n = rank_;
        std::set<RootVec> roots;
        std::vector<RootVec> frontier;
        for (int i = 0; i < n; ++i) {
            RootVec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            roots.insert(e);
            frontier.push_back(std::move(e));
        }
        while (!frontier.empty()) {
            std::vector<RootVec> next;
            for (const RootVec& v : frontier) {
                for (int j = 0; j < n; ++j) {
                    // Root-string rule: v + alpha_j is a root iff
                    // q = p - <v, alpha_j^vee> > 0, where p is the number of
                    // steps down the alpha_j-string through v.
                    long long pair = 0;
                    for (int k = 0; k < n; ++k)
                        pair += static_cast<long long>(cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) *
                                v[static_cast<std::size_t>(k)];
                    int p = 0;
                    RootVec down = v;
                    for (;;) {
                        down[static_cast<std::size_t>(j)] -= 1;
                        bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
                        if (!nonneg || root_height(down) == 0 || !roots.count(down)) break;
                        ++p;
                    }
                    if (p - pair > 0) {
                        RootVec up = v;
                        up[static_cast<std::size_t>(j)] += 1;
                        if (roots.insert(up).second) next.push_back(std::move(up));
                    }
                }
            }
            frontier = std::move(next);
        }
        positive_.assign(roots.begin(), roots.end());
        std::sort(positive_.begin(), positive_.end(), root_less);
        for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
    }

    char family_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> sym_;
    std::vector<RootVec> positive_;
    std::map<RootVec, int> index_;
};

/// Parses a type name like "E7" or "a3".
inline std::pair<char, int> parse_type_name(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("malformed type name '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (fam < 'A' || fam > 'G')
        throw std::invalid_argument("unknown family in type name '" + s + "'");
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("malformed type name '" + s + "'");
    int rank = std::stoi(s.substr(1));
    return {fam, rank};
}

} // namespace gradpos
