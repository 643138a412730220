#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gradpos/poly.hpp"
#include "gradpos/poset.hpp"

namespace gradpos {

/// M_P(t): generating function of order ideals by size.
inline Poly m_polynomial(const Poset& P, std::size_t bound = max_ideals_bound()) {
    return Poly(P.ideal_counts_by_size(bound));
}

/// N_P(t): generating function of antichains by size.
inline Poly n_polynomial(const Poset& P, std::size_t bound = max_ideals_bound()) {
    return Poly(P.antichain_counts_by_size(bound));
}

/// The rank-hook product  prod_x (1 - t^{r(x)+1}) / (1 - t^{r(x)})  attached
/// to a graded poset.  Requires gradedness.
inline RationalProduct km_product(const Poset& P) {
    if (!P.is_graded()) throw std::logic_error("km_product requires a graded poset");
    RationalProduct rp;
    for (int x = 0; x < P.size(); ++x) {
        rp.numerator.push_back(P.rank(x) + 1);
        rp.denominator.push_back(P.rank(x));
    }
    std::sort(rp.numerator.begin(), rp.numerator.end());
    std::sort(rp.denominator.begin(), rp.denominator.end());
    return rp;
}

/// Verdict of comparing M_P with the expansion of the rank-hook product.
enum class ProductVerdict {
    Matches,       // quotient is a polynomial and equals M_P
    Differs,       // quotient is a polynomial but differs from M_P
    NotPolynomial, // quotient is not a polynomial
};

struct PleasantReport {
    ProductVerdict verdict = ProductVerdict::NotPolynomial;
    Poly m;              // M_P(t)
    QuotientResult km;   // expansion outcome of the rank-hook product
};

inline PleasantReport pleasant_report(const Poset& P, std::size_t bound = max_ideals_bound()) {
    PleasantReport rep;
    rep.km = expand_quotient(km_product(P));
    if (!rep.km.is_polynomial) {
        rep.verdict = ProductVerdict::NotPolynomial;
        rep.m = m_polynomial(P, bound);
        return rep;
    }
    rep.m = m_polynomial(P, bound);
    rep.verdict = (rep.m == rep.km.quotient) ? ProductVerdict::Matches : ProductVerdict::Differs;
    return rep;
}

inline bool is_pleasant(const Poset& P, std::size_t bound = max_ideals_bound()) {
    return pleasant_report(P, bound).verdict == ProductVerdict::Matches;
}

// ---------------------------------------------------------------------------
// Exact products of small-integer ratios via prime-exponent accounting
// ---------------------------------------------------------------------------

namespace detail {

inline void add_prime_exponents(std::map<int, long long>& exp, int value, long long sign) {
    for (int p = 2; p * p <= value; ++p)
        while (value % p == 0) {
            exp[p] += sign;
            value /= p;
        }
    if (value > 1) exp[value] += sign;
}

} // namespace detail

/// Exact value of prod(num) / prod(den) for positive integer factor lists;
/// nullopt when the ratio is not an integer, resource_error on overflow.
inline std::optional<long long> exact_integer_ratio(const std::vector<int>& num, const std::vector<int>& den) {
    std::map<int, long long> exp;
    for (int v : num) detail::add_prime_exponents(exp, v, +1);
    for (int v : den) detail::add_prime_exponents(exp, v, -1);
    __int128 r = 1;
    constexpr __int128 lim = static_cast<__int128>(1) << 62;
    for (auto [p, e] : exp) {
        if (e < 0) return std::nullopt;
        for (long long k = 0; k < e; ++k) {
            r *= p;
            if (r >= lim) throw resource_error("integer overflow in exact ratio");
        }
    }
    return static_cast<long long>(r);
}

/// Value of the rank-hook product at t = 1: prod (r(x)+1)/r(x).
/// nullopt when the product is not an integer.
inline std::optional<long long> rank_product_at_one(const Poset& P) {
    std::vector<int> num, den;
    for (int x = 0; x < P.size(); ++x) {
        num.push_back(P.rank(x) + 1);
        den.push_back(P.rank(x));
    }
    return exact_integer_ratio(num, den);
}

/// Signed rank statistic predicting M_P(-1): with E = multiset of even ranks
/// and F = multiset of odd ranks, the value is prod_{f in F} (f+1) / prod_{e
/// in E} e when |E| = |F|, and 0 otherwise.  nullopt when |E| = |F| but the
/// ratio is not an integer.
inline std::optional<long long> rank_product_at_minus_one(const Poset& P) {
    std::vector<int> evens, odds;
    for (int x = 0; x < P.size(); ++x) {
        if (P.rank(x) % 2 == 0) evens.push_back(P.rank(x));
        else odds.push_back(P.rank(x));
    }
    if (evens.size() != odds.size()) return 0;
    std::vector<int> num;
    for (int f : odds) num.push_back(f + 1);
    return exact_integer_ratio(num, evens);
}

// ---------------------------------------------------------------------------
// Multichain ideal counts: M_{[m] x P} without building the product poset
// ---------------------------------------------------------------------------

/// Ideals of [m] x P are m-tuples of nested ideals of P, so
/// M_{[m] x P}(t) = sum over weakly decreasing chains I_1 >= ... >= I_m of
/// t^{|I_1| + ... + |I_m|}.  The layer recursion below runs over J(P) itself:
/// f_1(I) = t^|I|, f_{j+1}(I) = t^|I| * sum_{I' subseteq I} f_j(I').
class MultichainCounter {
public:
    explicit MultichainCounter(const Poset& P, std::size_t bound = max_ideals_bound()) {
        ideals_ = P.ideals(bound);
        sizes_.reserve(ideals_.size());
        for (const auto& I : ideals_) sizes_.push_back(I.count());
        subs_.resize(ideals_.size());
        for (std::size_t a = 0; a < ideals_.size(); ++a)
            for (std::size_t b = 0; b < ideals_.size(); ++b)
                if (ideals_[b].is_subset_of(ideals_[a])) subs_[a].push_back(b);
        layer_.assign(ideals_.size(), Poly::one());
        for (std::size_t a = 0; a < ideals_.size(); ++a) layer_[a] = t_power(sizes_[a]);
        m_ = 1;
    }

    int current_m() const { return m_; }

    /// Advances the recursion from m to m+1 layers.
    void advance() {
        constexpr long long guard = 1LL << 62;
        std::vector<Poly> next(ideals_.size());
        std::vector<long long> acc;
        for (std::size_t a = 0; a < ideals_.size(); ++a) {
            std::size_t need = 0;
            for (std::size_t b : subs_[a]) need = std::max(need, layer_[b].coeff.size());
            acc.assign(need, 0);
            for (std::size_t b : subs_[a]) {
                const auto& c = layer_[b].coeff;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if ((acc[k] += c[k]) >= guard) throw resource_error("integer overflow in multichain count");
            }
            std::vector<long long> shifted(sizes_[a] + need, 0);
            for (std::size_t k = 0; k < need; ++k) shifted[sizes_[a] + k] = acc[k];
            next[a] = Poly(std::move(shifted));
        }
        layer_ = std::move(next);
        ++m_;
    }

    /// M_{[m] x P}(t) for the current m.
    Poly current_total() const {
        constexpr long long guard = 1LL << 62;
        std::vector<long long> acc;
        for (const auto& f : layer_) {
            if (f.coeff.size() > acc.size()) acc.resize(f.coeff.size(), 0);
            for (std::size_t k = 0; k < f.coeff.size(); ++k)
                if ((acc[k] += f.coeff[k]) >= guard) throw resource_error("integer overflow in multichain count");
        }
        return Poly(std::move(acc));
    }

private:
    static Poly t_power(std::size_t k) {
        std::vector<long long> c(k + 1, 0);
        c[k] = 1;
        return Poly(std::move(c));
    }

    std::vector<DynBitset> ideals_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<std::size_t>> subs_;
    std::vector<Poly> layer_;
    int m_ = 1;
};

/// M of the product [m] x P.
inline Poly m_polynomial_of_chain_product(int m, const Poset& P, std::size_t bound = max_ideals_bound()) {
    if (m < 1) throw std::invalid_argument("chain length must be at least 1");
    MultichainCounter mc(P, bound);
    while (mc.current_m() < m) mc.advance();
    return mc.current_total();
}

/// Rank-hook product of [m] x P, computed from the rank multiset of P.
inline RationalProduct km_product_of_chain_product(int m, const Poset& P) {
    if (!P.is_graded()) throw std::logic_error("km_product requires a graded poset");
    RationalProduct rp;
    for (int x = 0; x < P.size(); ++x)
        for (int u = 0; u < m; ++u) {
            rp.numerator.push_back(P.rank(x) + u + 1);
            rp.denominator.push_back(P.rank(x) + u);
        }
    std::sort(rp.numerator.begin(), rp.numerator.end());
    std::sort(rp.denominator.begin(), rp.denominator.end());
    return rp;
}

/// Verdicts for [m] x P across m = 1..m_max, sharing one layer recursion.
inline std::vector<ProductVerdict> gaussian_scan(const Poset& P, int m_max, std::size_t bound = max_ideals_bound()) {
    std::vector<ProductVerdict> out;
    MultichainCounter mc(P, bound);
    for (int m = 1; m <= m_max; ++m) {
        if (m > 1) mc.advance();
        QuotientResult q = expand_quotient(km_product_of_chain_product(m, P));
        if (!q.is_polynomial) {
            out.push_back(ProductVerdict::NotPolynomial);
            continue;
        }
        out.push_back(q.quotient == mc.current_total() ? ProductVerdict::Matches : ProductVerdict::Differs);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form antichain generating functions for the catalog families
// ---------------------------------------------------------------------------

/// Binomial coefficient with out-of-range arguments evaluating to 0.
inline long long binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    __int128 r = 1;
    b = std::min(b, a - b);
    for (int k = 1; k <= b; ++k) {
        r = r * (a - b + k) / k;
        if (r >= (static_cast<__int128>(1) << 62)) throw resource_error("binomial overflow");
    }
    return static_cast<long long>(r);
}

/// N_{[n] x [m]}(t) = sum_i C(n, i) C(m, i) t^i.
inline Poly n_formula_grid(int n, int m) {
    std::vector<long long> c;
    for (int i = 0; i <= std::min(n, m); ++i) c.push_back(binomial(n, i) * binomial(m, i));
    return Poly(std::move(c));
}

/// N_{H_n}(t) = sum_i C(n+1, 2i) t^i.
inline Poly n_formula_H(int n) {
    std::vector<long long> c;
    for (int i = 0; 2 * i <= n + 1; ++i) c.push_back(binomial(n + 1, 2 * i));
    return Poly(std::move(c));
}

/// N_{K_n}(t) = 1 + (2n+2) t + t^2.
inline Poly n_formula_K(int n) { return Poly({1, 2 * n + 2, 1}); }

/// Coefficient A_{n,m}(i) of the antichain generating function of [m] x K_n:
/// C(2n,i)C(m,i) + 2C(2n,i-1)C(m,i) + C(2n,i-2)C(m,i-1) + 2C(2n,i-2)C(m,i).
inline long long antichain_coefficient_mKn(int n, int m, int i) {
    return binomial(2 * n, i) * binomial(m, i) + 2 * binomial(2 * n, i - 1) * binomial(m, i) +
           binomial(2 * n, i - 2) * binomial(m, i - 1) + 2 * binomial(2 * n, i - 2) * binomial(m, i);
}

/// N_{[m] x K_n}(t) = sum_{i=0}^{m+1} A_{n,m}(i) t^i.
inline Poly n_formula_mKn(int n, int m) {
    std::vector<long long> c;
    for (int i = 0; i <= m + 1; ++i) c.push_back(antichain_coefficient_mKn(n, m, i));
    return Poly(std::move(c));
}

} // namespace gradpos
