#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gradpos/common.hpp"

namespace gradpos {

/// Dense univariate polynomial with exact 64-bit integer coefficients.
/// coeff[k] is the coefficient of t^k; the representation is trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
struct Poly {
    std::vector<long long> coeff;

    Poly() = default;
    explicit Poly(std::vector<long long> c) : coeff(std::move(c)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{{1}}; }

    /// t-analogue [n]_t = 1 + t + ... + t^{n-1}.
    static Poly q_int(int n) {
        return Poly(std::vector<long long>(static_cast<std::size_t>(n), 1));
    }

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }

    bool is_zero() const { return coeff.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    long long at(std::size_t k) const { return k < coeff.size() ? coeff[k] : 0; }

    long long leading() const { return coeff.empty() ? 0 : coeff.back(); }

    bool operator==(const Poly& o) const { return coeff == o.coeff; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    bool palindromic() const {
        if (coeff.empty()) return true;
        std::size_t d = coeff.size() - 1;
        for (std::size_t k = 0; 2 * k <= d; ++k)
            if (coeff[k] != coeff[d - k]) return false;
        return true;
    }

    long long value_at_one() const {
        __int128 s = 0;
        for (auto c : coeff) s += c;
        return narrow(s, "polynomial value at 1");
    }

    long long value_at_minus_one() const {
        __int128 s = 0;
        for (std::size_t k = 0; k < coeff.size(); ++k)
            s += (k & 1) ? -static_cast<__int128>(coeff[k]) : static_cast<__int128>(coeff[k]);
        return narrow(s, "polynomial value at -1");
    }

    Poly operator+(const Poly& o) const {
        std::vector<long long> c(std::max(coeff.size(), o.coeff.size()), 0);
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = checked_add(at(k), o.at(k));
        return Poly(std::move(c));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<__int128> acc(coeff.size() + o.coeff.size() - 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeff.size(); ++j)
                acc[i + j] += static_cast<__int128>(coeff[i]) * o.coeff[j];
        }
        std::vector<long long> c(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) c[k] = narrow(acc[k], "polynomial product");
        return Poly(std::move(c));
    }

    std::string to_string() const {
        if (coeff.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            if (coeff[k] == 0) continue;
            if (!s.empty()) s += coeff[k] > 0 ? " + " : " - ";
            else if (coeff[k] < 0) s += "-";
            long long a = coeff[k] > 0 ? coeff[k] : -coeff[k];
            bool unit = (a == 1 && k > 0);
            if (!unit) s += std::to_string(a);
            if (k == 1) s += unit ? "t" : "*t";
            else if (k > 1) s += (unit ? "t^" : "*t^") + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

    static long long narrow(__int128 v, const char* what) {
        constexpr __int128 lim = static_cast<__int128>(1) << 62;
        if (v >= lim || v <= -lim)
            throw resource_error(std::string("integer overflow in ") + what);
        return static_cast<long long>(v);
    }

    static long long checked_add(long long a, long long b) {
        return narrow(static_cast<__int128>(a) + b, "polynomial sum");
    }
};

/// Shape classification used in reports and verification.
struct PolyClassification {
    bool palindromic = false;
    long long leading_coefficient = 0;
    long long value_at_one = 0;
    long long value_at_minus_one = 0;
};

inline PolyClassification classify_polynomial(const Poly& p) {
    return {p.palindromic(), p.leading(), p.value_at_one(), p.value_at_minus_one()};
}

/// A formal product  prod_f (1 - t^f) / prod_e (1 - t^e)  given by exponent
/// multisets (each kept sorted ascending).
struct RationalProduct {
    std::vector<int> numerator;
    std::vector<int> denominator;

    bool operator==(const RationalProduct& o) const {
        return numerator == o.numerator && denominator == o.denominator;
    }
};

/// Outcome of expanding a RationalProduct.
struct QuotientResult {
    bool is_polynomial = false;
    /// When !is_polynomial: smallest order d whose cyclotomic factor has
    /// negative multiplicity (a witness to non-polynomiality).
    int witness_order = 0;
    /// When is_polynomial: the exact expansion.
    Poly quotient;
};

namespace detail {

/// Exact internal polynomial arithmetic over __int128 for cyclotomic work.
using I128Poly = std::vector<__int128>;

inline I128Poly i128_mul(const I128Poly& a, const I128Poly& b) {
    I128Poly r(a.size() + b.size() - 1, 0);
    constexpr __int128 lim = static_cast<__int128>(1) << 100;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
            if (r[i + j] >= lim || r[i + j] <= -lim)
                throw resource_error("integer overflow in product expansion");
        }
    }
    return r;
}

/// Exact division by a monic divisor; quotient is known to be exact.
inline I128Poly i128_div_exact(const I128Poly& num, const I128Poly& den) {
    I128Poly rem = num;
    I128Poly q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        __int128 c = rem[k + den.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
    return q;
}

/// Cyclotomic polynomial Phi_d(t) for d >= 2, computed by exact division of
/// t^d - 1 by Phi_e for all proper divisors e (with Phi_1 = t - 1).
inline const I128Poly& cyclotomic(int d) {
    static std::map<int, I128Poly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    I128Poly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1; // t^d - 1
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        if (e == 1) {
            p = i128_div_exact(p, I128Poly{-1, 1});
        } else {
            p = i128_div_exact(p, cyclotomic(e));
        }
    }
    return cache.emplace(d, std::move(p)).first->second;
}

} // namespace detail

/// Expands prod_f (1 - t^f) / prod_e (1 - t^e) exactly.  Uses the cyclotomic
/// factorization 1 - t^a = prod_{d | a} Psi_d with Psi_1 = 1 - t and
/// Psi_d = Phi_d for d >= 2: the quotient is a polynomial iff every Psi_d ends
/// up with nonnegative multiplicity, in which case the expansion is the
/// product of the surviving factors.
inline QuotientResult expand_quotient(const RationalProduct& rp) {
    int max_exp = 0;
    for (int f : rp.numerator) max_exp = std::max(max_exp, f);
    for (int e : rp.denominator) max_exp = std::max(max_exp, e);

    std::vector<int> mult(static_cast<std::size_t>(max_exp) + 1, 0);
    for (int f : rp.numerator)
        for (int d = 1; d <= f; ++d)
            if (f % d == 0) ++mult[static_cast<std::size_t>(d)];
    for (int e : rp.denominator)
        for (int d = 1; d <= e; ++d)
            if (e % d == 0) --mult[static_cast<std::size_t>(d)];

    for (int d = 1; d <= max_exp; ++d)
        if (mult[static_cast<std::size_t>(d)] < 0) return {false, d, Poly::zero()};

    detail::I128Poly prod{1};
    for (int d = 1; d <= max_exp; ++d) {
        for (int k = 0; k < mult[static_cast<std::size_t>(d)]; ++k) {
            if (d == 1) {
                prod = detail::i128_mul(prod, detail::I128Poly{1, -1}); // 1 - t
            } else {
                prod = detail::i128_mul(prod, detail::cyclotomic(d));
            }
        }
    }
    std::vector<long long> c(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k)
        c[k] = Poly::narrow(prod[k], "quotient expansion");
    return {true, 0, Poly(std::move(c))};
}

} // namespace gradpos
