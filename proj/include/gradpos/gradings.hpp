#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradpos/poset.hpp"
#include "gradpos/root_system.hpp"

namespace gradpos {

/// Designates a Z-grading: either the 1-standard grading attached to a simple
/// root alpha_i (degree = coefficient of alpha_i), or the extra-special
/// grading attached to the highest root (degree = pairing with theta-vee).
struct GradingSpec {
    enum class Kind { OneStandard, ExtraSpecial };
    Kind kind = Kind::OneStandard;
    int i = 1; // 1-based simple-root index; meaningful for OneStandard only.

    static GradingSpec one_standard(int i) { return {Kind::OneStandard, i}; }
    static GradingSpec extra_special() { return {Kind::ExtraSpecial, 0}; }

    /// Accepts "standard:<i>" (or a bare integer) and "extra-special".
    static GradingSpec parse(const std::string& s) {
        if (s == "extra-special" || s == "extraspecial" || s == "es")
            return extra_special();
        std::string body = s;
        const std::string prefix = "standard:";
        if (body.rfind(prefix, 0) == 0) body = body.substr(prefix.size());
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("malformed grading '" + s + "'");
        return one_standard(std::stoi(body));
    }

    std::string to_string() const {
        return kind == Kind::ExtraSpecial ? "extra-special" : "standard:" + std::to_string(i);
    }
};

/// The degree-one weight poset of a grading: poset element k corresponds to
/// roots[k], ordered by coefficientwise comparison of root vectors.  Elements
/// are listed by (height, lexicographic) order of their roots.
struct WeightPoset {
    Poset poset;
    std::vector<RootVec> roots;
};

namespace detail {

inline bool coeffwise_leq(const RootVec& a, const RootVec& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

inline WeightPoset make_weight_poset(const RootSystem& rs, std::vector<RootVec> roots) {
    int n = static_cast<int>(roots.size());
    Poset P = Poset::from_leq(n, [&](int a, int b) {
        return coeffwise_leq(roots[static_cast<std::size_t>(a)], roots[static_cast<std::size_t>(b)]);
    });
    // Consistency: every cover step is the addition of one simple root.
    for (auto [a, b] : P.covers()) {
        int diff_height = root_height(roots[static_cast<std::size_t>(b)]) - root_height(roots[static_cast<std::size_t>(a)]);
        RootVec d = roots[static_cast<std::size_t>(b)];
        for (std::size_t k = 0; k < d.size(); ++k) d[k] -= roots[static_cast<std::size_t>(a)][k];
        if (diff_height != 1 || !rs.is_positive_root(d))
            throw std::logic_error("weight poset cover is not a simple-root step");
    }
    if (!P.is_graded()) throw std::logic_error("weight poset is not graded");
    return {std::move(P), std::move(roots)};
}

} // namespace detail

/// Delta(1) for the 1-standard grading at alpha_i: all positive roots whose
/// alpha_i-coefficient equals 1.
inline WeightPoset delta1(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("simple-root index out of range");
    std::vector<RootVec> roots;
    for (const RootVec& v : rs.positive_roots())
        if (v[static_cast<std::size_t>(i - 1)] == 1) roots.push_back(v);
    return detail::make_weight_poset(rs, std::move(roots));
}

/// Delta(1) for the extra-special grading: all positive roots whose pairing
/// with the highest coroot equals 1.
inline WeightPoset delta1_extra_special(const RootSystem& rs) {
    const RootVec& theta = rs.highest_root();
    std::vector<RootVec> roots;
    for (const RootVec& v : rs.positive_roots())
        if (rs.pairing(v, theta) == 1) roots.push_back(v);
    return detail::make_weight_poset(rs, std::move(roots));
}

inline WeightPoset delta1_of(const RootSystem& rs, const GradingSpec& g) {
    return g.kind == GradingSpec::Kind::ExtraSpecial ? delta1_extra_special(rs) : delta1(rs, g.i);
}

/// Scalar invariants of the ambient root system.
struct InvariantsReport {
    int coxeter_number = 0;        // h = height(theta) + 1
    int dual_coxeter_number = 0;   // h* = 1 + sum_i c_i d_i / d_max
    int num_long_simple = 0;       // number of simple roots of maximal length
    int extra_special_size = 0;    // |Delta(1)| for the extra-special grading
};

inline InvariantsReport invariants_report(const RootSystem& rs) {
    InvariantsReport r;
    const RootVec& theta = rs.highest_root();
    r.coxeter_number = root_height(theta) + 1;
    int dmax = 0;
    for (int i = 1; i <= rs.rank(); ++i) dmax = std::max(dmax, rs.symmetrizer(i));
    long long s = 0;
    for (int i = 1; i <= rs.rank(); ++i)
        s += static_cast<long long>(theta[static_cast<std::size_t>(i - 1)]) * rs.symmetrizer(i);
    if (s % dmax != 0) throw std::logic_error("dual Coxeter number is not an integer");
    r.dual_coxeter_number = 1 + static_cast<int>(s / dmax);
    for (int i = 1; i <= rs.rank(); ++i)
        if (rs.symmetrizer(i) == dmax) ++r.num_long_simple;
    for (const RootVec& v : rs.positive_roots())
        if (rs.pairing(v, theta) == 1) ++r.extra_special_size;
    return r;
}

} // namespace gradpos
