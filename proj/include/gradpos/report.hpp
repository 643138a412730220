#pragma once

// Rendering of weight-poset instances and full analysis reports.
//
// Three output formats are supported for a poset: a human-readable text
// listing, Graphviz DOT, and JSON.  The `report` command produces a single
// JSON document with the polynomial, orbit, sieving and involution data for
// one instance.  All output is deterministic: element order is the
// construction order of the weight poset and map keys are emitted in
// insertion order.

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gradpos/gradings.hpp"
#include "gradpos/involutions.hpp"
#include "gradpos/polynomials.hpp"
#include "gradpos/poset.hpp"
#include "gradpos/root_system.hpp"
#include "gradpos/rowmotion.hpp"

namespace gradpos {

using json = nlohmann::ordered_json;

inline std::string root_to_string(const RootVec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    s += ")";
    return s;
}

inline std::string instance_label(const RootSystem& rs, const GradingSpec& g) {
    return std::string(1, rs.family()) + std::to_string(rs.rank()) + " " + g.to_string();
}

// ---------------------------------------------------------------------------
// Poset rendering
// ---------------------------------------------------------------------------

inline std::string poset_text(const RootSystem& rs, const GradingSpec& g, const WeightPoset& wp) {
    const Poset& P = wp.poset;
    std::ostringstream out;
    out << "instance: " << instance_label(rs, g) << "\n";
    out << "size: " << P.size() << "\n";
    out << "graded: " << (P.is_graded() ? "yes" : "no") << "\n";
    out << "height: " << P.height() << "\n";
    out << "elements:\n";
    for (int a = 0; a < P.size(); ++a) {
        out << "  " << a << ": " << root_to_string(wp.roots[static_cast<std::size_t>(a)])
            << "  rank " << P.rank(a) << "\n";
    }
    out << "covers:\n";
    for (const auto& [a, b] : P.covers()) {
        out << "  " << a << " < " << b << "\n";
    }
    return out.str();
}

inline std::string poset_dot(const RootSystem& rs, const GradingSpec& g, const WeightPoset& wp) {
    const Poset& P = wp.poset;
    std::ostringstream out;
    out << "digraph \"" << instance_label(rs, g) << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (int a = 0; a < P.size(); ++a) {
        out << "  n" << a << " [label=\"" << root_to_string(wp.roots[static_cast<std::size_t>(a)])
            << "\"];\n";
    }
    for (const auto& [a, b] : P.covers()) {
        out << "  n" << a << " -> n" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline json instance_json(const RootSystem& rs, const GradingSpec& g, const WeightPoset& wp) {
    json j;
    j["type"] = std::string(1, rs.family()) + std::to_string(rs.rank());
    j["family"] = std::string(1, rs.family());
    j["rank"] = rs.rank();
    j["grading"] = g.to_string();
    if (g.kind == GradingSpec::Kind::OneStandard) j["i"] = g.i;
    j["size"] = wp.poset.size();
    return j;
}

inline json poset_json(const RootSystem& rs, const GradingSpec& g, const WeightPoset& wp) {
    const Poset& P = wp.poset;
    json j;
    j["instance"] = instance_json(rs, g, wp);
    j["graded"] = P.is_graded();
    j["height"] = P.height();
    json elems = json::array();
    for (int a = 0; a < P.size(); ++a) {
        json e;
        e["index"] = a;
        e["root"] = wp.roots[static_cast<std::size_t>(a)];
        e["rank"] = P.rank(a);
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    json covers = json::array();
    for (const auto& [a, b] : P.covers()) covers.push_back(json::array({a, b}));
    j["covers"] = std::move(covers);
    return j;
}

// ---------------------------------------------------------------------------
// Full analysis report
// ---------------------------------------------------------------------------

inline json poly_json(const Poly& p) {
    return json(p.coeff);
}

inline std::string orbit_summary_string(const OrbitReport& orbits) {
    // "size x count" terms, largest size first.
    std::map<long long, long long> mult;
    for (const auto& orb : orbits.orbits) ++mult[static_cast<long long>(orb.size())];
    std::string s;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += std::to_string(it->first) + " x " + std::to_string(it->second);
    }
    return s;
}

inline json full_report(const RootSystem& rs, const GradingSpec& g) {
    WeightPoset wp = delta1_of(rs, g);
    const Poset& P = wp.poset;

    json j;
    json jinst = instance_json(rs, g, wp);

    InvariantsReport inv = invariants_report(rs);
    json jinv;
    jinv["coxeter_number"] = inv.coxeter_number;
    jinv["dual_coxeter_number"] = inv.dual_coxeter_number;
    jinv["num_long_simple"] = inv.num_long_simple;
    jinv["extra_special_size"] = inv.extra_special_size;
    jinst["invariants"] = std::move(jinv);

    json levels = json::array();
    for (long long lvl : P.rank_levels()) levels.push_back(lvl);
    jinst["rank_levels"] = std::move(levels);
    j["instance"] = std::move(jinst);

    // Polynomials.
    Poly m = m_polynomial(P);
    Poly n = n_polynomial(P);
    RationalProduct km = km_product(P);
    QuotientResult qr = expand_quotient(km);
    bool matches = qr.is_polynomial && qr.quotient == m;
    json jp;
    jp["m"] = poly_json(m);
    jp["n"] = poly_json(n);
    jp["m_at_one"] = m.value_at_one();
    jp["m_at_minus_one"] = m.value_at_minus_one();
    jp["n_palindromic"] = n.palindromic();
    jp["n_monic"] = (n.leading() == 1);
    json jkm;
    jkm["numerator_exponents"] = km.numerator;
    jkm["denominator_exponents"] = km.denominator;
    jkm["is_polynomial"] = qr.is_polynomial;
    if (qr.is_polynomial) {
        jkm["expansion"] = poly_json(qr.quotient);
    } else {
        jkm["expansion"] = nullptr;
        jkm["witness_order"] = qr.witness_order;
    }
    jkm["matches_m"] = matches;
    jp["rank_product"] = std::move(jkm);
    j["polynomials"] = std::move(jp);

    // Orbits of the Panyushev complement on ideals.
    OrbitReport orbits = all_orbits(P, max_ideals_bound());
    json jo;
    jo["count"] = static_cast<long long>(orbits.orbits.size());
    json sizes = json::array();
    for (const auto& orb : orbits.orbits) sizes.push_back(static_cast<long long>(orb.size()));
    jo["sizes"] = std::move(sizes);
    jo["summary"] = orbit_summary_string(orbits);
    j["orbits"] = std::move(jo);

    // Cyclic sieving.
    CSPReport csp = csp_check(P);
    json jc;
    jc["order"] = csp.order;
    jc["m_fold"] = csp.m_fold;
    jc["orbit_side"] = csp.orbit_side;
    jc["holds"] = csp.holds;
    j["csp"] = std::move(jc);

    // Canonical order-reversing involution and self-complementary ideals.
    json ji;
    if (g.kind == GradingSpec::Kind::OneStandard) {
        Permutation f = w0i_involution(rs, g.i, wp);
        ji["permutation"] = f;
        std::vector<int> fixed = fixed_points(f);
        ji["fixed_points"] = fixed;
        json froots = json::array();
        for (int a : fixed) froots.push_back(wp.roots[static_cast<std::size_t>(a)]);
        ji["fixed_roots"] = std::move(froots);
        ji["self_complementary"] = count_self_complementary(P, f, max_ideals_bound());
        j["involution"] = std::move(ji);
    } else {
        j["involution"] = nullptr;
    }
    return j;
}

}  // namespace gradpos
