#pragma once

// Frozen reference values for the verification suite.
//
// Every number in this file was computed independently of the library code
// (by a separate implementation) and is used to cross-check the C++
// implementation.  The verification driver compares live computations
// against these tables; a mismatch indicates a regression.

#include <map>
#include <string>
#include <vector>

namespace gradpos::reference {

// ---------------------------------------------------------------------------
// Exceptional-type instance summaries.
//
// One row per grading of an exceptional root system.  `i == 0` denotes the
// extra-special grading; otherwise the 1-standard grading at simple root i.
// `orbit_sizes` is the sorted multiset of Panyushev-complement orbit sizes
// on the ideals of the weight poset.
// ---------------------------------------------------------------------------

struct InstanceSummary {
    char family;
    int rank;
    int i;  // 0 = extra-special
    long long size;
    long long m_at_one;
    long long m_at_minus_one;
    std::vector<long long> orbit_sizes;  // sorted ascending
};

inline const std::vector<InstanceSummary>& instance_summaries() {
    auto rep = [](long long v, int k) { return std::vector<long long>(static_cast<std::size_t>(k), v); };
    auto cat = [](std::vector<long long> a, const std::vector<long long>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    static const std::vector<InstanceSummary> rows = {
        {'F', 4, 1, 8, 10, 2, {2, 8}},
        {'F', 4, 2, 6, 10, 2, {5, 5}},
        {'F', 4, 3, 12, 35, 3, rep(7, 5)},
        {'F', 4, 4, 14, 22, 2, {11, 11}},
        {'F', 4, 0, 14, 22, 2, {11, 11}},
        {'G', 2, 1, 2, 3, 1, {3}},
        {'G', 2, 2, 4, 5, 1, {5}},
        {'G', 2, 0, 4, 5, 1, {5}},
        {'E', 6, 1, 16, 27, 3, {3, 12, 12}},
        {'E', 6, 2, 20, 66, 2, rep(11, 6)},
        {'E', 6, 3, 20, 126, 6, rep(9, 14)},
        {'E', 6, 4, 18, 175, 9, rep(7, 25)},
        {'E', 6, 5, 20, 126, 6, rep(9, 14)},
        {'E', 6, 6, 16, 27, 3, {3, 12, 12}},
        {'E', 6, 0, 20, 66, 2, rep(11, 6)},
        {'E', 7, 1, 32, 119, 7, rep(17, 7)},
        {'E', 7, 2, 35, 352, 0, cat({2}, rep(14, 25))},
        {'E', 7, 3, 30, 462, 10, rep(11, 42)},
        {'E', 7, 4, 24, 490, 18, cat(cat({2}, rep(4, 4)), rep(8, 59))},
        {'E', 7, 5, 30, 672, 0, cat({2}, rep(10, 67))},
        {'E', 7, 6, 32, 351, 15, rep(13, 27)},
        {'E', 7, 7, 27, 56, 0, cat({2}, rep(18, 3))},
        {'E', 7, 0, 32, 119, 7, rep(17, 7)},
        {'E', 8, 1, 64, 1173, 21, rep(23, 51)},
        {'E', 8, 2, 56, 2431, 7, rep(17, 143)},
        {'E', 8, 3, 42, 1716, 20, rep(13, 132)},
        {'E', 8, 4, 30, 1176, 24, cat(rep(3, 2), rep(9, 130))},
        {'E', 8, 5, 40, 2772, 20, rep(11, 252)},
        {'E', 8, 6, 48, 3003, 35, cat(rep(7, 5), rep(14, 212))},
        {'E', 8, 7, 54, 1463, 21, rep(19, 77)},
        {'E', 8, 8, 56, 232, 8, rep(29, 8)},
        {'E', 8, 0, 56, 232, 8, rep(29, 8)},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Full M-polynomial coefficient vectors for the four largest exceptional
// gradings, together with the reduced product form of the rank generating
// quotient: M = prod(1 - t^a) / prod(1 - t^b) over the listed exponents.
// ---------------------------------------------------------------------------

struct GoldenM {
    char family;
    int rank;
    int i;
    std::vector<long long> m;
    std::vector<long long> n;
    std::vector<int> quot_num;  // exponents a in prod (1 - t^a)
    std::vector<int> quot_den;  // exponents b in prod (1 - t^b)
};

inline const std::vector<GoldenM>& golden_m_tables() {
    static const std::vector<GoldenM> rows = {
        {'E', 7, 2,
         {1, 1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 13, 15, 17, 18, 19, 20, 20,
          20, 20, 19, 18, 17, 15, 13, 12, 10, 8, 7, 5, 4, 3, 2, 1, 1, 1},
         {1, 35, 140, 140, 35, 1},
         {8, 10, 11, 12, 14},
         {1, 3, 4, 5, 7}},
        {'E', 8, 1,
         {1, 1, 1, 1, 2, 2, 3, 4, 5, 5, 7, 8, 10, 11, 13, 14, 17, 18, 20,
          22, 25, 26, 29, 30, 32, 33, 36, 36, 38, 38, 39, 39, 41, 39, 39,
          38, 38, 36, 36, 33, 32, 30, 29, 26, 25, 22, 20, 18, 17, 14, 13,
          11, 10, 8, 7, 5, 5, 4, 3, 2, 2, 1, 1, 1, 1},
         {1, 64, 364, 520, 208, 16},
         {14, 17, 18, 20, 23},
         {1, 4, 6, 7, 10}},
        {'E', 8, 2,
         {1, 1, 1, 2, 3, 4, 6, 8, 10, 13, 17, 20, 25, 30, 35, 41, 48, 53,
          60, 67, 73, 79, 85, 89, 94, 98, 100, 101, 103, 101, 100, 98, 94,
          89, 85, 79, 73, 67, 60, 53, 48, 41, 35, 30, 25, 20, 17, 13, 10,
          8, 6, 4, 3, 2, 1, 1, 1},
         {1, 56, 420, 952, 770, 216, 16},
         {11, 12, 13, 14, 15, 17},
         {1, 3, 4, 5, 6, 7}},
        {'E', 8, 8,
         {1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 6, 6, 6,
          6, 7, 7, 7, 7, 7, 7, 8, 7, 7, 7, 7, 7, 7, 6, 6, 6, 6, 5, 5, 4,
          4, 4, 4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1},
         {1, 56, 133, 42},
         {20, 24, 29},
         {1, 6, 10}},
    };
    return rows;
}

// Two product-poset N-polynomials used as spot checks.
inline const std::vector<long long>& n_grid_2x3x4() {
    static const std::vector<long long> v = {1, 24, 120, 200, 120, 24, 1};
    return v;
}
inline const std::vector<long long>& n_3_x_H4() {
    static const std::vector<long long> v = {1, 30, 165, 280, 165, 30, 1};
    return v;
}

// ---------------------------------------------------------------------------
// Order-reversing involution data for E7 gradings.
// Fixed points of the canonical involution, listed as root coefficient
// vectors (coefficients on simple roots 1..7, ascending index).
// ---------------------------------------------------------------------------

inline const std::vector<std::vector<int>>& e7_i2_fixed_roots() {
    static const std::vector<std::vector<int>> v = {
        {0, 1, 1, 2, 1, 1, 1}, {1, 1, 1, 2, 1, 1, 0}, {1, 1, 2, 2, 1, 0, 0}};
    return v;
}
inline const std::vector<std::vector<int>>& e7_i7_fixed_roots() {
    static const std::vector<std::vector<int>> v = {
        {0, 1, 1, 2, 2, 2, 1}, {1, 1, 1, 2, 2, 1, 1}, {1, 1, 2, 2, 1, 1, 1}};
    return v;
}
inline const std::vector<std::vector<int>>& e7_i5_fixed_roots() {
    static const std::vector<std::vector<int>> v = {
        {0, 1, 1, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1, 0}};
    return v;
}

// ---------------------------------------------------------------------------
// Gaussian-binomial scan verdicts.
//
// For the seven weight posets P below (exceptional gradings with no
// chain-product-pattern structure), the verdict of comparing the
// M-polynomial of [m] x P against the full rank product of [m] x P,
// for m = 1..6.  'T' = equal, 'D' = product is a polynomial but differs,
// 'N' = product is not a polynomial.
// ---------------------------------------------------------------------------

struct GaussianRow {
    char family;
    int rank;
    int i;
    std::string verdicts;  // six characters, m = 1..6
};

inline const std::vector<GaussianRow>& gaussian_rows() {
    static const std::vector<GaussianRow> rows = {
        {'F', 4, 4, "TNDDDD"}, {'E', 6, 2, "TDDDND"}, {'E', 7, 1, "TDDDDD"},
        {'E', 7, 2, "TDDDDN"}, {'E', 8, 1, "TNDDDD"}, {'E', 8, 2, "TDDDNN"},
        {'E', 8, 8, "TNDDDD"},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Orbit/involution duality spot checks.
//
// e6_i2 row: for each of the six Panyushev orbits of the E6 extra-special
// weight poset (in canonical seed order), whether complementation by the
// canonical involution maps the orbit to itself.
//
// b3_extra row: the unique order-reversing involution of the B3
// extra-special weight poset (as a permutation, 0-indexed) and the per-orbit
// duality verdicts.
// ---------------------------------------------------------------------------

inline const std::vector<bool>& e6_i2_orbit_duality() {
    static const std::vector<bool> v = {true, false, false, true, false, false};
    return v;
}
inline const std::vector<int>& b3_extra_involution() {
    static const std::vector<int> v = {5, 4, 3, 2, 1, 0};
    return v;
}
inline const std::vector<bool>& b3_extra_orbit_duality() {
    static const std::vector<bool> v = {true, true};
    return v;
}

// E7 i=5: value of M(-1), number of self-complementary ideals.
inline constexpr long long e7_i5_m_at_minus_one = 0;
inline constexpr long long e7_i5_self_complementary = 0;

// ---------------------------------------------------------------------------
// Cyclic sieving residue tables for the exceptional gradings whose orbit
// structure is not a single uniform size.  `n` is the sieving order
// (lcm of orbit sizes); residue[j] for j in [0, n) is the number of ideals
// fixed by the j-th power of the Panyushev complement, equivalently the
// value of M at the j-th power of a primitive n-th root of unity.
// The table stores a base value plus the exceptional positions.
// ---------------------------------------------------------------------------

struct ResidueRow {
    char family;
    int rank;
    int i;
    int n;
    long long base;
    std::map<int, long long> extras;  // position -> value when != base
};

inline const std::vector<ResidueRow>& residue_rows() {
    static const std::vector<ResidueRow> rows = {
        {'F', 4, 4, 11, 2, {}},
        {'E', 6, 2, 11, 6, {}},
        {'E', 7, 1, 17, 7, {}},
        {'E', 7, 2, 14, 25, {{0, 26}, {7, 26}}},
        {'E', 7, 5, 10, 67, {{0, 68}, {5, 68}}},
        {'E', 8, 1, 23, 51, {}},
        {'E', 8, 2, 17, 143, {}},
        {'E', 8, 5, 11, 252, {}},
        {'E', 8, 8, 29, 8, {}},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// E6 extra-special orbit size-traces: for each of the six Panyushev orbits,
// the sorted list of ideal cardinalities met along the orbit.
// ---------------------------------------------------------------------------

inline const std::vector<std::vector<int>>& e6_extra_special_orbit_traces() {
    static const std::vector<std::vector<int>> v = {
        {0, 1, 2, 4, 7, 10, 13, 16, 18, 19, 20},
        {3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17},
        {3, 4, 5, 6, 9, 10, 11, 14, 15, 16, 17},
        {5, 6, 6, 8, 9, 10, 11, 12, 14, 14, 15},
        {7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13},
        {7, 7, 8, 8, 9, 10, 11, 12, 12, 13, 13},
    };
    return v;
}

}  // namespace gradpos::reference
