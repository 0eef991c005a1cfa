// Numerical exploration of the open problems: real-root profiles by exact
// Sturm sequences, the n = -1 root scan, and the alternating derangement and
// Stirling ratio reports.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "updown/exact.hpp"

namespace updown {

/// Number of distinct real roots, by Sturm's theorem over exact rationals on
/// a Cauchy-bounded interval.
int sturm_distinct_real_roots(const MonomialPoly& p);

/// Number of real roots counted with multiplicity (repeated gcd deflation).
int real_roots_with_multiplicity(const MonomialPoly& p);

/// All rational roots, by the rational-root candidate test; each root is
/// verified by exact evaluation.
std::vector<Rational> rational_roots(const MonomialPoly& p);

struct RootProfile {
    std::uint64_t k = 0;
    int degree = 0;
    int distinct_real = 0;
    int real_with_multiplicity = 0;
    std::vector<Rational> rationals;
    bool all_real = false;
    int zero_bits = 0;  // 0s in the binary expansion of k
};

RootProfile real_root_profile(std::uint64_t k, std::uint64_t k_limit = 4096);

/// All k <= k_max whose basis polynomial vanishes at n = -1.
std::vector<std::uint64_t> minus_one_root_scan(std::uint64_t k_max, std::uint64_t k_limit = 4096);

struct DerangementReport {
    int n = 0;
    Integer d_search;     // direct enumeration
    Integer d_alternant;  // memoized alternant on J - I
    Integer a_n;          // zigzag count
    Rational ratio;       // D / a_n
};

DerangementReport derangement_report(int n, int n_limit = 14);

struct StirlingReport {
    int n = 0;
    int l = 0;
    Integer count;    // S^(a)(n, l)
    Integer a_n;
    double ratio = 0;  // n S / (a_n (ln n)^(l-1)), display precision only
};

StirlingReport stirling_report(int n, int l, int n_limit = 12);

std::string root_profile_csv_header();
std::string root_profile_csv_line(const RootProfile& p);

}  // namespace updown
