// Niven signatures and the up-down index codec.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "updown/exact.hpp"

namespace updown {

/// Ascent/descent pattern of a permutation of order n: entries q_1..q_{n-1},
/// each +1 (ascent) or -1 (descent). Order 1 gives the empty signature.
class Signature {
  public:
    explicit Signature(std::vector<int> entries);
    static Signature parse(const std::string& text);

    int order() const { return static_cast<int>(q_.size()) + 1; }
    int q(int i) const { return q_[static_cast<std::size_t>(i) - 1]; }  // 1-based, i in 1..n-1
    const std::vector<int>& entries() const { return q_; }

    /// The Eq.-2 symmetry partner: reverse order, negate every entry.
    Signature reversed_negated() const;

    std::string to_string() const;
    bool operator==(const Signature&) const = default;

  private:
    std::vector<int> q_;
};

/// Index k with its binary anatomy: exponents t_1 > ... > t_m with
/// k = sum 2^(t_i - 1), and places s_i = t_1 - t_i + 1.
struct UpDownIndex {
    std::uint64_t k = 0;
    std::vector<int> exponents;
    std::vector<int> places;

    int ones() const { return static_cast<int>(exponents.size()); }
};

/// Strictly decreasing exponents t_i with k = sum 2^(t_i-1); empty for k = 0.
std::vector<int> exponents(std::uint64_t k);

UpDownIndex make_updown_index(std::uint64_t k);

/// k = sum q'_i 2^(n-i-1): the most significant of the n-1 bits is q_1.
UpDownIndex encode_index(const Signature& sig);

/// Inverse of encode_index; requires 0 <= k < 2^(n-1).
Signature decode_index(int n, std::uint64_t k);

/// 2^(n-1)-1-k, the index of the reversed-negated signature.
std::uint64_t complement_index(int n, std::uint64_t k);

/// Index of the alternating (up-first) signature of order n:
/// (2^(n+1) - 3 + (-1)^n) / 6.
std::uint64_t alternating_index(int n);

}  // namespace updown
