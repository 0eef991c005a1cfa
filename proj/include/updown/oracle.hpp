// Ground-truth enumeration: count permutations by signature with optional
// positional restrictions, witness construction, alternating derangements
// and alternating Stirling numbers.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "updown/exact.hpp"
#include "updown/signature.hpp"

namespace updown {

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

/// Binary n x n grid; entry (i, j) = allowed(value j at position i).
class PositionMask {
  public:
    explicit PositionMask(int n) : n_(n), allow_(static_cast<std::size_t>(n) * n, 1) {
        if (n <= 0) throw std::invalid_argument("PositionMask: order must be positive");
    }

    static PositionMask ones(int n) { return PositionMask(n); }
    static PositionMask no_fixed_point(int n);
    /// J_n with row 1 reduced to e_l and row n reduced to e_m.
    static PositionMask endpoint(int n, int l, int m);
    /// Reads a 0/1 ExactMatrix; rejects other entries.
    static PositionMask from_matrix(const ExactMatrix& a);

    int order() const { return n_; }
    bool allows(int pos, int val) const { return allow_[static_cast<std::size_t>(pos - 1) * n_ + (val - 1)] != 0; }
    void set(int pos, int val, bool ok) { allow_[static_cast<std::size_t>(pos - 1) * n_ + (val - 1)] = ok ? 1 : 0; }

    ExactMatrix to_matrix() const;

  private:
    int n_;
    std::vector<std::uint8_t> allow_;
};

Signature signature_of(const Permutation& pi);

int cycle_count(const Permutation& pi);

/// Number of permutations with the given signature that respect the mask,
/// by prefix-pruned backtracking.
Integer count_signature(const Signature& sig, const PositionMask* mask = nullptr);

/// Full scan over all n! permutations; entry k of the result is {n\k}.
std::vector<Integer> counts_all(int n, int n_limit = 10);

/// A permutation whose index is k, by reversing the identity's segments over
/// each maximal run of binary 0s of k.
Permutation witness_permutation(int n, std::uint64_t k);

/// Up-first alternating signature (+1,-1,+1,...) of order n.
Signature alternating_signature(int n);

/// Alternating permutations without fixed points, by direct search.
Integer alternating_derangements(int n, int n_limit = 14);

/// Alternating permutations of n with exactly l cycles.
Integer alternating_stirling(int n, int l, int n_limit = 12);

/// Whole row l = 1..n at once (one enumeration pass).
std::vector<Integer> alternating_stirling_row(int n, int n_limit = 12);

}  // namespace updown
