// The weighted alternant of a matrix under a signature, via first-row
// expansion, plus the standard weight-matrix builders.
#pragma once

#include "updown/exact.hpp"
#include "updown/signature.hpp"

namespace updown {

using WeightMatrix = ExactMatrix;

WeightMatrix weight_ones(int n);
WeightMatrix weight_ones_minus_identity(int n);
/// J_n with the first row reduced to e_l and the last row to e_m.
WeightMatrix weight_endpoint(int n, int l, int m);

/// Sum over permutations with this signature of prod a_{i,pi_i}, computed by
/// recursive first-row expansion. Exponential; intended for n <= 9.
Integer alt(const WeightMatrix& a, const Signature& sig);

/// Same value, memoized on (remaining column set, zero-prefix length).
/// Reaches n ~ 14 for 0/1 weight matrices.
Integer alt_memoized(const WeightMatrix& a, const Signature& sig);

}  // namespace updown
