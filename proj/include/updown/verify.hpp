// Invariant suites behind `verify`: each check either passes or records a
// short failure description.
#pragma once

#include <string>
#include <vector>

#include "updown/basis_poly.hpp"

namespace updown {

struct VerifyReport {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void merge(const VerifyReport& other);
    bool ok() const { return failed == 0; }
};

/// Number of entries of `table` that disagree with construct(k) for the
/// matching k. The shipped reference table yields 0.
int reference_mismatches(const std::vector<BasisPolynomial>& table);

VerifyReport verify_core(int n_max = 8);
VerifyReport verify_identities(int n_max = 12);
VerifyReport verify_roots(int n_max = 10);
VerifyReport verify_all(int n_max = 8);

}  // namespace updown
