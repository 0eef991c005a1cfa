#include <doctest.h>

#include "updown/verify.hpp"

using namespace updown;

TEST_CASE("verify suites pass on a correct build") {
    const VerifyReport core = verify_core(6);
    CHECK(core.ok());
    CHECK(core.passed > 0);

    const VerifyReport roots = verify_roots(8);
    CHECK(roots.ok());

    const VerifyReport identities = verify_identities(10);
    CHECK(identities.ok());
}

TEST_CASE("mutated reference data is detected") {
    std::vector<BasisPolynomial> table(reference_polynomials().begin(), reference_polynomials().end());
    CHECK(reference_mismatches(table) == 0);
    for (std::size_t victim = 1; victim < table.size(); victim += 7) {
        auto mutated = table;
        mutated[victim].coeffs.front() += 1;
        CHECK(reference_mismatches(mutated) == 1);
    }
    auto sign_flip = table;
    sign_flip[3].constant = -sign_flip[3].constant;
    CHECK(reference_mismatches(sign_flip) == 1);
}

TEST_CASE("verify budget guards") {
    CHECK_THROWS_AS(verify_core(11), BudgetError);
    CHECK_THROWS_AS(verify_identities(15), BudgetError);
    CHECK_THROWS_AS(verify_roots(13), BudgetError);
}
