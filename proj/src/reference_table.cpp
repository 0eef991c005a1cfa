#include "updown/basis_poly.hpp"

namespace updown {

namespace {

BasisPolynomial entry(std::uint64_t k, std::vector<std::pair<int, long>> terms, int constant) {
    BasisPolynomial p;
    p.k = k;
    p.constant = constant;
    for (const auto& [t, c] : terms) {
        p.exps.push_back(t);
        p.coeffs.emplace_back(c);
    }
    return p;
}

}  // namespace

// Reference data for the verification suites: the first 32 basis
// polynomials, entered by hand and kept independent of construct().
const std::array<BasisPolynomial, 32>& reference_polynomials() {
    static const std::array<BasisPolynomial, 32> table = {
        entry(0, {}, 1),
        entry(1, {{1, 1}}, -1),
        entry(2, {{2, 1}}, -1),
        entry(3, {{2, 1}, {1, -1}}, 1),
        entry(4, {{3, 1}}, -1),
        entry(5, {{3, 2}, {1, -1}}, 1),
        entry(6, {{3, 2}, {2, -1}}, 1),
        entry(7, {{3, 1}, {2, -1}, {1, 1}}, -1),
        entry(8, {{4, 1}}, -1),
        entry(9, {{4, 3}, {1, -1}}, 1),
        entry(10, {{4, 5}, {2, -1}}, 1),
        entry(11, {{4, 3}, {2, -1}, {1, 1}}, -1),
        entry(12, {{4, 3}, {3, -1}}, 1),
        entry(13, {{4, 5}, {3, -2}, {1, 1}}, -1),
        entry(14, {{4, 3}, {3, -2}, {2, 1}}, -1),
        entry(15, {{4, 1}, {3, -1}, {2, 1}, {1, -1}}, 1),
        entry(16, {{5, 1}}, -1),
        entry(17, {{5, 4}, {1, -1}}, 1),
        entry(18, {{5, 9}, {2, -1}}, 1),
        entry(19, {{5, 6}, {2, -1}, {1, 1}}, -1),
        entry(20, {{5, 9}, {3, -1}}, 1),
        entry(21, {{5, 16}, {3, -2}, {1, 1}}, -1),
        entry(22, {{5, 11}, {3, -2}, {2, 1}}, -1),
        entry(23, {{5, 4}, {3, -1}, {2, 1}, {1, -1}}, 1),
        entry(24, {{5, 4}, {4, -1}}, 1),
        entry(25, {{5, 11}, {4, -3}, {1, 1}}, -1),
        entry(26, {{5, 16}, {4, -5}, {2, 1}}, -1),
        entry(27, {{5, 9}, {4, -3}, {2, 1}, {1, -1}}, 1),
        entry(28, {{5, 6}, {4, -3}, {3, 1}}, -1),
        entry(29, {{5, 9}, {4, -5}, {3, 2}, {1, -1}}, 1),
        entry(30, {{5, 4}, {4, -3}, {3, 2}, {2, -1}}, 1),
        entry(31, {{5, 1}, {4, -1}, {3, 1}, {2, -1}, {1, 1}}, -1),
    };
    return table;
}

}  // namespace updown
