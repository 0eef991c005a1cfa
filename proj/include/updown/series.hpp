// Generating-function machinery: P_n(x), the truncated F(n,x) identity,
// partial sums, Euler/tangent/Bernoulli determinants, the Seidel zigzag
// oracle, and the concatenation sequence.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "updown/exact.hpp"

namespace updown {

/// Dense integer-coefficient polynomial / series prefix, ascending powers.
struct SeriesPoly {
    std::vector<Integer> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Integer& coeff(std::size_t i) const {
        static const Integer zero(0);
        return i < coeffs.size() ? coeffs[i] : zero;
    }
    void normalize();
    bool operator==(const SeriesPoly&) const = default;
};

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b);
/// Multiply by (1 - x^d).
SeriesPoly series_mul_one_minus_pow(const SeriesPoly& a, std::uint64_t d);
/// Exact division by (1 - x^d); throws if the division leaves a remainder.
SeriesPoly series_div_one_minus_pow(const SeriesPoly& a, std::uint64_t d);

/// P_n(x) by the product recursion, keeping the uncancelled top factor and
/// finishing with an exact division. Coefficients are {n\k},
/// k = 0..2^(n-1)-1.
SeriesPoly pn_polynomial(int n, int n_limit = 12);

/// Coefficient identity behind the generating-function quotient: the formal
/// series prefix of F(n,x) agrees with P_n(x) * prod(1 - x^(2^i)), i >= n,
/// through the given order.
bool gf_quotient_check(int n, int order);

/// Default truncation order used by the quotient check.
int gf_default_order(int n);

/// (sum_{k<2^r} {n\k}, n(n-1)...(n-r+1)); the two agree for 1 <= r <= n-1.
std::pair<Integer, Integer> partial_sum_check(int n, int r);

/// Determinant of the Euler-number matrix; equals E_{2m}.
Integer euler_determinant(int m, int m_limit = 8);

/// Determinant of the tangent-number matrix (order m), m >= 2.
Integer tangent_determinant(int m, int m_limit = 8);

/// B_{2m} recovered from the tangent determinant.
Rational bernoulli_recover(int m, int m_limit = 8);

/// B_{2m} by the Akiyama-Tanigawa recurrence; independent of the
/// determinant route.
Rational bernoulli_number(int m);

/// a_0..a_{n_max} with a_n = n! [x^n](tan x + sec x), by the Seidel
/// boustrophedon recurrence. Shares no code with the signature triangle.
std::vector<Integer> tan_sec_coefficients(int n_max, int n_limit = 16);

/// Entries 1..length of the concatenation sequence
/// { floor(log2 k)+1 \ k - 2^floor(log2 k) }.
std::vector<Integer> concatenation_sequence(std::uint64_t length);

/// prod_{i=0}^{n-2} (1 - x^(2^i)); its coefficients are tau_k for
/// k < 2^(n-1).
SeriesPoly thue_morse_product(int n);

/// Two-column "index value" lines with the offset stated in a leading
/// comment.
std::string to_bfile(const std::vector<Integer>& coeffs, long offset);

}  // namespace updown
