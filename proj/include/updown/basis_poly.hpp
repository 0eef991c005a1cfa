// Basis polynomials {n\k}: five construction routes, three evaluation routes,
// formal values, roots, recognition, congruence, and asymptotics.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "updown/exact.hpp"
#include "updown/signature.hpp"

namespace updown {

/// {n\k} in the binomial basis: constant (-1)^m plus coefficients c_p on
/// C(n, t_p), where t_1 > ... > t_m are the exponents of k. The
/// representation is unique given k; the degree is t_1.
struct BasisPolynomial {
    std::uint64_t k = 0;
    std::vector<int> exps;         // t_1 > ... > t_m
    std::vector<Integer> coeffs;   // c_p attached to C(n, t_p)
    int constant = 1;              // (-1)^m

    int degree() const { return exps.empty() ? 0 : exps.front(); }
    bool operator==(const BasisPolynomial&) const = default;
};

enum class ConstructMethod { explicit15, symmetric30, recursion37, system46, step47 };

/// All five methods produce the identical canonical form; k = 0 is the
/// constant polynomial 1.
BasisPolynomial construct(std::uint64_t k, ConstructMethod method = ConstructMethod::recursion37);

/// Exact value of the polynomial at any integer n (formal values included).
Integer evaluate(const BasisPolynomial& p, long n);

enum class ValueRoute { niven1, det14, det40, lambda66, poly };

/// {n\k} by the chosen route. niven1 and det14 require 0 <= k < 2^(n-1);
/// det40, lambda66 and poly accept any n >= 0.
Integer value(int n, std::uint64_t k, ValueRoute route);

/// Formal value {a\k}: a = 0 gives tau_k; otherwise reduce k mod 2^a, the
/// upper half-period is 0, the lower reduces to tau * {a\i}.
Integer formal_value(int a, std::uint64_t k);

/// Positive integer roots of {n\k}; equals exponents(k) by the root theorem.
std::vector<int> positive_roots(std::uint64_t k);

struct Recognition {
    Rational constant;
    std::uint64_t k = 0;
    bool operator==(const Recognition&) const = default;
};

/// Decides whether P = C * {n\k} for some C != 0 and k >= 0, via forward
/// differences; returns the witness on success.
std::optional<Recognition> recognize(const MonomialPoly& p);

/// Degree of {n\k} as a polynomial in n: floor(log2(2k)), 0 for k = 0.
int degree_of_index(std::uint64_t k);

struct CongruenceResult {
    bool applicable = false;
    long residue = 0;  // in [0, n), meaningful only when applicable
};

/// Applicable when every divisor > 1 of n exceeds floor(log2(2k)); then
/// {n\k} == tau_k (mod n) and the common residue is returned.
CongruenceResult congruence_residue(long n, std::uint64_t k);

struct LeadingAsymptotic {
    Integer coefficient;
    int degree = 0;
};

/// Leading binomial-basis term of {n\k}: coefficient
/// {floor(log2 k)+1 \ k - 2^floor(log2 k)} on C(n, floor(log2 k)+1).
LeadingAsymptotic leading_asymptotic(std::uint64_t k);

struct LambdaIndexSet {
    std::uint64_t k = 0;
    std::vector<int> members;            // ascending
    std::vector<std::uint64_t> lambda;   // parallel to members
};

/// A_k = { i <= log2(2k) : floor(k/2^i - 1/2) = ceil((k+1)/2^i - 1) } with
/// the common values lambda(k; i).
LambdaIndexSet lambda_set(std::uint64_t k);

/// True iff the (m+1)x(m+1) matrix of the determinant representation has
/// full rank; fails exactly at n in exponents(k).
bool rank_check(int n, std::uint64_t k);

/// Rational-coefficient monomial form, equal to the polynomial at every
/// integer.
MonomialPoly to_monomial(const BasisPolynomial& p);

// Matrix builders behind the determinant routes (exposed for the number
// identities and the rank check).
ExactMatrix niven_matrix(const Signature& sig);
ExactMatrix det14_matrix(int n, const std::vector<int>& exps);
ExactMatrix det40_matrix(long n, const std::vector<int>& exps);

/// Canonical text form, e.g. "16*C(n,5) - 2*C(n,3) + 1*C(n,1) - 1".
std::string to_text(const BasisPolynomial& p);
/// {"k":…, "terms":[[t,c],…], "const":±1} with coefficients as decimal strings.
std::string to_json(const BasisPolynomial& p);

/// Hand-entered reference table of the first 32 polynomials, k = 0..31,
/// kept independent of the construction routes.
const std::array<BasisPolynomial, 32>& reference_polynomials();

}  // namespace updown
