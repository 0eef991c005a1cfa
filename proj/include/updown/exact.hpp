// Exact arithmetic kernel: arbitrary-precision integers/rationals, generalized
// binomials, fraction-free determinants, Thue-Morse signs, and rational
// monomial polynomials.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace updown {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation exceeds its configured enumeration budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduced rational with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(long n);

/// Falling factorial n(n-1)...(n-r+1); r = 0 gives 1.
Integer falling_factorial(long n, long r);

/// Generalized binomial x(x-1)...(x-t+1)/t! for any integer x, t >= 0.
/// Vanishes for 0 <= x < t; binomial_general(x, 0) = 1.
Integer binomial_general(long x, long t);

/// Standard binomial for nonnegative arguments; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

/// (-1)^(number of binary 1s of k).
int thue_morse(std::uint64_t k);

/// Square matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    explicit ExactMatrix(int order) : order_(order), entries_(static_cast<std::size_t>(order) * order, 0) {
        if (order <= 0) throw std::invalid_argument("ExactMatrix: order must be positive");
    }
    ExactMatrix(int order, std::vector<Integer> entries) : order_(order), entries_(std::move(entries)) {
        if (order <= 0 || entries_.size() != static_cast<std::size_t>(order) * order)
            throw std::invalid_argument("ExactMatrix: entry count does not match order");
    }

    int order() const { return order_; }
    Integer& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
    const Integer& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }

    bool operator==(const ExactMatrix&) const = default;

  private:
    int order_ = 0;
    std::vector<Integer> entries_;
};

/// Exact determinant by single-step fraction-free (Bareiss) elimination.
/// Zero pivots are handled by row swap with sign flip; a fully zero pivot
/// column yields determinant 0.
Integer det_exact(ExactMatrix m);

/// Exact rank via rational Gaussian elimination.
int rank_exact(const ExactMatrix& m);

/// Dense rational-coefficient polynomial, ascending degree. Trailing zero
/// coefficients are stripped; the zero polynomial has no coefficients.
struct MonomialPoly {
    std::vector<Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void normalize();

    bool operator==(const MonomialPoly&) const = default;
};

MonomialPoly mono_add(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly mono_scale(const MonomialPoly& a, const Rational& c);
MonomialPoly mono_mul(const MonomialPoly& a, const MonomialPoly& b);
MonomialPoly mono_derivative(const MonomialPoly& a);

/// C(x, t) as a degree-t rational polynomial in x.
MonomialPoly binomial_poly(int t);

/// Exact Horner evaluation.
Rational eval_rational(const MonomialPoly& p, const Rational& x);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace updown
