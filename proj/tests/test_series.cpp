#include <doctest.h>

#include "updown/basis_poly.hpp"
#include "updown/series.hpp"
#include "updown/signature.hpp"

using namespace updown;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("P_n matches the reference coefficients") {
    CHECK(pn_polynomial(1).coeffs == ints({1}));
    CHECK(pn_polynomial(2).coeffs == ints({1, 1}));
    CHECK(pn_polynomial(3).coeffs == ints({1, 2, 2, 1}));
    CHECK(pn_polynomial(4).coeffs == ints({1, 3, 5, 3, 3, 5, 3, 1}));
    CHECK(pn_polynomial(5).coeffs == ints({1, 4, 9, 6, 9, 16, 11, 4, 4, 11, 16, 9, 6, 9, 4, 1}));
    CHECK(pn_polynomial(6).coeffs ==
          ints({1,  5,  14, 10, 19, 35, 26, 10, 14, 40, 61, 35, 26, 40, 19, 5,
                5,  19, 40, 26, 35, 61, 40, 14, 10, 26, 35, 19, 10, 14, 5,  1}));
    CHECK(pn_polynomial(6).coeffs[10] == 61);
}

TEST_CASE("P_n structural properties") {
    for (int n = 1; n <= 10; ++n) {
        const SeriesPoly p = pn_polynomial(n);
        CHECK(p.degree() == (1 << (n - 1)) - 1);
        Integer at1 = 0;
        for (const auto& c : p.coeffs) at1 += c;
        CHECK(at1 == factorial(n));
        if (n <= 8)
            for (std::size_t k = 0; k < p.coeffs.size(); ++k)
                CHECK(p.coeffs[k] == p.coeffs[p.coeffs.size() - 1 - k]);
        // coefficients are the basis-polynomial values
        if (n <= 7)
            for (std::size_t k = 0; k < p.coeffs.size(); ++k)
                CHECK(p.coeffs[k] == evaluate(construct(k), n));
    }
    CHECK_THROWS_AS(pn_polynomial(13), BudgetError);
}

TEST_CASE("generating function quotient") {
    CHECK(gf_quotient_check(2, 16));
    CHECK(gf_quotient_check(1, 8));
    CHECK(gf_quotient_check(4, 40));
    for (int n = 1; n <= 6; ++n) CHECK(gf_quotient_check(n, gf_default_order(n)));
    CHECK_THROWS_AS(gf_quotient_check(7, 8), BudgetError);
    CHECK_THROWS_AS(gf_quotient_check(3, 1000), BudgetError);
}

TEST_CASE("partial sums") {
    for (int n = 4; n <= 12; ++n) {
        const auto [sum3, prod3] = partial_sum_check(n, 3);
        CHECK(sum3 == prod3);
        CHECK(prod3 == Integer(n) * (n - 1) * (n - 2));
        const auto [sumf, prodf] = partial_sum_check(n, n - 1);
        CHECK(sumf == prodf);
        CHECK(prodf == factorial(n));
        const auto [sum1, prod1] = partial_sum_check(n, 1);
        CHECK(sum1 == n);
    }
    CHECK_THROWS_AS(partial_sum_check(5, 5), std::invalid_argument);
}

TEST_CASE("Euler determinants") {
    CHECK(euler_determinant(1) == -1);
    CHECK(euler_determinant(2) == 5);
    CHECK(euler_determinant(3) == -61);
    for (int m = 1; m <= 6; ++m) {
        Integer expect = evaluate(construct(alternating_index(2 * m)), 2 * m);
        if (m % 2) expect = -expect;
        CHECK(euler_determinant(m) == expect);
    }
    CHECK_THROWS_AS(euler_determinant(9), BudgetError);
}

TEST_CASE("tangent determinants and Bernoulli numbers") {
    CHECK(tangent_determinant(2) == -2);
    CHECK(tangent_determinant(3) == 16);
    CHECK(bernoulli_recover(2) == make_rational(-1, 30));
    CHECK(bernoulli_recover(3) == make_rational(1, 42));
    CHECK(bernoulli_recover(4) == make_rational(-1, 30));
    // Akiyama-Tanigawa sanity: B_2 = 1/6 comes out of the same recurrence
    CHECK(bernoulli_number(1) == make_rational(1, 6));
    for (int m = 2; m <= 8; ++m) CHECK(bernoulli_recover(m) == bernoulli_number(m));
}

TEST_CASE("Seidel tan+sec oracle") {
    const auto a = tan_sec_coefficients(7);
    CHECK(a == ints({1, 1, 1, 2, 5, 16, 61, 272}));
    // a_7 = 272 matches {7\42} through the polynomial route
    CHECK(a[7] == evaluate(construct(alternating_index(7)), 7));
    for (int n = 1; n <= 12; ++n)
        CHECK(tan_sec_coefficients(12)[static_cast<std::size_t>(n)] ==
              evaluate(construct(alternating_index(n)), n));
    CHECK_THROWS_AS(tan_sec_coefficients(17), BudgetError);
}

TEST_CASE("concatenation sequence") {
    const auto seq = concatenation_sequence(21);
    CHECK(std::vector<Integer>(seq.begin(), seq.begin() + 7) == ints({1, 1, 1, 1, 2, 2, 1}));
    CHECK(std::vector<Integer>(seq.begin() + 7, seq.begin() + 15) == ints({1, 3, 5, 3, 3, 5, 3, 1}));
    CHECK(seq[20] == 16);  // entry at k = 21: the leading coefficient of {n\21}
    // entries agree with the leading coefficients
    for (std::uint64_t k = 1; k <= 21; ++k) CHECK(seq[k - 1] == leading_asymptotic(k).coefficient);
}

TEST_CASE("Thue-Morse product") {
    for (int n = 2; n <= 7; ++n) {
        const SeriesPoly p = thue_morse_product(n);
        CHECK(p.degree() == (1 << (n - 1)) - 1);
        for (std::uint64_t k = 0; k < (std::uint64_t(1) << (n - 1)); ++k) {
            CHECK(p.coeff(k) == thue_morse(k));
            CHECK(abs(p.coeff(k)) == 1);
        }
    }
}

TEST_CASE("series helpers") {
    SeriesPoly p;
    p.coeffs = ints({1, 1});
    const SeriesPoly q = series_mul_one_minus_pow(p, 2);
    CHECK(q.coeffs == ints({1, 1, -1, -1}));
    CHECK(series_div_one_minus_pow(q, 2) == p);
    SeriesPoly bad;
    bad.coeffs = ints({1, 1, 1});
    CHECK_THROWS_AS(series_div_one_minus_pow(bad, 2), std::invalid_argument);
    CHECK(series_mul(p, p).coeffs == ints({1, 2, 1}));
}

TEST_CASE("b-file output") {
    const std::string text = to_bfile(ints({1, -2, 3}), 0);
    CHECK(text == "# offset 0\n0 1\n1 -2\n2 3\n");
}
