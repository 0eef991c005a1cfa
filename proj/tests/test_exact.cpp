#include <doctest.h>

#include <random>

#include "updown/exact.hpp"

using namespace updown;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Integer det_cofactor(const ExactMatrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(0, 0);
    Integer acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        ExactMatrix sub(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Integer term = m.at(0, j) * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

}  // namespace

TEST_CASE("generalized binomials") {
    CHECK(binomial_general(5, 2) == 10);
    CHECK(binomial_general(-1, 2) == 1);
    CHECK(binomial_general(3, 5) == 0);
    CHECK(binomial_general(7, 0) == 1);
    CHECK(binomial_general(-4, 3) == -20);

    CHECK(falling_factorial(6, 3) == 120);
    CHECK(falling_factorial(9, 0) == 1);
    CHECK(falling_factorial(-3, 0) == 1);
    CHECK(falling_factorial(4, 5) == 0);

    // binomial_general(x, t) * t! = falling_factorial(x, t)
    for (long x = -8; x <= 8; ++x)
        for (long t = 0; t <= 6; ++t) CHECK(binomial_general(x, t) * factorial(t) == falling_factorial(x, t));

    // agreement with the library binomial on the common domain
    for (long n = 0; n <= 12; ++n)
        for (long t = 0; t <= 12; ++t) CHECK(binomial(n, t) == binomial_general(n, t));
}

TEST_CASE("exact determinants") {
    ExactMatrix id3(3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    CHECK(det_exact(id3) == 1);

    // Euler matrix at m = 2: [[1,4,4],[1,1,3],[1,0,1]]
    ExactMatrix e4(3, {Integer(1), Integer(4), Integer(4), Integer(1), Integer(1), Integer(3), Integer(1),
                       Integer(0), Integer(1)});
    CHECK(det_exact(e4) == 5);

    ExactMatrix two(2, {Integer(1), Integer(1), Integer(1), Integer(10)});
    CHECK(det_exact(two) == 9);

    // zero pivot forces a row swap
    ExactMatrix sw(2, {Integer(0), Integer(1), Integer(1), Integer(0)});
    CHECK(det_exact(sw) == -1);
    ExactMatrix singular(2, {Integer(0), Integer(0), Integer(3), Integer(4)});
    CHECK(det_exact(singular) == 0);

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        ExactMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        CHECK(det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("rank") {
    ExactMatrix m(3, {Integer(1), Integer(2), Integer(3), Integer(2), Integer(4), Integer(6), Integer(0), Integer(1),
                      Integer(1)});
    CHECK(rank_exact(m) == 2);
    ExactMatrix id2(2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(rank_exact(id2) == 2);
}

TEST_CASE("thue-morse signs") {
    CHECK(thue_morse(0) == 1);
    CHECK(thue_morse(3) == 1);
    CHECK(thue_morse(21) == -1);  // 10101, three ones
    for (std::uint64_t k = 0; k <= 10000; ++k) {
        CHECK(thue_morse(2 * k) == thue_morse(k));
        CHECK(thue_morse(2 * k + 1) == -thue_morse(k));
    }
}

TEST_CASE("rationals and monomial polynomials") {
    Rational half = make_rational(3, 6);
    CHECK(half == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-2, -4).get_str() == "1/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    // C(x, 3) = x(x-1)(x-2)/6
    MonomialPoly c3 = binomial_poly(3);
    CHECK(c3.degree() == 3);
    for (long x = -5; x <= 8; ++x) CHECK(eval_rational(c3, Rational(x)) == Rational(binomial_general(x, 3)));

    MonomialPoly lin;  // x - 1
    lin.coeffs = {Rational(-1), Rational(1)};
    CHECK(eval_rational(lin, Rational(1)) == 0);
    CHECK(eval_rational(lin, Rational(0)) == -1);

    MonomialPoly prod = mono_mul(lin, lin);
    CHECK(prod.coeffs == std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
    CHECK(mono_derivative(prod).coeffs == std::vector<Rational>{Rational(-2), Rational(2)});

    MonomialPoly zero;
    CHECK(mono_mul(zero, lin).is_zero());
    CHECK(eval_rational(zero, Rational(7)) == 0);
}
