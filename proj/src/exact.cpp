#include "updown/exact.hpp"

#include <bit>
#include <utility>

namespace updown {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer falling_factorial(long n, long r) {
    if (r < 0) throw std::invalid_argument("falling_factorial: negative length");
    Integer acc = 1;
    for (long i = 0; i < r; ++i) acc *= Integer(n - i);
    return acc;
}

Integer binomial_general(long x, long t) {
    if (t < 0) throw std::invalid_argument("binomial_general: negative lower index");
    if (t == 0) return 1;
    Integer num = falling_factorial(x, t);
    if (num == 0) return 0;
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(t).get_mpz_t());
    return q;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int thue_morse(std::uint64_t k) {
    return (std::popcount(k) & 1) ? -1 : 1;
}

Integer det_exact(ExactMatrix m) {
    const int n = m.order();
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m.at(r, k) != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Exact by the Bareiss identity: prev divides v.
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Integer(-m.at(n - 1, n - 1));
}

int rank_exact(const ExactMatrix& m) {
    const int n = m.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

void MonomialPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

MonomialPoly mono_add(const MonomialPoly& a, const MonomialPoly& b) {
    MonomialPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.normalize();
    return r;
}

MonomialPoly mono_scale(const MonomialPoly& a, const Rational& c) {
    if (c == 0) return {};
    MonomialPoly r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

MonomialPoly mono_mul(const MonomialPoly& a, const MonomialPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    MonomialPoly r;
    r.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.normalize();
    return r;
}

MonomialPoly mono_derivative(const MonomialPoly& a) {
    MonomialPoly r;
    if (a.coeffs.size() <= 1) return r;
    r.coeffs.resize(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) r.coeffs[i - 1] = a.coeffs[i] * Rational(static_cast<long>(i));
    r.normalize();
    return r;
}

MonomialPoly binomial_poly(int t) {
    if (t < 0) throw std::invalid_argument("binomial_poly: negative index");
    MonomialPoly p;
    p.coeffs = {Rational(1)};
    for (int i = 0; i < t; ++i) {
        // multiply by (x - i)
        MonomialPoly q;
        q.coeffs.assign(p.coeffs.size() + 1, Rational(0));
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
            q.coeffs[j + 1] += p.coeffs[j];
            q.coeffs[j] -= Rational(i) * p.coeffs[j];
        }
        p = std::move(q);
    }
    return mono_scale(p, make_rational(1, factorial(t)));
}

Rational eval_rational(const MonomialPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace updown
