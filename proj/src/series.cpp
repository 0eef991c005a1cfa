#include "updown/series.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "updown/basis_poly.hpp"
#include "updown/signature.hpp"

namespace updown {

void SeriesPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    r.normalize();
    return r;
}

SeriesPoly series_mul_one_minus_pow(const SeriesPoly& a, std::uint64_t d) {
    SeriesPoly r;
    if (a.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + d, Integer(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        r.coeffs[i] += a.coeffs[i];
        r.coeffs[i + d] -= a.coeffs[i];
    }
    r.normalize();
    return r;
}

SeriesPoly series_div_one_minus_pow(const SeriesPoly& a, std::uint64_t d) {
    // (1 - x^d) q = a  =>  q_j = a_j + q_{j-d}
    if (a.coeffs.empty()) return {};
    if (a.coeffs.size() <= d) throw std::invalid_argument("series division: degree too small");
    SeriesPoly q;
    q.coeffs.assign(a.coeffs.size() - d, Integer(0));
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        Integer v = a.coeffs[j];
        if (j >= d && j - d < q.coeffs.size()) v += q.coeffs[j - d];
        if (j < q.coeffs.size()) {
            q.coeffs[j] = v;
        } else if (v != 0) {
            throw std::invalid_argument("series division: nonzero remainder");
        }
    }
    q.normalize();
    return q;
}

SeriesPoly pn_polynomial(int n, int n_limit) {
    if (n < 1) throw std::invalid_argument("pn_polynomial: order must be positive");
    if (n > n_limit) throw BudgetError("pn_polynomial: n exceeds the degree budget");
    std::vector<SeriesPoly> p(static_cast<std::size_t>(n) + 1);
    p[1].coeffs = {Integer(1)};
    for (int h = 2; h <= n; ++h) {
        // full product (1-x)(1-x^2)...(1-x^(2^(h-1)))
        SeriesPoly num;
        num.coeffs = {Integer(1)};
        for (int i = 0; i <= h - 1; ++i) num = series_mul_one_minus_pow(num, std::uint64_t(1) << i);
        for (int i = 1; i <= h - 1; ++i) {
            SeriesPoly term = p[static_cast<std::size_t>(i)];
            // shift by x^(2^(i-1))
            term.coeffs.insert(term.coeffs.begin(), std::size_t(1) << (i - 1), Integer(0));
            for (int j = i; j <= h - 1; ++j) term = series_mul_one_minus_pow(term, std::uint64_t(1) << j);
            const Integer c = binomial(h, i);
            SeriesPoly scaled;
            scaled.coeffs.reserve(term.coeffs.size());
            for (const Integer& v : term.coeffs) scaled.coeffs.push_back(c * v);
            SeriesPoly sum;
            sum.coeffs.assign(std::max(num.coeffs.size(), scaled.coeffs.size()), Integer(0));
            for (std::size_t j = 0; j < num.coeffs.size(); ++j) sum.coeffs[j] += num.coeffs[j];
            for (std::size_t j = 0; j < scaled.coeffs.size(); ++j) sum.coeffs[j] += scaled.coeffs[j];
            sum.normalize();
            num = std::move(sum);
        }
        p[static_cast<std::size_t>(h)] = series_div_one_minus_pow(num, std::uint64_t(1) << (h - 1));
    }
    return p[static_cast<std::size_t>(n)];
}

int gf_default_order(int n) { return (1 << (n - 1)) + 16; }

bool gf_quotient_check(int n, int order) {
    if (n < 1 || n > 6) throw BudgetError("gf_quotient_check: n out of budget");
    const int cap = std::max(1 << (n + 2), gf_default_order(n));
    if (order < 1 || order > cap) throw BudgetError("gf_quotient_check: order out of budget");
    // left side: prefix of F(n, x) from the formal values
    SeriesPoly f;
    f.coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) f.coeffs.push_back(formal_value(n, static_cast<std::uint64_t>(k)));
    // right side: P_n(x) * prod_{i >= n, 2^i <= order} (1 - x^(2^i))
    SeriesPoly rhs = pn_polynomial(n);
    for (int i = n; (std::uint64_t(1) << i) <= static_cast<std::uint64_t>(order); ++i)
        rhs = series_mul_one_minus_pow(rhs, std::uint64_t(1) << i);
    for (int k = 0; k <= order; ++k)
        if (f.coeff(static_cast<std::size_t>(k)) != rhs.coeff(static_cast<std::size_t>(k))) return false;
    return true;
}

std::pair<Integer, Integer> partial_sum_check(int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("partial_sum_check: need 1 <= r <= n-1");
    Integer sum = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << r); ++k) sum += evaluate(construct(k), n);
    return {sum, falling_factorial(n, r)};
}

Integer euler_determinant(int m, int m_limit) {
    if (m < 1) throw std::invalid_argument("euler_determinant: m must be positive");
    if (m > m_limit) throw BudgetError("euler_determinant: m exceeds budget");
    std::vector<int> ts;
    for (int t = 2 * m - 1; t >= 1; t -= 2) ts.push_back(t);
    return det_exact(det40_matrix(2 * m, ts));
}

Integer tangent_determinant(int m, int m_limit) {
    if (m < 2) throw std::invalid_argument("tangent_determinant: m must be at least 2");
    if (m > m_limit) throw BudgetError("tangent_determinant: m exceeds budget");
    std::vector<int> ts;
    for (int t = 2 * m - 2; t >= 2; t -= 2) ts.push_back(t);
    return det_exact(det40_matrix(2 * m - 1, ts));
}

Rational bernoulli_recover(int m, int m_limit) {
    Integer d = tangent_determinant(m, m_limit);
    Integer denom = ((Integer(1) << (2 * m)) - 1) << (2 * m);
    return make_rational(d * 2 * m, denom);
}

Rational bernoulli_number(int m) {
    if (m < 1) throw std::invalid_argument("bernoulli_number: m must be positive");
    const int n = 2 * m;
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) row[static_cast<std::size_t>(j)] = make_rational(1, j + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            row[static_cast<std::size_t>(j)] =
                Rational(j + 1) * (row[static_cast<std::size_t>(j)] - row[static_cast<std::size_t>(j) + 1]);
    return row[0];
}

std::vector<Integer> tan_sec_coefficients(int n_max, int n_limit) {
    if (n_max < 0) throw std::invalid_argument("tan_sec_coefficients: negative length");
    if (n_max > n_limit) throw BudgetError("tan_sec_coefficients: n exceeds budget");
    // Boustrophedon transform of (1, 0, 0, ...):
    //   T(n, 0) = [n == 0], T(n, j) = T(n, j-1) + T(n-1, n-j), a_n = T(n, n).
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<Integer> prev;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        row[0] = (n == 0) ? 1 : 0;
        for (int j = 1; j <= n; ++j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + prev[static_cast<std::size_t>(n - j)];
        out.push_back(row.back());
        prev = std::move(row);
    }
    return out;
}

std::vector<Integer> concatenation_sequence(std::uint64_t length) {
    std::vector<Integer> out;
    out.reserve(length);
    for (std::uint64_t k = 1; k <= length; ++k) {
        const int a = std::bit_width(k);
        out.push_back(formal_value(a, k - (std::uint64_t(1) << (a - 1))));
    }
    return out;
}

SeriesPoly thue_morse_product(int n) {
    if (n < 1) throw std::invalid_argument("thue_morse_product: order must be positive");
    SeriesPoly p;
    p.coeffs = {Integer(1)};
    for (int i = 0; i <= n - 2; ++i) p = series_mul_one_minus_pow(p, std::uint64_t(1) << i);
    return p;
}

std::string to_bfile(const std::vector<Integer>& coeffs, long offset) {
    std::ostringstream out;
    out << "# offset " << offset << "\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (offset + static_cast<long>(i)) << ' ' << coeffs[i].get_str() << "\n";
    return out.str();
}

}  // namespace updown
