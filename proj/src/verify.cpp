#include "updown/verify.hpp"

#include <algorithm>
#include <sstream>

#include "updown/alternant.hpp"
#include "updown/oracle.hpp"
#include "updown/series.hpp"
#include "updown/triangle.hpp"

namespace updown {

namespace {

struct Checker {
    VerifyReport report;

    void check(bool ok, const std::string& what) {
        if (ok) {
            ++report.passed;
        } else {
            ++report.failed;
            report.failures.push_back(what);
        }
    }
};

}  // namespace

void VerifyReport::merge(const VerifyReport& other) {
    passed += other.passed;
    failed += other.failed;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

int reference_mismatches(const std::vector<BasisPolynomial>& table) {
    int bad = 0;
    for (const auto& p : table)
        if (construct(p.k) != p) ++bad;
    return bad;
}

VerifyReport verify_core(int n_max) {
    if (n_max < 1 || n_max > 10) throw BudgetError("verify core: n-max out of budget (1..10)");
    Checker c;

    {
        std::vector<BasisPolynomial> table(reference_polynomials().begin(), reference_polynomials().end());
        c.check(reference_mismatches(table) == 0, "reference table vs construct");
        bool methods_agree = true;
        for (std::uint64_t k = 0; k <= 256; ++k) {
            const BasisPolynomial ref = construct(k, ConstructMethod::recursion37);
            for (auto m : {ConstructMethod::explicit15, ConstructMethod::symmetric30, ConstructMethod::system46,
                           ConstructMethod::step47})
                if (construct(k, m) != ref) methods_agree = false;
        }
        c.check(methods_agree, "five construction methods agree, k <= 256");
    }

    for (int n = 1; n <= n_max; ++n) {
        const auto table = counts_all(n);
        Integer total = 0;
        bool routes_ok = true, symmetric = true, round_trip = true, witness_ok = true;
        for (std::uint64_t k = 0; k < table.size(); ++k) {
            total += table[k];
            const Signature sig = decode_index(n, k);
            if (encode_index(sig).k != k) round_trip = false;
            if (count_signature(sig) != table[k]) routes_ok = false;
            if (count_by_triangle(sig) != table[k]) routes_ok = false;
            if (alt_memoized(weight_ones(n), sig) != table[k]) routes_ok = false;
            for (auto route : {ValueRoute::niven1, ValueRoute::det14, ValueRoute::det40, ValueRoute::lambda66,
                               ValueRoute::poly})
                if (value(n, k, route) != table[k]) routes_ok = false;
            if (table[k] != table[complement_index(n, k)]) symmetric = false;
            const Permutation w = witness_permutation(n, k);
            if (encode_index(signature_of(w)).k != k) witness_ok = false;
        }
        std::string tag = " (n=" + std::to_string(n) + ")";
        c.check(total == factorial(n), "counts sum to n!" + tag);
        c.check(routes_ok, "all value routes match the oracle" + tag);
        c.check(symmetric, "complement symmetry" + tag);
        c.check(round_trip, "encode/decode round trip" + tag);
        c.check(witness_ok, "witness permutations re-encode" + tag);
    }
    return c.report;
}

VerifyReport verify_identities(int n_max) {
    if (n_max < 2 || n_max > 14) throw BudgetError("verify identities: n-max out of budget (2..14)");
    Checker c;

    for (int n = 2; n <= n_max; ++n) {
        bool ok = true;
        for (int r = 1; r <= n - 1 && r <= 20; ++r) {
            auto [sum, prod] = partial_sum_check(n, r);
            if (sum != prod) ok = false;
        }
        c.check(ok, "partial sums equal falling factorials (n=" + std::to_string(n) + ")");
    }

    {
        bool ok = true;
        for (int n = 2; n <= n_max; ++n)
            for (int m = 1; m <= n - 1; ++m) {
                std::vector<int> ts;
                for (int t = m; t >= 1; --t) ts.push_back(t);
                if (det_exact(det14_matrix(n, ts)) != binomial(n - 1, m)) ok = false;
            }
        c.check(ok, "binomial-identity determinant equals C(n-1, m)");
    }

    {
        bool ok = true;
        for (int m = 1; m <= 6; ++m) {
            const Integer e = euler_determinant(m);
            Integer ref = evaluate(construct(alternating_index(2 * m)), 2 * m);
            if (m % 2) ref = -ref;
            if (e != ref) ok = false;
        }
        c.check(ok && euler_determinant(1) == -1 && euler_determinant(2) == 5, "Euler determinants");
    }
    {
        bool ok = tangent_determinant(2) == -2 && tangent_determinant(3) == 16;
        for (int m = 2; m <= 6; ++m)
            if (bernoulli_recover(m) != bernoulli_number(m)) ok = false;
        c.check(ok, "tangent determinants and Bernoulli recovery");
    }
    {
        const auto seidel = tan_sec_coefficients(std::min(n_max, 14));
        bool ok = true;
        for (int n = 1; n < static_cast<int>(seidel.size()); ++n)
            if (seidel[static_cast<std::size_t>(n)] != evaluate(construct(alternating_index(n)), n)) ok = false;
        c.check(ok, "Seidel zigzag numbers match the alternating indices");
    }

    for (int n = 1; n <= std::min(n_max, 10); ++n) {
        const SeriesPoly p = pn_polynomial(n);
        bool ok = p.degree() == (1 << (n - 1)) - 1;
        Integer at1 = 0;
        for (const auto& v : p.coeffs) at1 += v;
        ok = ok && at1 == factorial(n);
        for (std::size_t k = 0; k < p.coeffs.size(); ++k)
            if (p.coeffs[k] != p.coeffs[p.coeffs.size() - 1 - k]) ok = false;
        if (n <= 6) ok = ok && gf_quotient_check(n, gf_default_order(n));
        c.check(ok, "P_n degree, value at 1, symmetry, quotient (n=" + std::to_string(n) + ")");
    }

    {
        bool ok = true;
        for (int n = 2; n <= 7; ++n) {
            const SeriesPoly prod = thue_morse_product(n);
            for (std::uint64_t k = 0; k < (std::uint64_t(1) << (n - 1)); ++k)
                if (prod.coeff(k) != thue_morse(k)) ok = false;
        }
        c.check(ok, "Thue-Morse partial product coefficients");
    }

    {
        bool ok = true;
        for (int m = 1; m <= 8; ++m) {
            const BasisPolynomial p = construct((std::uint64_t(1) << m) - 1);
            if (evaluate(p, 2 * m) != binomial(2 * m - 1, m)) ok = false;
            if (evaluate(p, 2 * m + 1) != binomial(2 * m, m)) ok = false;
        }
        c.check(ok, "central values match central binomial coefficients");
    }

    {
        bool ok = true;
        for (int a = 1; a <= 6; ++a) {
            Integer period_max = 0, long_max = 0;
            for (std::uint64_t k = 0; k < (std::uint64_t(1) << a); ++k) {
                Integer v = abs(formal_value(a, k));
                if (v > period_max) period_max = v;
            }
            for (std::uint64_t k = 0; k <= (std::uint64_t(1) << (a + 4)); ++k) {
                Integer v = abs(formal_value(a, k));
                if (v > long_max) long_max = v;
            }
            if (period_max != long_max) ok = false;
        }
        c.check(ok, "formal rows bounded by one period");
    }

    {
        bool ok = true;
        for (std::uint64_t k = 1; k <= 512; ++k) {
            const int top = degree_of_index(k);
            for (int i = 1; i <= top; ++i)
                if (((k >> (i - 1)) & 1) == 0 && formal_value(i, k - (std::uint64_t(1) << (i - 1))) != 0) ok = false;
        }
        c.check(ok, "vanishing corollary at non-exponent positions, k <= 512");
    }

    {
        bool ok = true;
        for (std::uint64_t k = 1; k <= 512; ++k) {
            const LambdaIndexSet ls = lambda_set(k);
            std::vector<int> exp_sorted = exponents(k);
            std::sort(exp_sorted.begin(), exp_sorted.end());
            if (ls.members != exp_sorted) ok = false;
            // tau of lambda at t_j is (-1)^(j-1) with exponents descending
            for (std::size_t idx = 0; idx < ls.members.size(); ++idx) {
                const std::size_t j = ls.members.size() - idx;  // 1-based rank from the top
                if (thue_morse(ls.lambda[idx]) != ((j % 2 == 1) ? 1 : -1)) ok = false;
            }
        }
        c.check(ok, "lambda index set equals the exponent set, k <= 512");
    }

    return c.report;
}

VerifyReport verify_roots(int n_max) {
    if (n_max < 1 || n_max > 12) throw BudgetError("verify roots: n-max out of budget (1..12)");
    Checker c;

    {
        bool ok = true;
        for (std::uint64_t k = 1; k <= 256; ++k)
            if (positive_roots(k) != exponents(k)) ok = false;
        c.check(ok, "positive integer roots equal the exponents, k <= 256");
    }

    {
        bool ok = true;
        for (std::uint64_t k = 1; k <= 64; ++k) {
            const std::vector<int> ts = exponents(k);
            for (int n = 1; n <= n_max; ++n) {
                const bool is_exp = std::find(ts.begin(), ts.end(), n) != ts.end();
                if (rank_check(n, k) != !is_exp) ok = false;
            }
        }
        c.check(ok, "rank drops exactly at the exponents, k <= 64");
    }

    {
        bool ok = true;
        for (int a = 1; a <= 8; ++a)
            for (std::uint64_t k = 0; k <= 2048; ++k) {
                const std::uint64_t i = k & ((std::uint64_t(1) << a) - 1);
                const bool upper_half = i >= (std::uint64_t(1) << (a - 1));
                if ((formal_value(a, k) == 0) != upper_half) ok = false;
            }
        c.check(ok, "formal zeros exactly on the upper half-period");
    }

    {
        bool ok = true;
        for (long n : {5L, 7L, 11L, 13L}) {
            for (std::uint64_t k = 0; degree_of_index(k) < n && k < (std::uint64_t(1) << (n - 1)); ++k) {
                const CongruenceResult r = congruence_residue(n, k);
                if (!r.applicable) ok = false;
                const long expect = thue_morse(k) > 0 ? 1 : n - 1;
                if (r.residue != expect) ok = false;
            }
        }
        c.check(ok, "prime congruence rows for n in {5, 7, 11, 13}");
    }

    {
        bool ok = true;
        for (std::uint64_t k = 0; k <= 64; ++k) {
            const auto rec = recognize(to_monomial(construct(k)));
            if (!rec || rec->k != k || rec->constant != 1) ok = false;
        }
        c.check(ok, "recognition round trip, k <= 64");
    }

    return c.report;
}

VerifyReport verify_all(int n_max) {
    VerifyReport report = verify_core(std::min(n_max, 10));
    report.merge(verify_identities(std::clamp(n_max, 2, 14)));
    report.merge(verify_roots(std::min(n_max, 12)));
    return report;
}

}  // namespace updown
