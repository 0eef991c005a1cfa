#include "updown/basis_poly.hpp"

#include <bit>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

namespace updown {

namespace {

constexpr int kMaxExp = 62;

void check_index_range(std::uint64_t k) {
    if (std::bit_width(k) > kMaxExp) throw std::invalid_argument("index k above supported range");
}

BasisPolynomial assemble(std::uint64_t k, std::vector<Integer> coeffs) {
    BasisPolynomial p;
    p.k = k;
    p.exps = exponents(k);
    p.coeffs = std::move(coeffs);
    p.constant = (p.exps.size() % 2 == 0) ? 1 : -1;
    return p;
}

BasisPolynomial construct_recursion37(std::uint64_t k);

// Closed-form route: the explicit sum over increasing index chains,
// evaluated at n = 0..t and converted to the binomial basis by Newton
// forward differences.
BasisPolynomial construct_explicit15(std::uint64_t k) {
    if (k == 0) return assemble(0, {});
    const UpDownIndex idx = make_updown_index(k);
    const int m = idx.ones();
    const int t = idx.exponents.front();
    const auto& s = idx.places;

    auto value_at = [&](long n) {
        Integer acc = (m % 2 == 0) ? 1 : -1;
        for (std::uint32_t set = 1; set < (std::uint32_t(1) << m); ++set) {
            std::vector<int> pick;
            for (int i = 0; i < m; ++i)
                if (set & (std::uint32_t(1) << i)) pick.push_back(i);
            const int p = static_cast<int>(pick.size());
            Integer term = binomial_general(n, t + 1 - s[pick.back()]);
            for (int r = 1; r < p && term != 0; ++r)
                term *= binomial_general(n - t + s[pick[r]] - 1, s[pick[r]] - s[pick[r - 1]]);
            if ((m - p) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    };

    std::vector<Integer> vals(static_cast<std::size_t>(t) + 1);
    for (int n = 0; n <= t; ++n) vals[static_cast<std::size_t>(n)] = value_at(n);

    // d_r = sum_j (-1)^j C(r,j) P(r-j)
    std::vector<Integer> diff(static_cast<std::size_t>(t) + 1);
    for (int r = 0; r <= t; ++r) {
        Integer d = 0;
        for (int j = 0; j <= r; ++j) {
            Integer term = binomial(r, j) * vals[static_cast<std::size_t>(r - j)];
            if (j % 2 == 0)
                d += term;
            else
                d -= term;
        }
        diff[static_cast<std::size_t>(r)] = d;
    }

    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    for (int tp : idx.exponents) coeffs.push_back(diff[static_cast<std::size_t>(tp)]);
    BasisPolynomial p = assemble(k, std::move(coeffs));
    if (vals[0] != p.constant) throw std::logic_error("explicit15: constant term mismatch");
    for (int r = 1; r <= t; ++r) {
        bool is_exp = (k >> (r - 1)) & 1;
        if (!is_exp && diff[static_cast<std::size_t>(r)] != 0)
            throw std::logic_error("explicit15: unexpected binomial-basis coefficient");
    }
    return p;
}

// Symmetric-function route: alternating sum of chain products of
// binomials, grouped by the head of each chain.
BasisPolynomial construct_symmetric30(std::uint64_t k) {
    if (k == 0) return assemble(0, {});
    const std::vector<int> ts = exponents(k);
    const int m = static_cast<int>(ts.size());
    const int msign = (m % 2 == 0) ? 1 : -1;
    std::vector<Integer> coeffs(static_cast<std::size_t>(m), Integer(0));
    for (std::uint32_t set = 1; set < (std::uint32_t(1) << m); ++set) {
        std::vector<int> pick;
        for (int i = 0; i < m; ++i)
            if (set & (std::uint32_t(1) << i)) pick.push_back(i);
        Integer chain = 1;
        for (std::size_t r = 1; r < pick.size(); ++r) chain *= binomial(ts[pick[r - 1]], ts[pick[r]]);
        const int sign = (pick.size() % 2 == 0) ? msign : -msign;
        coeffs[static_cast<std::size_t>(pick.front())] += sign > 0 ? chain : Integer(-chain);
    }
    return assemble(k, std::move(coeffs));
}

// Linear-system route: the coefficients solve a unit-lower-triangular
// system pinned by the roots at the exponents.
BasisPolynomial construct_system46(std::uint64_t k) {
    if (k == 0) return assemble(0, {});
    const std::vector<int> ts = exponents(k);
    const int m = static_cast<int>(ts.size());
    const Integer msign = (m % 2 == 0) ? 1 : -1;
    // a_i multiplies C(n, t_{m+1-i}); equation i reads
    //   sum_{j<i} C(t_{m-i+1}, t_{m+1-j}) a_j + a_i + (-1)^m = 0.
    std::vector<Integer> a(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        Integer acc = -msign;
        for (int j = 1; j < i; ++j) acc -= binomial(ts[m - i], ts[m - j]) * a[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)] = acc;
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(m));
    for (int p = 1; p <= m; ++p) coeffs[static_cast<std::size_t>(p - 1)] = a[static_cast<std::size_t>(m + 1 - p)];
    return assemble(k, std::move(coeffs));
}

// Step route: add the bits of k in increasing order starting from
// {n\0} = 1; each step costs one evaluation of the previous polynomial.
BasisPolynomial construct_step47(std::uint64_t k) {
    BasisPolynomial p = assemble(0, {});
    std::vector<int> ts = exponents(k);
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const int l = *it;
        Integer lead = evaluate(p, l);  // {l \ current k}
        BasisPolynomial next;
        next.k = p.k + (std::uint64_t(1) << (l - 1));
        next.exps.reserve(p.exps.size() + 1);
        next.exps.push_back(l);
        next.exps.insert(next.exps.end(), p.exps.begin(), p.exps.end());
        next.coeffs.reserve(p.coeffs.size() + 1);
        next.coeffs.push_back(lead);
        for (const Integer& c : p.coeffs) next.coeffs.push_back(-c);
        next.constant = -p.constant;
        p = std::move(next);
    }
    return p;
}

std::mutex memo_mutex;
std::unordered_map<std::uint64_t, BasisPolynomial> construct_memo;

// Recursive route: coefficient p is the formal value at exponent t_p of
// the index with that bit removed; the period-2^a reduction keeps the
// recursion depth at most the number of bits.
BasisPolynomial construct_recursion37(std::uint64_t k) {
    if (k == 0) return assemble(0, {});
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = construct_memo.find(k); it != construct_memo.end()) return it->second;
    }
    const std::vector<int> ts = exponents(k);
    std::vector<Integer> coeffs;
    coeffs.reserve(ts.size());
    for (int tp : ts) coeffs.push_back(formal_value(tp, k - (std::uint64_t(1) << (tp - 1))));
    BasisPolynomial p = assemble(k, std::move(coeffs));
    std::lock_guard<std::mutex> lock(memo_mutex);
    construct_memo.emplace(k, p);
    return p;
}

}  // namespace

BasisPolynomial construct(std::uint64_t k, ConstructMethod method) {
    check_index_range(k);
    switch (method) {
        case ConstructMethod::explicit15: return construct_explicit15(k);
        case ConstructMethod::symmetric30: return construct_symmetric30(k);
        case ConstructMethod::recursion37: return construct_recursion37(k);
        case ConstructMethod::system46: return construct_system46(k);
        case ConstructMethod::step47: return construct_step47(k);
    }
    throw std::invalid_argument("construct: unknown method");
}

Integer evaluate(const BasisPolynomial& p, long n) {
    Integer acc = p.constant;
    for (std::size_t i = 0; i < p.exps.size(); ++i) acc += p.coeffs[i] * binomial_general(n, p.exps[i]);
    return acc;
}

Integer formal_value(int a, std::uint64_t k) {
    if (a < 0 || a > kMaxExp) throw std::invalid_argument("formal_value: order out of range");
    check_index_range(k);
    if (a == 0) return thue_morse(k);
    const std::uint64_t period = std::uint64_t(1) << a;
    const std::uint64_t i = k & (period - 1);
    if (i >= period / 2) return 0;
    const Integer base = (i == 0) ? Integer(1) : evaluate(construct_recursion37(i), a);
    return thue_morse(k - i) > 0 ? base : Integer(-base);
}

ExactMatrix niven_matrix(const Signature& sig) {
    const int n = sig.order();
    std::vector<int> asc;
    for (int i = 1; i < n; ++i)
        if (sig.q(i) == 1) asc.push_back(i);
    const int m = static_cast<int>(asc.size());
    ExactMatrix a(m + 1);
    for (int i = 1; i <= m + 1; ++i) {
        const int row_val = (i <= m) ? asc[static_cast<std::size_t>(i) - 1] : n;
        for (int j = 1; j <= m + 1; ++j) {
            const int col_val = (j == 1) ? 0 : asc[static_cast<std::size_t>(j) - 2];
            a.at(i - 1, j - 1) = binomial(row_val, col_val);
        }
    }
    return a;
}

ExactMatrix det14_matrix(int n, const std::vector<int>& exps) {
    if (exps.empty()) throw std::invalid_argument("det14_matrix: k must be positive");
    const int m = static_cast<int>(exps.size());
    const int t = exps.front();
    std::vector<int> s(static_cast<std::size_t>(m) + 1);  // 1-based places
    for (int i = 1; i <= m; ++i) s[static_cast<std::size_t>(i)] = t - exps[static_cast<std::size_t>(i) - 1] + 1;
    ExactMatrix a(m + 1);
    for (int i = 1; i <= m; ++i) {
        a.at(i - 1, 0) = 1;
        for (int j = 2; j <= m + 1; ++j) {
            if (j == i + 1)
                a.at(i - 1, j - 1) = 1;
            else if (j > i + 1)
                a.at(i - 1, j - 1) = 0;
            else
                a.at(i - 1, j - 1) = binomial_general(n - t + s[static_cast<std::size_t>(i)] - 1,
                                                      s[static_cast<std::size_t>(i)] - s[static_cast<std::size_t>(j) - 1]);
        }
    }
    a.at(m, 0) = 1;
    for (int j = 2; j <= m + 1; ++j)
        a.at(m, j - 1) = binomial_general(n, t + 1 - s[static_cast<std::size_t>(j) - 1]);
    return a;
}

ExactMatrix det40_matrix(long n, const std::vector<int>& exps) {
    if (exps.empty()) throw std::invalid_argument("det40_matrix: k must be positive");
    const int m = static_cast<int>(exps.size());
    ExactMatrix a(m + 1);
    a.at(0, 0) = 1;
    for (int j = 2; j <= m + 1; ++j) a.at(0, j - 1) = binomial_general(n, exps[static_cast<std::size_t>(j) - 2]);
    for (int i = 2; i <= m + 1; ++i) {
        a.at(i - 1, 0) = 1;
        for (int j = 2; j <= m + 1; ++j) {
            if (j < i)
                a.at(i - 1, j - 1) = 0;
            else if (j == i)
                a.at(i - 1, j - 1) = 1;
            else
                a.at(i - 1, j - 1) = binomial(exps[static_cast<std::size_t>(i) - 2], exps[static_cast<std::size_t>(j) - 2]);
        }
    }
    return a;
}

Integer value(int n, std::uint64_t k, ValueRoute route) {
    check_index_range(k);
    switch (route) {
        case ValueRoute::niven1: {
            if (n < 1) throw std::invalid_argument("value: niven1 requires n >= 1");
            return det_exact(niven_matrix(decode_index(n, k)));  // decode validates k < 2^(n-1)
        }
        case ValueRoute::det14: {
            if (n < 1) throw std::invalid_argument("value: det14 requires n >= 1");
            if (n == 1 ? k != 0 : (k >> (n - 1)) != 0)
                throw std::invalid_argument("value: det14 requires k < 2^(n-1)");
            if (k == 0) return 1;
            return det_exact(det14_matrix(n, exponents(k)));
        }
        case ValueRoute::det40: {
            if (n < 0) throw std::invalid_argument("value: det40 requires n >= 0");
            if (k == 0) return 1;
            const std::vector<int> ts = exponents(k);
            Integer d = det_exact(det40_matrix(n, ts));
            return (ts.size() % 2 == 0) ? d : Integer(-d);
        }
        case ValueRoute::lambda66: {
            if (n < 0) throw std::invalid_argument("value: lambda66 requires n >= 0");
            if (k == 0) return 1;
            const LambdaIndexSet ls = lambda_set(k);
            Integer acc = thue_morse(k);
            for (std::size_t idx = 0; idx < ls.members.size(); ++idx) {
                const int i = ls.members[idx];
                const std::uint64_t lam = ls.lambda[idx];
                const std::uint64_t reduced = k - (std::uint64_t(1) << (i - 1)) - (lam << i);
                Integer inner = (reduced == 0) ? Integer(1) : evaluate(construct_recursion37(reduced), i);
                Integer term = binomial_general(n, i) * inner;
                acc += thue_morse(lam) > 0 ? term : Integer(-term);
            }
            return acc;
        }
        case ValueRoute::poly: return evaluate(construct_recursion37(k), n);
    }
    throw std::invalid_argument("value: unknown route");
}

std::vector<int> positive_roots(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("positive_roots: k must be positive");
    const BasisPolynomial p = construct(k);
    std::vector<int> roots;
    // For n > degree the value is a genuine permutation count, hence >= 1.
    for (int n = p.degree(); n >= 1; --n)
        if (evaluate(p, n) == 0) roots.push_back(n);
    return roots;
}

std::optional<Recognition> recognize(const MonomialPoly& p) {
    if (p.is_zero()) return std::nullopt;
    const int l = p.degree();
    std::vector<Rational> at(static_cast<std::size_t>(l) + 1);
    for (int j = 0; j <= l; ++j) at[static_cast<std::size_t>(j)] = eval_rational(p, Rational(j));
    if (at[0] == 0) return std::nullopt;

    std::vector<int> texps;  // positions r with Delta^r P(r) != 0, descending
    for (int r = l; r >= 1; --r) {
        Rational d(0);
        for (int j = 0; j <= r; ++j) {
            Rational term = Rational(binomial(r, j)) * at[static_cast<std::size_t>(r - j)];
            if (j % 2 == 0)
                d += term;
            else
                d -= term;
        }
        if (d != 0) {
            if (at[static_cast<std::size_t>(r)] != 0) return std::nullopt;
            texps.push_back(r);
        }
    }
    std::uint64_t k = 0;
    for (int t : texps) k += std::uint64_t(1) << (t - 1);
    Recognition rec;
    rec.k = k;
    rec.constant = (texps.size() % 2 == 0) ? at[0] : Rational(-at[0]);
    return rec;
}

int degree_of_index(std::uint64_t k) { return k == 0 ? 0 : std::bit_width(k); }

CongruenceResult congruence_residue(long n, std::uint64_t k) {
    if (n < 2) throw std::invalid_argument("congruence_residue: n must be at least 2");
    long spf = 0;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            spf = d;
            break;
        }
    }
    if (spf == 0) spf = n;
    CongruenceResult res;
    res.applicable = spf > degree_of_index(k);
    if (!res.applicable) return res;
    Integer v = evaluate(construct(k), n);
    Integer r = v % n;
    if (r < 0) r += n;
    res.residue = r.get_si();
    long tau = thue_morse(k) > 0 ? 1 % n : (n - 1);
    if (res.residue != tau) throw std::logic_error("congruence_residue: residue does not match the Thue-Morse sign");
    return res;
}

LeadingAsymptotic leading_asymptotic(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("leading_asymptotic: k must be positive");
    LeadingAsymptotic out;
    out.degree = std::bit_width(k);
    out.coefficient = formal_value(out.degree, k - (std::uint64_t(1) << (out.degree - 1)));
    return out;
}

LambdaIndexSet lambda_set(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("lambda_set: k must be positive");
    check_index_range(k);
    LambdaIndexSet out;
    out.k = k;
    const int top = std::bit_width(k);  // log2(2k)
    for (int i = 1; i <= top; ++i) {
        // floor(k/2^i - 1/2) = (2k - 2^i) >> (i+1); nonnegative since 2^i <= 2k
        const std::uint64_t fl = (2 * k - (std::uint64_t(1) << i)) >> (i + 1);
        // ceil((k+1)/2^i - 1) = ceil((k+1-2^i)/2^i)
        const long long num = static_cast<long long>(k) + 1 - (1LL << i);
        const long long den = 1LL << i;
        const long long cl = num >= 0 ? (num + den - 1) / den : -((-num) / den);
        if (cl >= 0 && static_cast<std::uint64_t>(cl) == fl) {
            out.members.push_back(i);
            out.lambda.push_back(fl);
        }
    }
    return out;
}

bool rank_check(int n, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("rank_check: k must be positive");
    const std::vector<int> ts = exponents(k);
    ExactMatrix a = det40_matrix(n, ts);
    return rank_exact(a) == static_cast<int>(ts.size()) + 1;
}

MonomialPoly to_monomial(const BasisPolynomial& p) {
    MonomialPoly acc;
    acc.coeffs = {Rational(p.constant)};
    for (std::size_t i = 0; i < p.exps.size(); ++i)
        acc = mono_add(acc, mono_scale(binomial_poly(p.exps[i]), Rational(p.coeffs[i])));
    return acc;
}

std::string to_text(const BasisPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.exps.size(); ++i) {
        const Integer& c = p.coeffs[i];
        if (i == 0) {
            out += c.get_str();
        } else {
            out += (c < 0) ? " - " : " + ";
            out += Integer(abs(c)).get_str();
        }
        out += "*C(n," + std::to_string(p.exps[i]) + ")";
    }
    if (out.empty()) return p.constant > 0 ? "1" : "-1";
    out += p.constant > 0 ? " + 1" : " - 1";
    return out;
}

std::string to_json(const BasisPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t i = 0; i < p.exps.size(); ++i)
        terms.push_back({p.exps[i], p.coeffs[i].get_str()});
    nlohmann::json j{{"k", p.k}, {"terms", terms}, {"const", p.constant}};
    return j.dump();
}

}  // namespace updown
