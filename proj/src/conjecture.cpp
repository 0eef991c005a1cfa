#include "updown/conjecture.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "updown/alternant.hpp"
#include "updown/basis_poly.hpp"
#include "updown/oracle.hpp"
#include "updown/signature.hpp"

namespace updown {

namespace {

MonomialPoly mono_monic(MonomialPoly p) {
    p.normalize();
    if (p.is_zero()) return p;
    const Rational lead = p.coeffs.back();
    for (auto& c : p.coeffs) c /= lead;
    return p;
}

// Remainder of a by b over the rationals.
MonomialPoly mono_rem(MonomialPoly a, const MonomialPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("mono_rem: division by zero polynomial");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rational f = a.coeffs.back() / b.coeffs.back();
        const int shift = a.degree() - b.degree();
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            a.coeffs[static_cast<std::size_t>(shift) + i] -= f * b.coeffs[i];
        a.normalize();
    }
    return a;
}

MonomialPoly mono_gcd(MonomialPoly a, MonomialPoly b) {
    a = mono_monic(std::move(a));
    b = mono_monic(std::move(b));
    while (!b.is_zero()) {
        MonomialPoly r = mono_rem(a, b);
        a = std::move(b);
        b = mono_monic(std::move(r));
    }
    return a;
}

MonomialPoly mono_div_exact(const MonomialPoly& a, const MonomialPoly& b) {
    MonomialPoly rem = a;
    MonomialPoly q;
    if (a.is_zero()) return q;
    q.coeffs.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const Rational f = rem.coeffs.back() / b.coeffs.back();
        const int shift = rem.degree() - b.degree();
        q.coeffs[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            rem.coeffs[static_cast<std::size_t>(shift) + i] -= f * b.coeffs[i];
        rem.normalize();
    }
    if (!rem.is_zero()) throw std::logic_error("mono_div_exact: nonzero remainder");
    q.normalize();
    return q;
}

MonomialPoly squarefree_part(const MonomialPoly& p) {
    MonomialPoly g = mono_gcd(p, mono_derivative(p));
    if (g.degree() <= 0) return p;
    return mono_div_exact(p, g);
}

int sign_of(const Rational& q) { return sgn(q); }

int sign_variations_at(const std::vector<MonomialPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sign_of(eval_rational(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

Rational cauchy_bound(const MonomialPoly& p) {
    Rational maxq(0);
    const Rational lead = p.coeffs.back();
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
        Rational q = abs(p.coeffs[i] / lead);
        if (q > maxq) maxq = q;
    }
    return Rational(1) + maxq;
}

std::vector<MonomialPoly> sturm_chain(const MonomialPoly& p) {
    std::vector<MonomialPoly> chain;
    chain.push_back(p);
    MonomialPoly d = mono_derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        MonomialPoly r = mono_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        for (auto& c : r.coeffs) c = -c;
        chain.push_back(std::move(r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

// Divisors of |v|; v must fit an unsigned 64-bit word.
std::vector<std::uint64_t> divisors(const Integer& v) {
    Integer a = abs(v);
    if (!a.fits_ulong_p()) throw BudgetError("rational_roots: coefficient too large for divisor scan");
    std::uint64_t x = a.get_ui();
    std::vector<std::pair<std::uint64_t, int>> fac;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            int e = 0;
            while (x % d == 0) {
                x /= d;
                ++e;
            }
            fac.push_back({d, e});
        }
    }
    if (x > 1) fac.push_back({x, 1});
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, mult] : fac) {
        const std::size_t base = out.size();
        std::uint64_t pw = 1;
        for (int e = 1; e <= mult; ++e) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Clear denominators and content: primitive integer coefficients.
std::vector<Integer> primitive_integer_coeffs(const MonomialPoly& p) {
    Integer lcm = 1;
    for (const auto& c : p.coeffs) {
        Integer den = c.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<Integer> out;
    out.reserve(p.coeffs.size());
    Integer content = 0;
    for (const auto& c : p.coeffs) {
        Integer v = Integer(c.get_num()) * (lcm / Integer(c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

}  // namespace

int sturm_distinct_real_roots(const MonomialPoly& p) {
    MonomialPoly s = squarefree_part(p);
    s.normalize();
    if (s.degree() <= 0) return 0;
    const auto chain = sturm_chain(s);
    const Rational b = cauchy_bound(s);
    return sign_variations_at(chain, Rational(-b)) - sign_variations_at(chain, b);
}

int real_roots_with_multiplicity(const MonomialPoly& p) {
    // Each root of multiplicity m is a root of the first m entries of the
    // chain p, gcd(p, p'), gcd(...), ...
    int total = 0;
    MonomialPoly g = p;
    g.normalize();
    while (g.degree() > 0) {
        total += sturm_distinct_real_roots(g);
        g = mono_gcd(g, mono_derivative(g));
    }
    return total;
}

std::vector<Rational> rational_roots(const MonomialPoly& p) {
    std::vector<Rational> roots;
    MonomialPoly q = p;
    q.normalize();
    if (q.degree() <= 0) return roots;
    std::vector<Integer> ic = primitive_integer_coeffs(q);
    // factor out x^v
    std::size_t shift = 0;
    while (shift < ic.size() && ic[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        ic.erase(ic.begin(), ic.begin() + static_cast<long>(shift));
    }
    if (ic.size() <= 1) return roots;
    MonomialPoly primitive;
    primitive.coeffs.reserve(ic.size());
    for (const auto& v : ic) primitive.coeffs.emplace_back(v);
    const Rational bound = cauchy_bound(primitive);
    for (std::uint64_t num : divisors(ic.front())) {
        for (std::uint64_t den : divisors(ic.back())) {
            Rational cand = make_rational(num, den);
            if (cand > bound) continue;
            for (int sign = 0; sign < 2; ++sign) {
                const Rational x = sign ? Rational(-cand) : cand;
                if (eval_rational(primitive, x) == 0) roots.push_back(x);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

RootProfile real_root_profile(std::uint64_t k, std::uint64_t k_limit) {
    if (k < 1) throw std::invalid_argument("real_root_profile: k must be positive");
    if (k > k_limit) throw BudgetError("real_root_profile: k exceeds budget");
    RootProfile out;
    out.k = k;
    const BasisPolynomial bp = construct(k);
    out.degree = bp.degree();
    out.zero_bits = out.degree - std::popcount(k);
    MonomialPoly p = to_monomial(bp);
    out.distinct_real = sturm_distinct_real_roots(p);
    out.real_with_multiplicity = real_roots_with_multiplicity(p);
    out.rationals = rational_roots(p);
    out.all_real = out.real_with_multiplicity == out.degree;
    return out;
}

std::vector<std::uint64_t> minus_one_root_scan(std::uint64_t k_max, std::uint64_t k_limit) {
    if (k_max > k_limit) throw BudgetError("minus_one_root_scan: k exceeds budget");
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 1; k <= k_max; ++k)
        if (evaluate(construct(k), -1) == 0) out.push_back(k);
    return out;
}

DerangementReport derangement_report(int n, int n_limit) {
    DerangementReport rep;
    rep.n = n;
    rep.d_search = alternating_derangements(n, n_limit);
    const PositionMask mask = PositionMask::no_fixed_point(n);
    rep.d_alternant = alt_memoized(mask.to_matrix(), alternating_signature(n));
    if (rep.d_search != rep.d_alternant)
        throw std::logic_error("derangement_report: dual computation disagrees");
    rep.a_n = evaluate(construct(alternating_index(n)), n);
    rep.ratio = make_rational(rep.d_search, rep.a_n);
    return rep;
}

StirlingReport stirling_report(int n, int l, int n_limit) {
    StirlingReport rep;
    rep.n = n;
    rep.l = l;
    rep.count = alternating_stirling(n, l, n_limit);
    rep.a_n = evaluate(construct(alternating_index(n)), n);
    const double num = static_cast<double>(n) * rep.count.get_d();
    const double den = rep.a_n.get_d() * std::pow(std::log(static_cast<double>(n)), l - 1);
    rep.ratio = den == 0 ? 0.0 : num / den;
    return rep;
}

std::string root_profile_csv_header() { return "k,degree,real_count,all_real,zero_bits,rational_roots"; }

std::string root_profile_csv_line(const RootProfile& p) {
    std::ostringstream out;
    out << p.k << ',' << p.degree << ',' << p.real_with_multiplicity << ',' << (p.all_real ? 1 : 0) << ','
        << p.zero_bits << ',';
    for (std::size_t i = 0; i < p.rationals.size(); ++i) {
        if (i) out << ';';
        out << p.rationals[i].get_str();
    }
    return out.str();
}

}  // namespace updown
