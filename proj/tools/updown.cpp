// Command-line front end: exact counts, basis polynomials, identity suites,
// and the conjecture reports, with text/json/csv/bfile output.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "updown/alternant.hpp"
#include "updown/basis_poly.hpp"
#include "updown/conjecture.hpp"
#include "updown/oracle.hpp"
#include "updown/series.hpp"
#include "updown/signature.hpp"
#include "updown/triangle.hpp"
#include "updown/verify.hpp"

using nlohmann::json;
using namespace updown;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json integer_list_json(const std::vector<Integer>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

void print_values_text(const std::vector<Integer>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << values[i].get_str();
    }
    std::cout << '\n';
}

void print_values_csv(const std::vector<Integer>& values, long offset) {
    std::cout << "k,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << offset + static_cast<long>(i) << ',' << values[i].get_str() << '\n';
}

void emit_sequence(const std::vector<Integer>& values, const std::string& format, const json& meta) {
    if (format == "text") {
        print_values_text(values);
    } else if (format == "json") {
        json out = meta;
        out["values"] = integer_list_json(values);
        std::cout << out.dump() << '\n';
    } else if (format == "csv") {
        print_values_csv(values, 0);
    } else if (format == "bfile") {
        std::cout << to_bfile(values, 0);
    } else {
        throw CLI::ValidationError("--format", "unknown format '" + format + "'");
    }
}

struct MaskSpec {
    std::string raw = "ones";

    bool is_ones() const { return raw == "ones"; }

    PositionMask build(int n) const {
        if (raw == "ones") return PositionMask::ones(n);
        if (raw == "no-fixed") return PositionMask::no_fixed_point(n);
        if (raw.rfind("endpoint:", 0) == 0) {
            int l = 0, m = 0;
            if (std::sscanf(raw.c_str() + 9, "%d,%d", &l, &m) != 2)
                throw CLI::ValidationError("--mask", "expected endpoint:l,m");
            return PositionMask::endpoint(n, l, m);
        }
        throw CLI::ValidationError("--mask", "unknown mask '" + raw + "'");
    }
};

int run_count_signature(const std::string& sig_text, const MaskSpec& mask_spec, const std::string& method,
                        const std::string& format) {
    const Signature sig = Signature::parse(sig_text);
    const int n = sig.order();
    Integer result;
    if (method == "oracle") {
        const PositionMask mask = mask_spec.build(n);
        result = count_signature(sig, &mask);
    } else if (method == "triangle") {
        if (!mask_spec.is_ones()) throw CLI::ValidationError("--method", "triangle does not support masks");
        result = count_by_triangle(sig);
    } else if (method == "alternant") {
        const WeightMatrix w = mask_spec.build(n).to_matrix();
        result = n <= 9 ? alt(w, sig) : alt_memoized(w, sig);
    } else {
        throw CLI::ValidationError("--method", "unknown signature method '" + method + "'");
    }
    if (format == "json") {
        json out{{"signature", sig.to_string()}, {"n", n}, {"method", method}, {"count", result.get_str()}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << result.get_str() << '\n';
    }
    return kExitOk;
}

int run_count_index(int n, std::uint64_t k, const std::string& method, const std::string& format) {
    Integer result;
    if (method == "oracle") {
        result = count_signature(decode_index(n, k));
    } else if (method == "triangle") {
        result = count_by_triangle(decode_index(n, k));
    } else if (method == "niven1") {
        result = value(n, k, ValueRoute::niven1);
    } else if (method == "det14") {
        result = value(n, k, ValueRoute::det14);
    } else if (method == "det40") {
        result = value(n, k, ValueRoute::det40);
    } else if (method == "lambda66") {
        result = value(n, k, ValueRoute::lambda66);
    } else if (method == "poly") {
        result = value(n, k, ValueRoute::poly);
    } else {
        throw CLI::ValidationError("--method", "unknown index method '" + method + "'");
    }
    if (format == "json") {
        json out{{"n", n}, {"k", k}, {"method", method}, {"count", result.get_str()}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << result.get_str() << '\n';
    }
    return kExitOk;
}

ConstructMethod parse_construct_method(const std::string& name) {
    if (name == "explicit15") return ConstructMethod::explicit15;
    if (name == "symmetric30") return ConstructMethod::symmetric30;
    if (name == "recursion37") return ConstructMethod::recursion37;
    if (name == "system46") return ConstructMethod::system46;
    if (name == "step47") return ConstructMethod::step47;
    throw CLI::ValidationError("--method", "unknown construction method '" + name + "'");
}

int run_verify(const std::string& suite, int n_max) {
    VerifyReport report;
    if (suite == "core") {
        report = verify_core(n_max);
    } else if (suite == "identities") {
        report = verify_identities(n_max);
    } else if (suite == "roots") {
        report = verify_roots(n_max);
    } else if (suite == "all") {
        report = verify_all(n_max);
    } else {
        throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
    }
    std::cout << "suite " << suite << ": " << report.passed << " passed, " << report.failed << " failed\n";
    for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
    return report.ok() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of permutations with prescribed up-down structure"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "Count permutations by signature or by (n, k)");
    std::string sig_text, count_method, count_format = "text";
    MaskSpec mask_spec;
    int count_n = 0;
    std::uint64_t count_k = 0;
    auto* sig_opt = count_cmd->add_option("--signature", sig_text, "comma-separated +1/-1 (or u/d) entries");
    auto* n_opt = count_cmd->add_option("--n", count_n, "order of the permutations");
    auto* k_opt = count_cmd->add_option("--k", count_k, "up-down index");
    count_cmd->add_option("--mask", mask_spec.raw, "ones | no-fixed | endpoint:l,m");
    count_cmd->add_option("--method", count_method, "counting route");
    count_cmd->add_option("--format", count_format, "text | json");
    n_opt->needs(k_opt);
    k_opt->needs(n_opt);
    sig_opt->excludes(n_opt);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "Print a basis polynomial");
    std::uint64_t poly_k = 0;
    std::string poly_method = "recursion37", poly_format = "text";
    poly_cmd->add_option("--k", poly_k, "index")->required();
    poly_cmd->add_option("--method", poly_method, "construction method");
    poly_cmd->add_option("--format", poly_format, "text | json");

    // table
    auto* table_cmd = app.add_subcommand("table", "Print the basis polynomials up to an index");
    std::uint64_t table_kmax = 31;
    table_cmd->add_option("--k-max", table_kmax, "largest index");

    // row
    auto* row_cmd = app.add_subcommand("row", "Print a formal-value row {a\\k}, k = 0..len-1");
    int row_a = 0;
    std::uint64_t row_len = 0;
    std::string row_format = "text";
    row_cmd->add_option("--a", row_a, "row order")->required();
    row_cmd->add_option("--len", row_len, "number of entries")->required();
    row_cmd->add_option("--format", row_format, "text | json | csv | bfile");

    // series
    auto* series_cmd = app.add_subcommand("series", "Print the coefficients of P_n(x)");
    int series_n = 0;
    std::string series_format = "text";
    series_cmd->add_option("--n", series_n, "order")->required();
    series_cmd->add_option("--format", series_format, "text | json | csv | bfile");

    // numbers
    auto* numbers_cmd = app.add_subcommand("numbers", "Euler, tangent, or Bernoulli numbers by determinant");
    std::string numbers_kind, numbers_format = "text";
    int numbers_mmax = 0;
    numbers_cmd->add_option("kind", numbers_kind, "euler | tangent | bernoulli")->required();
    numbers_cmd->add_option("--m-max", numbers_mmax, "largest m")->required();
    numbers_cmd->add_option("--format", numbers_format, "text | json");

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "A permutation with the given index");
    int witness_n = 0;
    std::uint64_t witness_k = 0;
    std::string witness_format = "text";
    witness_cmd->add_option("--n", witness_n, "order")->required();
    witness_cmd->add_option("--k", witness_k, "index")->required();
    witness_cmd->add_option("--format", witness_format, "text | json");

    // triangle
    auto* triangle_cmd = app.add_subcommand("triangle", "Pretty-print the counting triangle of a signature");
    std::string triangle_sig;
    triangle_cmd->add_option("--signature", triangle_sig, "comma-separated +1/-1 entries")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    std::string verify_suite = "core";
    int verify_nmax = 8;
    verify_cmd->add_option("--suite", verify_suite, "all | core | identities | roots");
    verify_cmd->add_option("--n-max", verify_nmax, "sweep bound");

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "Open-problem exploration reports");
    std::string conj_mode, conj_format = "";
    std::uint64_t conj_kmax = 32;
    int conj_nmax = 10, conj_l = 0;
    conj_cmd->add_option("mode", conj_mode, "real-roots | minus-one | derangement | stirling")->required();
    conj_cmd->add_option("--k-max", conj_kmax, "largest index scanned");
    conj_cmd->add_option("--n-max", conj_nmax, "largest order");
    conj_cmd->add_option("--l", conj_l, "cycle count (stirling)");
    conj_cmd->add_option("--format", conj_format, "csv | text");

    try {
        app.parse(argc, argv);

        if (count_cmd->parsed()) {
            if (!sig_text.empty())
                return run_count_signature(sig_text, mask_spec, count_method.empty() ? "oracle" : count_method,
                                           count_format);
            if (n_opt->count() == 0)
                throw CLI::ValidationError("count", "need --signature or --n/--k");
            return run_count_index(count_n, count_k, count_method.empty() ? "poly" : count_method, count_format);
        }
        if (poly_cmd->parsed()) {
            const BasisPolynomial p = construct(poly_k, parse_construct_method(poly_method));
            std::cout << (poly_format == "json" ? to_json(p) : to_text(p)) << '\n';
            return kExitOk;
        }
        if (table_cmd->parsed()) {
            if (table_kmax > (std::uint64_t(1) << 20)) throw BudgetError("table: k-max above budget");
            for (std::uint64_t k = 0; k <= table_kmax; ++k)
                std::cout << "{n\\" << k << "} = " << to_text(construct(k)) << '\n';
            return kExitOk;
        }
        if (row_cmd->parsed()) {
            std::vector<Integer> values;
            values.reserve(row_len);
            for (std::uint64_t k = 0; k < row_len; ++k) values.push_back(formal_value(row_a, k));
            emit_sequence(values, row_format, json{{"a", row_a}});
            return kExitOk;
        }
        if (series_cmd->parsed()) {
            emit_sequence(pn_polynomial(series_n).coeffs, series_format, json{{"n", series_n}});
            return kExitOk;
        }
        if (numbers_cmd->parsed()) {
            if (numbers_kind == "euler") {
                std::vector<Integer> values;
                for (int m = 1; m <= numbers_mmax; ++m) values.push_back(euler_determinant(m));
                emit_sequence(values, numbers_format, json{{"kind", "euler"}});
            } else if (numbers_kind == "tangent") {
                std::vector<Integer> values;
                for (int m = 2; m <= numbers_mmax; ++m) values.push_back(tangent_determinant(m));
                emit_sequence(values, numbers_format, json{{"kind", "tangent"}});
            } else if (numbers_kind == "bernoulli") {
                std::vector<std::string> values;
                for (int m = 2; m <= numbers_mmax; ++m) values.push_back(bernoulli_recover(m).get_str());
                if (numbers_format == "json") {
                    std::cout << json{{"kind", "bernoulli"}, {"values", values}}.dump() << '\n';
                } else {
                    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
                    std::cout << '\n';
                }
            } else {
                throw CLI::ValidationError("kind", "unknown kind '" + numbers_kind + "'");
            }
            return kExitOk;
        }
        if (witness_cmd->parsed()) {
            const Permutation w = witness_permutation(witness_n, witness_k);
            if (witness_format == "json") {
                std::cout << json{{"n", witness_n}, {"k", witness_k}, {"permutation", w}}.dump() << '\n';
            } else {
                for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
                std::cout << '\n';
            }
            return kExitOk;
        }
        if (triangle_cmd->parsed()) {
            std::cout << format_triangle(triangle_rows(Signature::parse(triangle_sig)));
            return kExitOk;
        }
        if (verify_cmd->parsed()) return run_verify(verify_suite, verify_nmax);
        if (conj_cmd->parsed()) {
            if (conj_mode == "real-roots") {
                if (conj_kmax > 4096) throw BudgetError("real-roots: k-max above the scan budget");
                if (conj_format.empty()) conj_format = "csv";
                if (conj_format == "csv") std::cout << root_profile_csv_header() << '\n';
                for (std::uint64_t k = 1; k <= conj_kmax; ++k) {
                    const RootProfile p = real_root_profile(k);
                    if (conj_format == "csv") {
                        std::cout << root_profile_csv_line(p) << '\n';
                    } else {
                        std::cout << "k=" << p.k << " degree=" << p.degree << " real=" << p.real_with_multiplicity
                                  << " all_real=" << (p.all_real ? "yes" : "no") << '\n';
                    }
                }
                return kExitOk;
            }
            if (conj_mode == "minus-one") {
                const auto ks = minus_one_root_scan(conj_kmax);
                for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? " " : "") << ks[i];
                std::cout << '\n';
                return kExitOk;
            }
            if (conj_mode == "derangement") {
                for (int n = 1; n <= conj_nmax; ++n) {
                    const DerangementReport r = derangement_report(n);
                    std::cout << "n=" << n << " D=" << r.d_search.get_str() << " a_n=" << r.a_n.get_str()
                              << " ratio=" << r.ratio.get_str() << " ~" << r.ratio.get_d() << '\n';
                }
                return kExitOk;
            }
            if (conj_mode == "stirling") {
                for (int n = 2; n <= conj_nmax; ++n) {
                    const int lo = conj_l > 0 ? conj_l : 1;
                    const int hi = conj_l > 0 ? conj_l : n;
                    for (int l = lo; l <= hi && l <= n; ++l) {
                        const StirlingReport r = stirling_report(n, l);
                        std::cout << "n=" << n << " l=" << l << " S=" << r.count.get_str()
                                  << " a_n=" << r.a_n.get_str() << " ratio~" << r.ratio << '\n';
                    }
                }
                return kExitOk;
            }
            throw CLI::ValidationError("mode", "unknown mode '" + conj_mode + "'");
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitVerifyFailure;
    }
}
