// atanid: command-line front end for the exact arctangent-series library.
//
// Exit codes: 0 success, 2 usage error, 3 domain/precondition error,
// 4 reference-integrity failure.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atanid/arctan_series.hpp"
#include "atanid/derivatives.hpp"
#include "atanid/parallel.hpp"
#include "atanid/pi_engine.hpp"
#include "atanid/polynomial.hpp"
#include "atanid/quadrature.hpp"
#include "atanid/selftest.hpp"

namespace {

using namespace atanid;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitReference = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, ptr);
    if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos)
        s += ".0";
    return s;
}

std::string format_ms(std::chrono::duration<double, std::milli> d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", d.count());
    return buf;
}

class Output {
public:
    explicit Output(bool as_json) : json_(as_json) {}

    void field(const std::string& key, const std::string& value) {
        if (json_)
            record_[key] = value;
        else
            std::cout << key << ": " << value << '\n';
    }

    void finish() {
        if (json_)
            std::cout << record_.dump() << '\n';
    }

private:
    bool json_;
    json record_ = json::object();
};

// Common flags

struct Format {
    std::string name = "text";
    [[nodiscard]] bool is_json() const { return name == "json"; }
};

void add_format(CLI::App* sub, Format& f) {
    sub->add_option("--format", f.name, "Output format")->check(CLI::IsMember({"text", "json"}));
}

unsigned effective_workers(unsigned requested) {
    return requested == 0 ? default_worker_count() : requested;
}

// pi

struct PiArgs {
    std::string method = "eq17";
    unsigned L = 46;
    unsigned M = 46;
    unsigned digits = 0;  // 0: pick from the method
    unsigned workers = 0;
    Format format;
};

unsigned default_digits(PiMethod m) {
    return m == PiMethod::Gauss ? 400 : 200;
}

int run_pi(const PiArgs& a) {
    const PiMethod method = parse_pi_method(a.method);
    if (a.L < 1)
        throw UsageError("-L must be at least 1");
    const unsigned digits = a.digits == 0 ? default_digits(method) : a.digits;
    const PiResult r = measure(method, {a.L, a.M}, digits, effective_workers(a.workers));

    Output out(a.format.is_json());
    out.field("method", std::string(to_string(method)));
    out.field("L", std::to_string(a.L));
    out.field("M", std::to_string(a.M));
    out.field("digits_requested", std::to_string(digits));
    out.field("approx_decimal", r.expansion.to_string());
    out.field("matched_digits", std::to_string(r.matched_digits));
    out.field("elapsed_ms", format_ms(r.elapsed));
    out.finish();
    return 0;
}

// arctan

struct ArctanArgs {
    std::string x;
    unsigned L = 8;
    unsigned M = 8;
    unsigned digits = 30;
    bool exact = false;
    unsigned workers = 0;
    Format format;
};

int run_arctan(const ArctanArgs& a) {
    const BigRational x = BigRational::parse(a.x);
    const ComputationParams p{a.L, a.M};
    const auto start = std::chrono::steady_clock::now();
    const BigRational value = arctan_eq14({x, p}, effective_workers(a.workers));
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

    Output out(a.format.is_json());
    out.field("x", x.to_string());
    out.field("L", std::to_string(a.L));
    out.field("M", std::to_string(a.M));
    if (a.exact)
        out.field("exact", value.to_string());
    const DecimalExpansion d = decimal_expand(value, a.digits);
    out.field("decimal", d.to_string());
    if (x.abs() < BigRational(1)) {
        const BigRational ref = arctan_taylor_reference(x, a.digits);
        const DecimalExpansion rd = decimal_expand(ref, a.digits);
        const std::size_t matched = d.negative == rd.negative ? matching_digits(d, rd) : 0;
        out.field("matched_digits", std::to_string(matched));
    }
    out.field("elapsed_ms", format_ms(elapsed));
    out.finish();
    return 0;
}

// deriv

struct DerivArgs {
    int m = 1;
    std::string t = "0";
    std::string function = "arctan";
    std::string formula;  // defaults per function
    std::string compare;
    Format format;
};

struct DerivValue {
    std::optional<BigRational> exact;
    double approx = 0.0;
};

RationalFunctionPair oracle_subject(const std::string& function) {
    if (function == "inv-one-minus-u2")
        return inv_one_minus_u2_function();
    // arctan' = 1/(1+t^2), so the arctan oracle differentiates that pair
    return inv_one_plus_t2_function();
}

DerivValue evaluate_derivative(const std::string& function, const std::string& formula, unsigned m,
                               const BigRational& t) {
    auto exact = [](BigRational v) { return DerivValue{v, v.to_double()}; };
    if (function == "arctan") {
        if (m == 0)
            throw OrderError("the m-th derivative of arctan needs m >= 1");
        if (formula == "eq7")
            return exact(arctan_deriv(m, t));
        if (formula == "eq2")
            return {std::nullopt, all_formula(m, t.to_double())};
        if (formula == "oracle")
            return exact(oracle_derivative(m - 1, oracle_subject(function), t));
    } else if (function == "inv-one-plus-t2") {
        if (formula == "eq5")
            return exact(deriv_inv_one_plus_t2(m, t));
        if (formula == "oracle")
            return exact(oracle_derivative(m, oracle_subject(function), t));
    } else if (function == "inv-one-minus-u2") {
        if (formula == "eq4")
            return exact(deriv_inv_one_minus_u2(m, t));
        if (formula == "oracle")
            return exact(oracle_derivative(m, oracle_subject(function), t));
    }
    throw UsageError("formula '" + formula + "' does not apply to function '" + function + "'");
}

int run_deriv(const DerivArgs& a) {
    if (a.m < 0)
        throw UsageError("-m must be non-negative");
    const auto m = static_cast<unsigned>(a.m);
    const BigRational t = BigRational::parse(a.t);
    std::string formula = a.formula;
    if (formula.empty())
        formula = a.function == "arctan" ? "eq7" : a.function == "inv-one-plus-t2" ? "eq5" : "eq4";

    const DerivValue v = evaluate_derivative(a.function, formula, m, t);
    Output out(a.format.is_json());
    out.field("function", a.function);
    out.field("formula", formula);
    out.field("m", std::to_string(m));
    out.field("t", t.to_string());
    out.field("value", v.exact ? v.exact->to_string() : format_double(v.approx));
    if (!a.compare.empty()) {
        const DerivValue w = evaluate_derivative(a.function, a.compare, m, t);
        out.field("compare", a.compare);
        if (v.exact && w.exact) {
            out.field("deviation", (*v.exact - *w.exact).abs().to_string());
        } else {
            const double dev = std::fabs(v.approx - w.approx) / std::max(1.0, std::fabs(w.approx));
            out.field("deviation", format_double(dev));
        }
    }
    out.finish();
    return 0;
}

// quad

struct QuadArgs {
    std::string integrand = "inv-one-plus-t2";
    unsigned degree = 2;
    unsigned L = 4;
    unsigned M = 4;
    std::string rule = "eq10";
    unsigned digits = 30;
    bool exact = false;
    Format format;
};

int run_quad(const QuadArgs& a) {
    DerivativeOracle f;
    std::optional<BigRational> exact_integral;
    if (a.integrand == "one") {
        f = [](unsigned order, const BigRational&) { return BigRational(order == 0 ? 1 : 0); };
        exact_integral = BigRational(1);
    } else if (a.integrand == "monomial") {
        const unsigned d = a.degree;
        f = [d](unsigned order, const BigRational& t) -> BigRational {
            if (order > d)
                return 0;
            BigInt c = 1;
            for (unsigned k = 0; k < order; ++k)
                c *= d - k;
            return BigRational(c) * t.pow(d - order);
        };
        exact_integral = BigRational(BigInt(1), BigInt(d + 1));
    } else if (a.integrand == "inv-one-plus-t2") {
        f = [](unsigned order, const BigRational& t) { return deriv_inv_one_plus_t2(order, t); };
    } else {
        throw UsageError("unknown integrand '" + a.integrand + "'");
    }

    const ComputationParams p{a.L, a.M};
    const BigRational value = a.rule == "eq9" ? integrate_eq9(f, p) : integrate_eq10(f, p);

    Output out(a.format.is_json());
    out.field("integrand", a.integrand == "monomial" ? "t^" + std::to_string(a.degree) : a.integrand);
    out.field("rule", a.rule);
    out.field("L", std::to_string(a.L));
    out.field("M", std::to_string(a.M));
    if (a.exact)
        out.field("exact", value.to_string());
    const DecimalExpansion d = decimal_expand(value, a.digits);
    out.field("decimal", d.to_string());
    if (exact_integral) {
        out.field("error", (value - *exact_integral).abs().to_string());
    } else {
        // integral of 1/(1+t^2) over [0,1] is pi/4
        const DecimalExpansion ref = decimal_expand(pi_machin(a.digits + 2) / BigRational(4), a.digits);
        out.field("matched_digits", std::to_string(matching_digits(d, ref)));
    }
    out.finish();
    return 0;
}

// bench

struct BenchArgs {
    std::string suite = "pi-ladder";
    unsigned repetitions = 1;
    unsigned workers = 1;
    Format format;
};

struct BenchRow {
    std::string method;
    unsigned L;
    unsigned M;
    std::size_t matched_digits;
    double median_ms;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <class Fn>
BenchRow time_row(const std::string& method, unsigned k, unsigned reps, unsigned digits, Fn&& compute) {
    std::vector<double> times;
    BigRational value;
    for (unsigned r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        value = compute();
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    const DecimalExpansion d = decimal_expand(value, digits);
    return {method, k, k, matching_digits(d, reference_pi(digits)), median(times)};
}

std::vector<BenchRow> bench_pi_ladder(unsigned reps, unsigned workers) {
    std::vector<BenchRow> rows;
    for (unsigned k : {8u, 16u, 32u, 46u}) {
        const ComputationParams p{k, k};
        rows.push_back(time_row("eq17", k, reps, 400, [&] { return pi_eq17(p, workers); }));
        rows.push_back(time_row("eq18", k, reps, 400, [&] { return pi_eq18(p); }));
        rows.push_back(time_row("gauss", k, reps, 400, [&] { return pi_gauss(p, workers); }));
    }
    return rows;
}

// Both columns evaluate the same g_{l,m} sum; only the source of the
// derivative values differs.
std::vector<BenchRow> bench_deriv_paths(unsigned reps) {
    std::vector<BenchRow> rows;
    for (unsigned k : {8u, 16u, 32u, 46u}) {
        const ComputationParams p{k, k};
        rows.push_back(time_row("eq5-closed-form", k, reps, 200, [&] { return pi_eq18(p); }));
        rows.push_back(time_row("quotient-rule-oracle", k, reps, 200, [&] {
            DerivativeTower tower(inv_one_plus_t2_function());
            const DerivativeOracle g = [&tower](unsigned order, const BigRational& t) {
                return tower.evaluate(order, t);
            };
            return BigRational(4) * integrate_eq9(g, p);
        }));
    }
    return rows;
}

int run_bench(const BenchArgs& a) {
    if (a.repetitions < 1)
        throw UsageError("--repetitions must be at least 1");
    const std::vector<BenchRow> rows =
        a.suite == "pi-ladder" ? bench_pi_ladder(a.repetitions, effective_workers(a.workers)) : bench_deriv_paths(a.repetitions);
    if (a.format.is_json()) {
        for (const auto& r : rows) {
            json rec = json::object();
            rec["method"] = r.method;
            rec["L"] = std::to_string(r.L);
            rec["M"] = std::to_string(r.M);
            rec["matched_digits"] = std::to_string(r.matched_digits);
            rec["elapsed_ms"] = format_ms(std::chrono::duration<double, std::milli>(r.median_ms));
            std::cout << rec.dump() << '\n';
        }
        return 0;
    }
    std::printf("%-22s %4s %4s %15s %12s\n", "method", "L", "M", "matched_digits", "elapsed_ms");
    for (const auto& r : rows)
        std::printf("%-22s %4u %4u %15zu %12.3f\n", r.method.c_str(), r.L, r.M, r.matched_digits, r.median_ms);
    return 0;
}

// selftest

int run_selftest_cmd(const Format& format) {
    const auto results = run_selftest();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (format.is_json()) {
            json rec = json::object();
            rec["module"] = r.module;
            rec["check"] = r.name;
            rec["passed"] = r.passed;
            if (!r.passed)
                rec["detail"] = r.detail;
            std::cout << rec.dump() << '\n';
        } else {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.module << ": " << r.name;
            if (!r.passed)
                std::cout << " (" << r.detail << ')';
            std::cout << '\n';
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arctangent-series computations of arctan, its derivatives, and pi"};
    app.require_subcommand(1);

    PiArgs pi_args;
    auto* pi = app.add_subcommand("pi", "Approximate pi and count digits agreeing with the reference");
    pi->add_option("--method", pi_args.method, "eq17 | eq18 | gauss | machin")
        ->check(CLI::IsMember({"eq17", "eq18", "gauss", "machin"}));
    pi->add_option("-L", pi_args.L, "Number of midpoint nodes")->check(CLI::PositiveNumber);
    pi->add_option("-M", pi_args.M, "Highest derivative order");
    pi->add_option("--digits", pi_args.digits, "Fraction digits to expand (1-1000)")->check(CLI::Range(1u, kReferenceDigits));
    pi->add_option("--workers", pi_args.workers, "Worker threads (default: $ATANID_WORKERS or all cores)");
    add_format(pi, pi_args.format);

    ArctanArgs at_args;
    auto* at = app.add_subcommand("arctan", "Evaluate the closed-form arctangent series");
    at->add_option("--x", at_args.x, "Argument as p/q or an integer")->required();
    at->add_option("-L", at_args.L, "Number of midpoint nodes")->check(CLI::PositiveNumber);
    at->add_option("-M", at_args.M, "Highest derivative order");
    at->add_option("--digits", at_args.digits, "Fraction digits to print")->check(CLI::PositiveNumber);
    at->add_flag("--exact", at_args.exact, "Also print the exact rational");
    at->add_option("--workers", at_args.workers, "Worker threads");
    add_format(at, at_args.format);

    DerivArgs dv_args;
    auto* dv = app.add_subcommand("deriv", "m-th derivative of arctan (or a rational kernel) at t");
    dv->add_option("-m", dv_args.m, "Derivative order")->required();
    dv->add_option("--t", dv_args.t, "Point as p/q or an integer")->required();
    dv->add_option("--function", dv_args.function, "arctan | inv-one-plus-t2 | inv-one-minus-u2")
        ->check(CLI::IsMember({"arctan", "inv-one-plus-t2", "inv-one-minus-u2"}));
    const auto formulas = CLI::IsMember({"eq7", "eq2", "eq5", "eq4", "oracle"});
    dv->add_option("--formula", dv_args.formula, "arctan: eq7 | eq2 | oracle; kernels: eq5 / eq4 | oracle")->check(formulas);
    dv->add_option("--compare", dv_args.compare, "Second formula to compare against")->check(formulas);
    add_format(dv, dv_args.format);

    QuadArgs q_args;
    auto* q = app.add_subcommand("quad", "Derivative-corrected midpoint rule on [0, 1]");
    q->add_option("--integrand", q_args.integrand, "one | monomial | inv-one-plus-t2")
        ->check(CLI::IsMember({"one", "monomial", "inv-one-plus-t2"}));
    q->add_option("--degree", q_args.degree, "Degree for --integrand monomial");
    q->add_option("-L", q_args.L, "Number of midpoint nodes")->check(CLI::PositiveNumber);
    q->add_option("-M", q_args.M, "Highest derivative order");
    q->add_option("--rule", q_args.rule, "eq9 | eq10")->check(CLI::IsMember({"eq9", "eq10"}));
    q->add_option("--digits", q_args.digits, "Fraction digits to print")->check(CLI::PositiveNumber);
    q->add_flag("--exact", q_args.exact, "Also print the exact rational");
    add_format(q, q_args.format);

    BenchArgs b_args;
    auto* b = app.add_subcommand("bench", "Timing and digit tables");
    b->add_option("--suite", b_args.suite, "pi-ladder | deriv-paths")->check(CLI::IsMember({"pi-ladder", "deriv-paths"}));
    b->add_option("--repetitions", b_args.repetitions, "Runs per row; the median is reported")->check(CLI::PositiveNumber);
    b->add_option("--workers", b_args.workers, "Worker threads (0: $ATANID_WORKERS or all cores)");
    add_format(b, b_args.format);

    Format st_format;
    auto* st = app.add_subcommand("selftest", "Run the property suite of every module");
    add_format(st, st_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*pi)
            return run_pi(pi_args);
        if (*at)
            return run_arctan(at_args);
        if (*dv)
            return run_deriv(dv_args);
        if (*q)
            return run_quad(q_args);
        if (*b)
            return run_bench(b_args);
        if (*st)
            return run_selftest_cmd(st_format);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ReferenceIntegrityError& e) {
        std::cerr << "reference integrity failure: " << e.what() << '\n';
        return kExitReference;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
