// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and nowhere else.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "atanid/arctan_series.hpp"
#include "atanid/derivatives.hpp"
#include "atanid/pi_engine.hpp"
#include "atanid/polynomial.hpp"
#include "atanid/quadrature.hpp"
#include "cli_runner.hpp"

using namespace atanid;

namespace {

BigRational Q(long p, long q = 1) { return {BigInt(p), BigInt(q)}; }

struct Outcome {
    bool passed;
    std::string detail;
};

std::size_t cli_matched_digits(const std::string& args) {
    const auto r = test::run_cli(args);
    if (r.exit_code != 0)
        return 0;
    return std::stoul(test::field(r.out, "matched_digits"));
}

// 1. eq17 at L = M = 46 matches 105 +/- 2 digits.
constexpr std::size_t kEq17Expected = 105;
constexpr std::size_t kGaussExpected = 274;
constexpr std::size_t kDigitTolerance = 2;

std::size_t g_eq17_digits = 0;

Outcome ac1() {
    g_eq17_digits = cli_matched_digits("pi --method eq17 -L 46 -M 46 --digits 200");
    const bool ok = g_eq17_digits + kDigitTolerance >= kEq17Expected && g_eq17_digits <= kEq17Expected + kDigitTolerance;
    return {ok, "matched_digits = " + std::to_string(g_eq17_digits) + ", accepted [103, 107]"};
}

Outcome ac2() {
    const std::size_t d = cli_matched_digits("pi --method gauss -L 46 -M 46 --digits 400");
    const bool in_band = d + kDigitTolerance >= kGaussExpected && d <= kGaussExpected + kDigitTolerance;
    return {in_band && d > g_eq17_digits,
            "matched_digits = " + std::to_string(d) + ", accepted [272, 276] and > " + std::to_string(g_eq17_digits)};
}

Outcome ac3() {
    const unsigned grid[] = {1, 2, 5, 10, 23};
    for (unsigned L : grid)
        for (unsigned M : grid)
            if (!(pi_eq17({L, M}) == pi_eq18({L, M})))
                return {false, "pi_eq17 != pi_eq18 at L=" + std::to_string(L) + " M=" + std::to_string(M)};
    for (const auto& x : {Q(1), Q(-1), Q(1, 5), Q(-1, 5), Q(1, 239)})
        for (unsigned L : {1u, 2u, 5u, 8u})
            for (unsigned M = 0; M <= 8; ++M)
                if (!(arctan_eq14({x, {L, M}}) == arctan_eq15({x, {L, M}})))
                    return {false, "arctan_eq14 != arctan_eq15 at x=" + x.to_string()};
    return {true, "25 pi grid points and 180 arctan grid points identical"};
}

Outcome ac4() {
    const std::vector<BigRational> ts = {Q(0), Q(1, 3), Q(-1, 3), Q(1), Q(-1), Q(7, 5), Q(-7, 5), Q(10)};
    DerivativeTower plus(inv_one_plus_t2_function());
    DerivativeTower minus(inv_one_minus_u2_function());
    std::size_t compared = 0;
    for (unsigned m = 0; m <= 15; ++m) {
        for (const auto& t : ts) {
            if (!(deriv_inv_one_plus_t2(m, t) == plus.evaluate(m, t)))
                return {false, "1/(1+t^2) kernel differs at m=" + std::to_string(m) + " t=" + t.to_string()};
            ++compared;
            if (m >= 1) {
                if (!(arctan_deriv(m, t) == plus.evaluate(m - 1, t)))
                    return {false, "arctan kernel differs at m=" + std::to_string(m) + " t=" + t.to_string()};
                ++compared;
            }
            if (t.abs() != Q(1)) {
                if (!(deriv_inv_one_minus_u2(m, t) == minus.evaluate(m, t)))
                    return {false, "1/(1-u^2) kernel differs at m=" + std::to_string(m) + " u=" + t.to_string()};
                ++compared;
            }
        }
    }
    return {true, std::to_string(compared) + " exact comparisons"};
}

constexpr double kCrossFormulaTolerance = 1e-10;

Outcome ac5() {
    const std::pair<double, BigRational> ts[] = {
        {2.0, Q(2)}, {-2.0, Q(-2)}, {1.0, Q(1)}, {-1.0, Q(-1)}, {0.5, Q(1, 2)},
        {-0.5, Q(-1, 2)}, {0.1, Q(1, 10)}, {-0.1, Q(-1, 10)}, {0.0, Q(0)},
    };
    double worst = 0;
    for (unsigned m = 1; m <= 12; ++m) {
        for (const auto& [t, exact_t] : ts) {
            if (t == 0.0 && m % 2 == 0)
                continue;
            const double exact = arctan_deriv(m, exact_t).to_double();
            worst = std::max(worst, std::fabs(all_formula(m, t) - exact) / std::max(1.0, std::fabs(exact)));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst relative deviation %.3e", worst);
    return {worst <= kCrossFormulaTolerance, buf};
}

DerivativeOracle monomial(unsigned d) {
    return [d](unsigned order, const BigRational& t) -> BigRational {
        if (order > d)
            return 0;
        BigInt c = 1;
        for (unsigned k = 0; k < order; ++k)
            c *= d - k;
        return BigRational(c) * t.pow(d - order);
    };
}

Outcome ac6() {
    const DerivativeOracle g = [](unsigned order, const BigRational& t) { return deriv_inv_one_plus_t2(order, t); };
    for (unsigned L = 1; L <= 4; ++L) {
        for (unsigned M = 0; M <= 6; ++M) {
            if (!(integrate_eq9(g, {L, M}) == integrate_eq10(g, {L, M})))
                return {false, "rule A != rule B"};
            for (unsigned d = 0; d <= M; ++d)
                if (!(integrate_eq10(monomial(d), {L, M}) == Q(1, d + 1)))
                    return {false, "not exact for t^" + std::to_string(d)};
        }
        BigRational mid;
        for (unsigned l = 1; l <= L; ++l)
            mid += g(0, midpoint_node(l, L));
        mid /= BigRational(L);
        if (!(integrate_eq10(g, {L, 0}) == mid) || !(integrate_eq10(g, {L, 1}) == mid))
            return {false, "midpoint reduction fails at L=" + std::to_string(L)};
    }
    return {true, "equivalence, exactness and midpoint reduction hold"};
}

constexpr std::size_t kGaussTaylorMinDigits = 50;

Outcome ac7() {
    const DecimalExpansion machin = reference_pi(kReferenceDigits);  // throws on disagreement
    if (machin.fraction_digits != embedded_reference_pi().fraction_digits)
        return {false, "Machin digits differ from the embedded constant"};
    const std::size_t d = matching_digits(decimal_expand(pi_gauss_taylor(80), 80), reference_pi(80));
    return {d >= kGaussTaylorMinDigits,
            "1000/1000 Machin digits agree; Gauss-Taylor matches " + std::to_string(d) + " (>= 50)"};
}

Outcome ac8() {
    // Frozen from the first verified run.
    const unsigned ks[] = {8, 16, 32, 46};
    const std::size_t frozen[] = {15, 32, 69, 105};
    std::string seen;
    std::size_t prev = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t d = measure(PiMethod::Eq17, {ks[i], ks[i]}, 200).matched_digits;
        ok = ok && d > prev && d == frozen[i];
        prev = d;
        seen += (i ? " < " : "") + std::to_string(d);
    }
    return {ok, "eq17 ladder " + seen + " (frozen 15 < 32 < 69 < 105)"};
}

Outcome ac9() {
    const ComputationParams p{46, 46};
    const BigRational serial = pi_eq17(p, 1);
    for (unsigned workers : {2u, 4u, 8u, 46u})
        if (!(pi_eq17(p, workers) == serial))
            return {false, "parallel result differs with " + std::to_string(workers) + " workers"};
    return {true, "serial and 2/4/8/46-worker results identical"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 pi digit reproduction (eq17, L=M=46)", ac1},
        {"AC2 Gauss-formula reproduction (L=M=46)", ac2},
        {"AC3 exact path identity", ac3},
        {"AC4 derivative oracle equivalence", ac4},
        {"AC5 cross-formula agreement with sine/arcsine form", ac5},
        {"AC6 quadrature properties", ac6},
        {"AC7 reference integrity", ac7},
        {"AC8 convergence ladder", ac8},
        {"AC9 determinism", ac9},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o{false, {}};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
