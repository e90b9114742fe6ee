#include "atanid/selftest.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "atanid/arctan_series.hpp"
#include "atanid/derivatives.hpp"
#include "atanid/pi_engine.hpp"
#include "atanid/polynomial.hpp"
#include "atanid/quadrature.hpp"

namespace atanid {

namespace {

// A check returns an empty string on success, else a counterexample.
using Check = std::function<std::string()>;

const std::vector<BigRational>& sample_rationals() {
    static const std::vector<BigRational> v = {
        BigRational(0), BigRational(1), BigRational(-1), BigRational(BigInt(1), BigInt(3)),
        BigRational(BigInt(-1), BigInt(3)), BigRational(BigInt(7), BigInt(5)), BigRational(BigInt(-7), BigInt(5)),
        BigRational(10), BigRational(BigInt(-22), BigInt(7)), BigRational(BigInt(123456789), BigInt(1000)),
    };
    return v;
}

std::string mismatch(const std::string& what, const BigRational& a, const BigRational& b) {
    return what + ": " + a.to_string() + " != " + b.to_string();
}

std::string check_field_identities() {
    for (const auto& a : sample_rationals()) {
        if (!(rat_add(a, rat_neg(a)) == BigRational(0)))
            return "a + (-a) != 0 for a = " + a.to_string();
        if (!a.is_zero() && !(rat_mul(a, rat_inv(a)) == BigRational(1)))
            return "a * a^-1 != 1 for a = " + a.to_string();
        if (a.denominator() <= 0 || gcd(a.numerator(), a.denominator()) != 1)
            return "non-canonical " + a.to_string();
    }
    return {};
}

std::string check_gaussian_powers() {
    const std::vector<GaussianInteger> zs = {{1, 2}, {3, -2}, {0, 1}, {-5, 7}, {11, 0}, {-1, -1}};
    for (const auto& z : zs) {
        for (unsigned k = 1; k <= 12; ++k) {
            const GaussianRational prod = GaussianRational(gauss_pow(z, k)) * gauss_recip_pow(z, k);
            if (!(prod == GaussianRational(1, 0)))
                return "z^k * z^-k != 1";
            if (!(gauss_pow(z.conj(), k) == gauss_pow(z, k).conj()))
                return "conj does not commute with pow";
        }
    }
    return {};
}

std::string check_decimal_round_trip() {
    for (const auto& r : sample_rationals()) {
        for (unsigned n : {1u, 5u, 20u}) {
            const DecimalExpansion d = decimal_expand(r, n);
            const BigRational bound(BigInt(1), int_pow(BigInt(10), n));
            if (!((d.to_rational() - r).abs() < bound))
                return "round trip outside 10^-n for " + r.to_string();
            if (matching_digits(d, d) != d.total_digits())
                return "matching_digits(a, a) != digit count";
        }
    }
    return {};
}

const std::vector<BigRational>& t_points() {
    static const std::vector<BigRational> v = {
        BigRational(0), BigRational(BigInt(1), BigInt(3)), BigRational(BigInt(-1), BigInt(3)), BigRational(1),
        BigRational(-1), BigRational(BigInt(7), BigInt(5)), BigRational(BigInt(-7), BigInt(5)), BigRational(10),
    };
    return v;
}

std::string check_oracle_equivalence() {
    DerivativeTower plus(inv_one_plus_t2_function());
    DerivativeTower minus(inv_one_minus_u2_function());
    for (unsigned m = 0; m <= 15; ++m) {
        for (const auto& t : t_points()) {
            const BigRational o = plus.evaluate(m, t);
            if (!(deriv_inv_one_plus_t2(m, t) == o))
                return mismatch("1/(1+t^2) m=" + std::to_string(m), deriv_inv_one_plus_t2(m, t), o);
            if (m >= 1 && !(arctan_deriv(m, t) == plus.evaluate(m - 1, t)))
                return "arctan shift fails at m=" + std::to_string(m);
            if (t.abs() == BigRational(1))
                continue;
            const BigRational u = minus.evaluate(m, t);
            if (!(deriv_inv_one_minus_u2(m, t) == u))
                return mismatch("1/(1-u^2) m=" + std::to_string(m), deriv_inv_one_minus_u2(m, t), u);
        }
    }
    return {};
}

std::string check_parity_and_scaling() {
    for (unsigned m = 1; m <= 15; ++m) {
        for (const auto& t : t_points()) {
            BigRational expected = arctan_deriv(m, t);
            if (m % 2 == 0)
                expected = -expected;
            if (!(arctan_deriv(m, -t) == expected))
                return "parity fails at m=" + std::to_string(m);
            if (!(arctan_deriv_scaled(m, 1, t) == arctan_deriv(m, t)))
                return "scaling with x=1 fails at m=" + std::to_string(m);
        }
    }
    return {};
}

std::string check_cross_formula() {
    const double ts[] = {2.0, -2.0, 1.0, -1.0, 0.5, -0.5, 0.1, -0.1, 0.0};
    for (unsigned m = 1; m <= 12; ++m) {
        for (const double t : ts) {
            if (t == 0.0 && m % 2 == 0)
                continue;
            const BigRational exact_t = t == 0.1    ? BigRational(BigInt(1), BigInt(10))
                                        : t == -0.1 ? BigRational(BigInt(-1), BigInt(10))
                                        : t == 0.5  ? BigRational(BigInt(1), BigInt(2))
                                        : t == -0.5 ? BigRational(BigInt(-1), BigInt(2))
                                                    : BigRational(static_cast<long>(t));
            const double exact = arctan_deriv(m, exact_t).to_double();
            const double dev = std::fabs(all_formula(m, t) - exact) / std::max(1.0, std::fabs(exact));
            if (dev > 1e-10) {
                std::ostringstream os;
                os << "m=" << m << " t=" << t << " deviation " << dev;
                return os.str();
            }
        }
    }
    return {};
}

DerivativeOracle monomial_oracle(unsigned d) {
    return [d](unsigned order, const BigRational& t) -> BigRational {
        if (order > d)
            return 0;
        BigInt c = 1;
        for (unsigned k = 0; k < order; ++k)
            c *= d - k;
        return BigRational(c) * t.pow(d - order);
    };
}

std::string check_quadrature() {
    const DerivativeOracle g = [](unsigned order, const BigRational& t) { return deriv_inv_one_plus_t2(order, t); };
    for (unsigned L = 1; L <= 4; ++L) {
        for (unsigned M = 0; M <= 6; ++M) {
            const ComputationParams p{L, M};
            if (!(integrate_eq9(g, p) == integrate_eq10(g, p)))
                return "rule A != rule B at L=" + std::to_string(L) + " M=" + std::to_string(M);
            for (unsigned d = 0; d <= M; ++d) {
                if (!(integrate_eq10(monomial_oracle(d), p) == BigRational(BigInt(1), BigInt(d + 1))))
                    return "not exact for t^" + std::to_string(d);
            }
            const BigRational split = integrate_eq10_block(g, p, 1, 1 + L / 2) + integrate_eq10_block(g, p, 1 + L / 2, L + 1);
            if (!(split == integrate_eq10(g, p)))
                return "partitioned sum differs";
        }
        BigRational mid;
        for (unsigned l = 1; l <= L; ++l)
            mid += g(0, midpoint_node(l, L));
        mid /= BigRational(L);
        for (unsigned M : {0u, 1u}) {
            if (!(integrate_eq10(g, {L, M}) == mid))
                return "midpoint reduction fails";
        }
    }
    return {};
}

std::string check_arctan_paths() {
    const std::vector<BigRational> xs = {1, -1, BigRational(BigInt(1), BigInt(5)), BigRational(BigInt(-1), BigInt(5)),
                                         5, -5, BigRational(BigInt(1), BigInt(239))};
    for (const auto& x : xs) {
        for (unsigned L : {1u, 2u, 5u}) {
            for (unsigned M = 0; M <= 8; ++M) {
                const ArctanRequest req{x, {L, M}};
                const BigRational a = arctan_eq14(req);
                if (!(a == arctan_eq15(req)))
                    return "eq14 != eq15 for x=" + x.to_string();
                if (!(a == arctan_eq14_gaussian(req)))
                    return "real and Gaussian forms differ for x=" + x.to_string();
                if (!(arctan_eq14({-x, {L, M}}) == -a))
                    return "odd symmetry fails for x=" + x.to_string();
            }
        }
    }
    return {};
}

std::string check_pi_paths() {
    for (unsigned L : {1u, 2u, 5u}) {
        for (unsigned M : {0u, 1u, 2u, 5u, 10u}) {
            if (!(pi_eq17({L, M}) == pi_eq18({L, M})))
                return "pi_eq17 != pi_eq18 at L=" + std::to_string(L) + " M=" + std::to_string(M);
        }
    }
    return {};
}

std::string check_reference() {
    const DecimalExpansion r = reference_pi(kReferenceDigits);
    if (r.fraction_digits != embedded_reference_pi().fraction_digits)
        return "Machin digits differ from the embedded constant";
    const DecimalExpansion g = decimal_expand(pi_gauss_taylor(60), 60);
    if (matching_digits(g, reference_pi(60)) < 50)
        return "Gauss coefficients do not reproduce pi";
    return {};
}

}  // namespace

std::vector<PropertyCheck> run_selftest() {
    const std::vector<std::tuple<std::string, std::string, Check>> checks = {
        {"exact_arithmetic", "field identities and canonical form", check_field_identities},
        {"exact_arithmetic", "Gaussian powers and reciprocals", check_gaussian_powers},
        {"exact_arithmetic", "decimal expansion round trip", check_decimal_round_trip},
        {"derivative_kernels", "closed forms match quotient-rule oracle", check_oracle_equivalence},
        {"derivative_kernels", "parity and scaling", check_parity_and_scaling},
        {"derivative_kernels", "sine/arcsine formula agreement", check_cross_formula},
        {"quadrature", "rule equivalence, exactness, partitioning", check_quadrature},
        {"arctan_series", "path equivalence and odd symmetry", check_arctan_paths},
        {"pi_engine", "pi_eq17 == pi_eq18", check_pi_paths},
        {"pi_engine", "reference integrity", check_reference},
    };
    std::vector<PropertyCheck> out;
    for (const auto& [module, name, check] : checks) {
        PropertyCheck r{module, name, false, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace atanid
