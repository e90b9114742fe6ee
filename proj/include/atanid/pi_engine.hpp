#pragma once

// Pi from the truncated arctangent series, and the reference value the
// approximations are scored against.

#include <array>
#include <chrono>
#include <string_view>

#include "atanid/exact.hpp"
#include "atanid/quadrature.hpp"

namespace atanid {

struct GaussTerm {
    long alpha;  // integer multiplier
    long beta;   // arctan argument is 1/beta
};

/// pi = 4 sum_n alpha_n arctan(1/beta_n). alpha_1 is 2805; with the value
/// 2852 that circulates in some transcriptions the identity fails in the
/// second digit.
inline constexpr std::array<GaussTerm, 9> kGaussCoefficients{{
    {2805, 5257},
    {-398, 9466},
    {1950, 12943},
    {1850, 34208},
    {2021, 44179},
    {2097, 85353},
    {1484, 114669},
    {1389, 330182},
    {808, 485298},
}};

/// Length of the embedded reference constant, in fraction digits.
inline constexpr unsigned kReferenceDigits = 1000;

enum class PiMethod { Eq17, Eq18, Gauss, Machin };

std::string_view to_string(PiMethod method);
/// Accepts "eq17", "eq18", "gauss", "machin"; throws ParseError otherwise.
PiMethod parse_pi_method(std::string_view name);

/// 4 * arctan_eq14(1, p): the closed-form series at x = 1.
BigRational pi_eq17(const ComputationParams& p, unsigned workers = 1);

/// 4 * midpoint rule over g_{l,m} = d^m/dt^m 1/(1+t^2) at the nodes, with
/// g taken from the closed-form kernel.
BigRational pi_eq18(const ComputationParams& p);

/// 4 sum_n alpha_n arctan_eq14(1/beta_n, p).
BigRational pi_gauss(const ComputationParams& p, unsigned workers = 1);

/// Alternating Taylor series for arctan(x), |x| < 1, summed until the first
/// omitted term is below 10^-(n_digits+5). Throws DomainError for |x| >= 1.
BigRational arctan_taylor_reference(const BigRational& x, unsigned n_digits);

/// 16 arctan(1/5) - 4 arctan(1/239) from the Taylor reference, accurate to
/// better than 10^-n_digits.
BigRational pi_machin(unsigned n_digits);

/// 4 sum_n alpha_n arctan(1/beta_n) from the Taylor reference.
BigRational pi_gauss_taylor(unsigned n_digits);

/// Parses reference text: "3", ".", then digits; whitespace is ignored.
/// Throws ParseError on anything else.
DecimalExpansion parse_reference_text(std::string_view text);

/// The embedded published constant, 1000 fraction digits.
const DecimalExpansion& embedded_reference_pi();

/// Pi truncated to n_digits fraction digits, computed independently by
/// Machin's formula and required to agree with the embedded constant
/// (ReferenceIntegrityError otherwise). n_digits must be in [1, 1000].
DecimalExpansion reference_pi(unsigned n_digits);

struct PiResult {
    BigRational approx;
    PiMethod method = PiMethod::Eq17;
    ComputationParams params;
    DecimalExpansion expansion;
    std::size_t matched_digits = 0;
    std::chrono::duration<double, std::milli> elapsed{0};
};

/// Runs `method`, expands to n_digits and counts digits matching reference_pi.
PiResult measure(PiMethod method, const ComputationParams& p, unsigned n_digits, unsigned workers = 1);

}  // namespace atanid
