#include "atanid/pi_engine.hpp"

#include <cctype>
#include <string>

#include "atanid/arctan_series.hpp"
#include "atanid/derivatives.hpp"
#include "atanid/parallel.hpp"
#include "atanid/pi_reference_data.hpp"

namespace atanid {

std::string_view to_string(PiMethod method) {
    switch (method) {
    case PiMethod::Eq17: return "eq17";
    case PiMethod::Eq18: return "eq18";
    case PiMethod::Gauss: return "gauss";
    case PiMethod::Machin: return "machin";
    }
    return "?";
}

PiMethod parse_pi_method(std::string_view name) {
    if (name == "eq17")
        return PiMethod::Eq17;
    if (name == "eq18")
        return PiMethod::Eq18;
    if (name == "gauss")
        return PiMethod::Gauss;
    if (name == "machin")
        return PiMethod::Machin;
    throw ParseError("unknown pi method '" + std::string(name) + "'");
}

BigRational pi_eq17(const ComputationParams& p, unsigned workers) {
    return BigRational(4) * arctan_eq14({BigRational(1), p}, workers);
}

BigRational pi_eq18(const ComputationParams& p) {
    const DerivativeOracle g = [](unsigned order, const BigRational& t) { return deriv_inv_one_plus_t2(order, t); };
    return BigRational(4) * integrate_eq9(g, p);
}

BigRational pi_gauss(const ComputationParams& p, unsigned workers) {
    p.validate();
    const std::size_t per_term = p.L;
    const std::size_t total = kGaussCoefficients.size() * per_term;
    // Flattened (term, node) index space so that both the nine terms and the
    // node sums spread over the workers.
    const BigRational sum = partitioned_sum(0, total, workers, [&](std::size_t b, std::size_t e) {
        BigRational acc;
        std::size_t i = b;
        while (i < e) {
            const std::size_t term = i / per_term;
            const std::size_t run_end = std::min(e, (term + 1) * per_term);
            const GaussTerm& g = kGaussCoefficients[term];
            const ArctanRequest req{BigRational(BigInt(1), BigInt(g.beta)), p};
            const auto l_begin = static_cast<unsigned>(i - term * per_term + 1);
            const auto l_end = static_cast<unsigned>(run_end - term * per_term + 1);
            acc += BigRational(g.alpha) * arctan_eq14_block(req, l_begin, l_end);
            i = run_end;
        }
        return acc;
    });
    return BigRational(4) * sum;
}

BigRational arctan_taylor_reference(const BigRational& x, unsigned n_digits) {
    if (n_digits == 0)
        throw DomainError("arctan_taylor_reference needs n_digits >= 1");
    if (x.abs() >= BigRational(1))
        throw DomainError("arctan_taylor_reference requires |x| < 1, got " + x.to_string());
    if (x.is_zero())
        return 0;

    const BigRational eps(BigInt(1), int_pow(BigInt(10), n_digits + 5));
    const BigRational x_sq = x * x;
    BigRational power = x;  // x^(2k+1)
    BigRational sum;
    for (unsigned long k = 0;; ++k) {
        const BigRational term = power / BigRational(2 * k + 1);
        if (term.abs() < eps)
            break;
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        power *= x_sq;
    }
    return sum;
}

BigRational pi_machin(unsigned n_digits) {
    // 16 + 4 = 20 < 10^2, so two more digits per arctan cover the factors.
    const unsigned d = n_digits + 2;
    return BigRational(16) * arctan_taylor_reference(BigRational(BigInt(1), BigInt(5)), d) -
           BigRational(4) * arctan_taylor_reference(BigRational(BigInt(1), BigInt(239)), d);
}

BigRational pi_gauss_taylor(unsigned n_digits) {
    // sum |4 alpha_n| < 10^5
    const unsigned d = n_digits + 5;
    BigRational sum;
    for (const GaussTerm& g : kGaussCoefficients)
        sum += BigRational(g.alpha) * arctan_taylor_reference(BigRational(BigInt(1), BigInt(g.beta)), d);
    return BigRational(4) * sum;
}

DecimalExpansion parse_reference_text(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0)
            compact.push_back(c);
    }
    if (compact.size() < 3 || compact.compare(0, 2, "3.") != 0)
        throw ParseError("reference text must start with \"3.\"");
    DecimalExpansion d = DecimalExpansion::parse(compact);
    if (d.fraction_digits.empty())
        throw ParseError("reference text has no fraction digits");
    return d;
}

const DecimalExpansion& embedded_reference_pi() {
    static const DecimalExpansion ref = [] {
        DecimalExpansion d = parse_reference_text(detail::kPiReferenceText);
        if (d.fraction_digits.size() != kReferenceDigits)
            throw ReferenceIntegrityError("embedded reference does not hold 1000 digits");
        return d;
    }();
    return ref;
}

DecimalExpansion reference_pi(unsigned n_digits) {
    if (n_digits == 0 || n_digits > kReferenceDigits)
        throw DomainError("reference_pi supports 1 to 1000 digits");

    // Both ends of the error interval must truncate to the same digits; widen
    // the guard when the digits after position n_digits are a run of 0s or 9s.
    for (unsigned guard = 5;; guard += 5) {
        const BigRational approx = pi_machin(n_digits + guard);
        const BigRational err(BigInt(1), int_pow(BigInt(10), n_digits + guard));
        const DecimalExpansion lo = decimal_expand(approx - err, n_digits);
        const DecimalExpansion hi = decimal_expand(approx + err, n_digits);
        if (lo.integer_digits != hi.integer_digits || lo.fraction_digits != hi.fraction_digits)
            continue;

        DecimalExpansion result = decimal_expand(approx, n_digits);
        result.truncated = true;  // pi is irrational
        const DecimalExpansion& embedded = embedded_reference_pi();
        if (result.integer_digits != embedded.integer_digits ||
            result.fraction_digits != embedded.fraction_digits.substr(0, n_digits))
            throw ReferenceIntegrityError("Machin-formula digits disagree with the embedded constant at " +
                                          std::to_string(n_digits) + " digits");
        return result;
    }
}

PiResult measure(PiMethod method, const ComputationParams& p, unsigned n_digits, unsigned workers) {
    const DecimalExpansion reference = reference_pi(n_digits);
    PiResult r;
    r.method = method;
    r.params = p;
    const auto start = std::chrono::steady_clock::now();
    switch (method) {
    case PiMethod::Eq17: r.approx = pi_eq17(p, workers); break;
    case PiMethod::Eq18: r.approx = pi_eq18(p); break;
    case PiMethod::Gauss: r.approx = pi_gauss(p, workers); break;
    case PiMethod::Machin: r.approx = pi_machin(n_digits); break;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    r.expansion = decimal_expand(r.approx, n_digits);
    r.matched_digits = r.expansion.negative ? 0 : matching_digits(r.expansion, reference);
    return r;
}

}  // namespace atanid
