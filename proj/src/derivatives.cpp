#include "atanid/derivatives.hpp"

#include <cmath>
#include <stdexcept>

namespace atanid {

namespace {

BigRational real_part_checked(const GaussianRational& z, const char* what) {
    if (!z.is_real())
        throw std::logic_error(std::string(what) + ": imaginary part failed to cancel");
    return z.re();
}

// (g / b)^-k for a Gaussian integer g and positive integer b, i.e. b^k g^-k.
GaussianRational scaled_recip_pow(const GaussianInteger& g, const BigInt& b, unsigned k) {
    return gauss_recip_pow(g, k) * BigRational(int_pow(b, k));
}

}  // namespace

BigRational deriv_inv_one_minus_u2(unsigned m, const BigRational& u) {
    if (u == BigRational(1) || u == BigRational(-1))
        throw PoleError("1/(1-u^2) has a pole at u = " + u.to_string());
    const unsigned k = m + 1;
    BigRational bracket = (u + 1).inverse().pow(k) - (u - 1).inverse().pow(k);
    BigRational scale(factorial(m), BigInt(2));
    if (m % 2 == 1)
        scale = -scale;
    return scale * bracket;
}

BigRational deriv_inv_one_plus_t2(unsigned m, const BigRational& t) {
    const BigInt a = t.numerator();
    const BigInt b = t.denominator();
    const unsigned k = m + 1;
    // it + 1 = (b + ia)/b,  it - 1 = (-b + ia)/b
    const GaussianRational plus = scaled_recip_pow(GaussianInteger(b, a), b, k);
    const GaussianRational minus = scaled_recip_pow(GaussianInteger(BigInt(-b), a), b, k);
    const GaussianRational value =
        GaussianRational::i_pow(-static_cast<long>(m)) * (plus - minus) * BigRational(factorial(m), BigInt(2));
    return real_part_checked(value, "deriv_inv_one_plus_t2");
}

BigRational arctan_deriv(unsigned m, const BigRational& t) {
    if (m == 0)
        throw OrderError("arctan_deriv requires m >= 1");
    const BigInt a = t.numerator();
    const BigInt b = t.denominator();
    // t + i = (a + ib)/b,  t - i = (a - ib)/b
    const GaussianRational plus = scaled_recip_pow(GaussianInteger(a, b), b, m);
    const GaussianRational minus = scaled_recip_pow(GaussianInteger(a, BigInt(-b)), b, m);
    BigRational scale(factorial(m - 1));
    if (m % 2 == 1)
        scale = -scale;
    // multiply by 1/(2i) = -i/2
    const GaussianRational value = (plus - minus) * GaussianRational(0, BigRational(-1, 2)) * scale;
    return real_part_checked(value, "arctan_deriv");
}

BigRational arctan_deriv_scaled(unsigned m, const BigRational& x, const BigRational& t) {
    if (m == 0)
        throw OrderError("arctan_deriv_scaled requires m >= 1");
    if (x.is_zero())
        return 0;
    return x.pow(m) * arctan_deriv(m, x * t);
}

double all_formula(unsigned m, double t) {
    if (m < 1 || m > kAllFormulaMaxOrder)
        throw OrderError("all_formula requires 1 <= m <= 20");
    // Extended precision inside: near the zeros of the derivative the
    // (m-1)! factor amplifies the rounding of sin(m asin(.)), which in
    // double alone reaches ~1e-9 absolute at m = 12.
    using real = long double;
    const real tl = t;
    const real sgn = (-tl >= 0) ? 1 : -1;
    const real sign_factor = (m - 1) % 2 == 0 ? 1 : sgn;
    const real one_plus = 1 + tl * tl;
    real fact = 1;
    for (unsigned k = 2; k < m; ++k)
        fact *= k;
    const real value = sign_factor * fact / std::pow(one_plus, real(0.5) * m) *
                       std::sin(static_cast<real>(m) * std::asin(1 / std::sqrt(one_plus)));
    return static_cast<double>(value);
}

}  // namespace atanid
