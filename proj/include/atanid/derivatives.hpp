#pragma once

// Closed-form derivative kernels.
//
//   d^m/du^m 1/(1-u^2)   = (-1)^m m!/2 [ (u+1)^-(m+1) - (u-1)^-(m+1) ]           m >= 0
//   d^m/dt^m 1/(1+t^2)   = (-i)^m m!/2 [ (it+1)^-(m+1) - (it-1)^-(m+1) ]          m >= 0
//   d^m/dt^m arctan(t)   = (-1)^m (m-1)!/(2i) [ (t+i)^-m - (t-i)^-m ]              m >= 1
//   d^m/dt^m arctan(xt)  = (-1)^m (m-1)! x^m/(2i) [ (xt+i)^-m - (xt-i)^-m ]        m >= 1
//
// The complex forms are evaluated in exact Gaussian-rational arithmetic and
// the imaginary part must cancel identically; a leftover imaginary part
// aborts via std::logic_error since it can only mean an arithmetic bug.

#include "atanid/exact.hpp"

namespace atanid {

BigRational deriv_inv_one_minus_u2(unsigned m, const BigRational& u);

BigRational deriv_inv_one_plus_t2(unsigned m, const BigRational& t);

/// Throws OrderError for m = 0.
BigRational arctan_deriv(unsigned m, const BigRational& t);

/// d^m/dt^m arctan(x t). Throws OrderError for m = 0.
BigRational arctan_deriv_scaled(unsigned m, const BigRational& x, const BigRational& t);

/// Floating-point evaluation of the sine/arcsine closed form
///   sgn^(m-1)(-t) (m-1)! / (1+t^2)^(m/2) sin(m asin(1/sqrt(1+t^2)))
/// with sgn(t) = 1 for t >= 0 and -1 otherwise. Accepts 1 <= m <= 20.
double all_formula(unsigned m, double t);

inline constexpr unsigned kAllFormulaMaxOrder = 20;

}  // namespace atanid
