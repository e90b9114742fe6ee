#pragma once

// Truncated arctangent series obtained by applying the derivative-corrected
// midpoint rule to arctan(x) = integral_0^1 x / (1 + x^2 t^2) dt.
//
// Closed-form path: with w_l = (2l-1) + 2iL/x,
//   arctan(x) ~ i sum_l sum_{m=1..floor(M/2)+1} 1/(2m-1) [ w_l^-(2m-1) - conj(w_l)^-(2m-1) ]
// Derivative path: the same quadrature with integrand derivatives taken from
// the scaled arctan derivative kernel. Both paths give the same rational.

#include "atanid/exact.hpp"
#include "atanid/quadrature.hpp"

namespace atanid {

struct ArctanRequest {
    BigRational x;
    ComputationParams params;
};

/// Closed-form path, real reduction over Gaussian integers:
///   sum_l sum_m 2 p^k Im(W^k) / (k |W|^(2k)),  k = 2m-1,  W = p(2l-1) + 2iLq
/// for x = p/q. Returns exactly 0 for x = 0.
BigRational arctan_eq14(const ArctanRequest& req, unsigned workers = 1);

/// Closed-form path restricted to l in [l_begin, l_end).
BigRational arctan_eq14_block(const ArctanRequest& req, unsigned l_begin, unsigned l_end);

/// Closed-form path evaluated literally in Gaussian-rational arithmetic
/// (i times the bracketed conjugate differences). Slower; agrees exactly
/// with arctan_eq14.
BigRational arctan_eq14_gaussian(const ArctanRequest& req);

/// Derivative path: the midpoint rule over orders 0..M, where the m-th
/// derivative of the integrand is the (m+1)-th t-derivative of arctan(xt).
BigRational arctan_eq15(const ArctanRequest& req);

}  // namespace atanid
