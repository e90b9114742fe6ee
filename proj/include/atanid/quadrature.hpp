#pragma once

// Derivative-corrected midpoint rules on [0, 1].
//
//   rule A: sum_{l=1..L} sum_{m=0..M} ((-1)^m + 1) / ((2L)^(m+1) (m+1)!) f^(m)(t_l)
//   rule B: 2 sum_{l=1..L} sum_{m=1..floor(M/2)+1} 1 / ((2L)^(2m-1) (2m-1)!) f^(2m-2)(t_l)
//
// with midpoints t_l = (2l-1)/(2L). The odd-order terms of rule A carry a
// zero weight, so both rules compute the same rational; rule B never asks
// the oracle for odd orders. Both are finite truncations, not limits.

#include <cstddef>
#include <functional>

#include "atanid/exact.hpp"

namespace atanid {

struct ComputationParams {
    unsigned L = 1;  // number of midpoint nodes, >= 1
    unsigned M = 0;  // highest derivative order

    /// Number of even-order correction terms, floor(M/2) + 1.
    [[nodiscard]] unsigned inner_terms() const { return M / 2 + 1; }
    /// Throws DomainError when L = 0.
    void validate() const;
};

/// f^(order)(node), exact and deterministic. Must be safe to call from
/// several threads when used with a parallel evaluation.
using DerivativeOracle = std::function<BigRational(unsigned order, const BigRational& node)>;

/// (2l - 1) / (2L)
BigRational midpoint_node(unsigned l, unsigned L);

BigRational integrate_eq9(const DerivativeOracle& f, const ComputationParams& p);

BigRational integrate_eq10(const DerivativeOracle& f, const ComputationParams& p, unsigned workers = 1);

/// Rule B restricted to nodes l in [l_begin, l_end) (1-based, half open).
BigRational integrate_eq10_block(const DerivativeOracle& f, const ComputationParams& p, unsigned l_begin,
                                 unsigned l_end);

/// |integrate_eq10(f, p) - exact|
BigRational integration_error(const DerivativeOracle& f, const ComputationParams& p, const BigRational& exact);

}  // namespace atanid
