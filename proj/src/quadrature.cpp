#include "atanid/quadrature.hpp"

#include "atanid/parallel.hpp"

namespace atanid {

void ComputationParams::validate() const {
    if (L == 0)
        throw DomainError("L must be at least 1");
}

BigRational midpoint_node(unsigned l, unsigned L) {
    return {BigInt(2 * static_cast<unsigned long>(l) - 1), BigInt(2 * static_cast<unsigned long>(L))};
}

BigRational integrate_eq9(const DerivativeOracle& f, const ComputationParams& p) {
    p.validate();
    const BigInt two_l = 2 * static_cast<unsigned long>(p.L);
    BigRational total;
    for (unsigned l = 1; l <= p.L; ++l) {
        const BigRational t = midpoint_node(l, p.L);
        // weight denominators (2L)^(m+1) (m+1)!, built up across m
        BigInt denom = two_l;
        for (unsigned m = 0; m <= p.M; ++m) {
            if (m > 0)
                denom *= two_l * (m + 1);
            const long numer = (m % 2 == 0) ? 2 : 0;
            if (numer == 0)
                continue;
            total += BigRational(BigInt(numer), denom) * f(m, t);
        }
    }
    return total;
}

BigRational integrate_eq10_block(const DerivativeOracle& f, const ComputationParams& p, unsigned l_begin,
                                 unsigned l_end) {
    p.validate();
    const BigInt two_l = 2 * static_cast<unsigned long>(p.L);
    const BigInt two_l_sq = two_l * two_l;
    const unsigned terms = p.inner_terms();
    BigRational total;
    for (unsigned l = l_begin; l < l_end; ++l) {
        const BigRational t = midpoint_node(l, p.L);
        // (2L)^(2m-1) (2m-1)!, starting at m = 1
        BigInt denom = two_l;
        for (unsigned m = 1; m <= terms; ++m) {
            if (m > 1)
                denom *= two_l_sq * (2 * m - 2) * (2 * m - 1);
            total += BigRational(BigInt(2), denom) * f(2 * m - 2, t);
        }
    }
    return total;
}

BigRational integrate_eq10(const DerivativeOracle& f, const ComputationParams& p, unsigned workers) {
    p.validate();
    return partitioned_sum(1, static_cast<std::size_t>(p.L) + 1, workers, [&](std::size_t b, std::size_t e) {
        return integrate_eq10_block(f, p, static_cast<unsigned>(b), static_cast<unsigned>(e));
    });
}

BigRational integration_error(const DerivativeOracle& f, const ComputationParams& p, const BigRational& exact) {
    return (integrate_eq10(f, p) - exact).abs();
}

}  // namespace atanid
