#include "atanid/arctan_series.hpp"

#include "atanid/derivatives.hpp"
#include "atanid/parallel.hpp"

#include <stdexcept>

namespace atanid {

BigRational arctan_eq14_block(const ArctanRequest& req, unsigned l_begin, unsigned l_end) {
    const ComputationParams& p = req.params;
    p.validate();
    if (req.x.is_zero())
        return 0;

    const BigInt num = req.x.numerator();
    const BigInt den = req.x.denominator();
    const BigInt two_lq = 2 * static_cast<unsigned long>(p.L) * den;
    const unsigned terms = p.inner_terms();

    BigRational total;
    for (unsigned l = l_begin; l < l_end; ++l) {
        // W = p * w_l = p(2l-1) + 2iLq
        const GaussianInteger w(BigInt(num * (2 * static_cast<unsigned long>(l) - 1)), two_lq);
        const GaussianInteger w_sq = w * w;
        const BigInt norm = w.norm();
        const BigInt num_sq = num * num;

        GaussianInteger w_pow = w;  // W^k
        BigInt norm_pow = norm;     // |W|^(2k)
        BigInt num_pow = num;       // p^k
        for (unsigned m = 1; m <= terms; ++m) {
            const unsigned k = 2 * m - 1;
            if (m > 1) {
                w_pow = w_pow * w_sq;
                norm_pow *= norm * norm;
                num_pow *= num_sq;
            }
            total += BigRational(BigInt(2 * num_pow * w_pow.im()), BigInt(norm_pow * k));
        }
    }
    return total;
}

BigRational arctan_eq14(const ArctanRequest& req, unsigned workers) {
    req.params.validate();
    if (req.x.is_zero())
        return 0;
    return partitioned_sum(1, static_cast<std::size_t>(req.params.L) + 1, workers,
                           [&](std::size_t b, std::size_t e) {
                               return arctan_eq14_block(req, static_cast<unsigned>(b), static_cast<unsigned>(e));
                           });
}

BigRational arctan_eq14_gaussian(const ArctanRequest& req) {
    const ComputationParams& p = req.params;
    p.validate();
    if (req.x.is_zero())
        return 0;
    // 2iL/x as a Gaussian rational, shared by every node.
    const BigRational shift = BigRational(2 * static_cast<unsigned long>(p.L)) / req.x;
    GaussianRational sum;
    for (unsigned l = 1; l <= p.L; ++l) {
        const BigRational node(2 * static_cast<unsigned long>(l) - 1);
        const GaussianRational w_plus(node, shift);
        const GaussianRational w_minus(node, -shift);
        const GaussianRational inv_plus = w_plus.inverse();
        const GaussianRational inv_minus = w_minus.inverse();
        const GaussianRational inv_plus_sq = inv_plus * inv_plus;
        const GaussianRational inv_minus_sq = inv_minus * inv_minus;
        GaussianRational a = inv_plus;
        GaussianRational b = inv_minus;
        for (unsigned m = 1; m <= p.inner_terms(); ++m) {
            if (m > 1) {
                a = a * inv_plus_sq;
                b = b * inv_minus_sq;
            }
            sum = sum + (a - b) * BigRational(BigInt(1), BigInt(2 * m - 1));
        }
    }
    const GaussianRational value = GaussianRational::i() * sum;
    if (!value.is_real())
        throw std::logic_error("arctan_eq14_gaussian: imaginary part failed to cancel");
    return value.re();
}

BigRational arctan_eq15(const ArctanRequest& req) {
    req.params.validate();
    if (req.x.is_zero())
        return 0;
    const BigRational& x = req.x;
    const DerivativeOracle integrand = [&x](unsigned order, const BigRational& t) {
        return arctan_deriv_scaled(order + 1, x, t);
    };
    return integrate_eq9(integrand, req.params);
}

}  // namespace atanid
