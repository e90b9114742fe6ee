#include <doctest.h>

#include "atanid/derivatives.hpp"
#include "atanid/quadrature.hpp"
#include "test_support.hpp"

using namespace atanid;
using atanid::test::Q;

namespace {

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

const DerivativeOracle kOne = [](unsigned order, const BigRational&) { return BigRational(order == 0 ? 1 : 0); };

const DerivativeOracle kInvOnePlusT2 = [](unsigned order, const BigRational& t) {
    return deriv_inv_one_plus_t2(order, t);
};

// Independent evaluation of rule A straight from its definition, with the
// weight recomputed from scratch for every term.
BigRational rule_a_reference(const DerivativeOracle& f, unsigned L, unsigned M) {
    BigRational total;
    for (unsigned l = 1; l <= L; ++l) {
        const BigRational t = BigRational(BigInt(2 * l - 1), BigInt(2 * L));
        for (unsigned m = 0; m <= M; ++m) {
            const BigRational sign_sum = BigRational(m % 2 == 0 ? 1 : -1) + 1;
            const BigRational weight = sign_sum / (BigRational(2 * L).pow(m + 1) * BigRational(factorial(m + 1)));
            total += weight * f(m, t);
        }
    }
    return total;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("ComputationParams") {
    CHECK(ComputationParams{3, 0}.inner_terms() == 1);
    CHECK(ComputationParams{3, 1}.inner_terms() == 1);
    CHECK(ComputationParams{3, 6}.inner_terms() == 4);
    CHECK(ComputationParams{3, 7}.inner_terms() == 4);
    CHECK_THROWS_AS(integrate_eq9(kOne, {0, 2}), DomainError);
    CHECK_THROWS_AS(integrate_eq10(kOne, {0, 2}), DomainError);
    CHECK(midpoint_node(2, 4) == Q(3, 8));
}

TEST_CASE("integrate_eq9 examples") {
    for (unsigned L = 1; L <= 5; ++L)
        for (unsigned M = 0; M <= 4; ++M)
            CHECK(integrate_eq9(kOne, {L, M}) == Q(1));
    CHECK(integrate_eq9(monomial(1), {2, 0}) == Q(1, 2));
    CHECK(integrate_eq9(monomial(2), {1, 2}) == Q(1, 3));
}

TEST_CASE("integrate_eq10 examples") {
    CHECK(integrate_eq10(kOne, {3, 0}) == Q(1));
    CHECK(integrate_eq10(monomial(2), {1, 2}) == Q(1, 3));
    CHECK(integrate_eq10(kInvOnePlusT2, {1, 2}) == integrate_eq9(kInvOnePlusT2, {1, 2}));
}

TEST_CASE("rule B never asks for odd orders") {
    const DerivativeOracle even_only = [](unsigned order, const BigRational& t) {
        REQUIRE(order % 2 == 0);
        return deriv_inv_one_plus_t2(order, t);
    };
    CHECK_NOTHROW(integrate_eq10(even_only, {4, 7}));
}

TEST_CASE("integration_error examples") {
    CHECK(integration_error(monomial(2), {1, 2}, Q(1, 3)) == Q(0));
    CHECK(integration_error(kOne, {5, 4}, Q(1)) == Q(0));
    CHECK(integration_error(monomial(3), {1, 2}, Q(1, 4)) == Q(0));
    // plain midpoint rule on t^2 with one node: 1/4 vs 1/3
    CHECK(integration_error(monomial(2), {1, 0}, Q(1, 3)) == Q(1, 12));
}

TEST_CASE("rule A matches the definitional reference") {
    for (unsigned L = 1; L <= 3; ++L)
        for (unsigned M = 0; M <= 5; ++M)
            CHECK(integrate_eq9(kInvOnePlusT2, {L, M}) == rule_a_reference(kInvOnePlusT2, L, M));
}

TEST_CASE("rule A equals rule B exactly") {
    for (unsigned L = 1; L <= 4; ++L) {
        for (unsigned M = 0; M <= 6; ++M) {
            CAPTURE(L);
            CAPTURE(M);
            CHECK(integrate_eq9(kInvOnePlusT2, {L, M}) == integrate_eq10(kInvOnePlusT2, {L, M}));
            CHECK(integrate_eq9(monomial(5), {L, M}) == integrate_eq10(monomial(5), {L, M}));
        }
    }
}

TEST_CASE("polynomial exactness up to degree M") {
    for (unsigned L = 1; L <= 5; ++L) {
        for (unsigned M = 0; M <= 8; ++M) {
            for (unsigned d = 0; d <= M; ++d) {
                CAPTURE(L);
                CAPTURE(M);
                CAPTURE(d);
                CHECK(integrate_eq10(monomial(d), {L, M}) == Q(1, d + 1));
            }
        }
    }
    // even M: odd central terms cancel, so degree M + 1 is exact too
    CHECK(integrate_eq10(monomial(3), {1, 2}) == Q(1, 4));
    CHECK(integrate_eq10(monomial(5), {2, 4}) == Q(1, 6));
    CHECK_FALSE(integrate_eq10(monomial(4), {1, 3}) == Q(1, 5));
}

TEST_CASE("midpoint reduction for M <= 1") {
    for (unsigned L = 1; L <= 6; ++L) {
        BigRational mid;
        for (unsigned l = 1; l <= L; ++l)
            mid += kInvOnePlusT2(0, midpoint_node(l, L));
        mid /= BigRational(L);
        CHECK(integrate_eq10(kInvOnePlusT2, {L, 0}) == mid);
        CHECK(integrate_eq10(kInvOnePlusT2, {L, 1}) == mid);
    }
}

TEST_CASE("partition invariance of the node sum") {
    test::Gen gen(21);
    const ComputationParams p{9, 6};
    const BigRational whole = integrate_eq10(kInvOnePlusT2, p);
    for (int trial = 0; trial < 20; ++trial) {
        // random contiguous split points in [1, L+1]
        unsigned a = static_cast<unsigned>(gen.integer(1, 10));
        unsigned b = static_cast<unsigned>(gen.integer(1, 10));
        if (a > b)
            std::swap(a, b);
        const BigRational pieces = integrate_eq10_block(kInvOnePlusT2, p, 1, a) +
                                   integrate_eq10_block(kInvOnePlusT2, p, a, b) +
                                   integrate_eq10_block(kInvOnePlusT2, p, b, 10);
        CHECK(pieces == whole);
    }
    for (unsigned workers : {2u, 3u, 4u, 16u})
        CHECK(integrate_eq10(kInvOnePlusT2, p, workers) == whole);
}

}  // TEST_SUITE
