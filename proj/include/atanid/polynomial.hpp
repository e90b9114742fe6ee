#pragma once

// Dense univariate polynomials over the rationals, and rational functions
// built from them. Used as a symbol-free differentiation oracle: nothing
// here knows about the closed-form derivative identities.

#include <initializer_list>
#include <utility>
#include <vector>

#include "atanid/exact.hpp"

namespace atanid {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients in ascending order of power: {c0, c1, c2, ...}.
    Polynomial(std::initializer_list<BigRational> coeffs);
    explicit Polynomial(std::vector<BigRational> coeffs);

    static Polynomial constant(BigRational c) { return Polynomial({std::move(c)}); }
    static Polynomial monomial(unsigned degree, BigRational c = 1);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<BigRational>& coefficients() const { return coeffs_; }
    [[nodiscard]] const BigRational& leading() const { return coeffs_.back(); }

    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] BigRational evaluate(const BigRational& t) const;
    [[nodiscard]] Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const BigRational& s);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic greatest common divisor (zero if both are zero).
    friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// numerator / denominator with a nonzero denominator.
class RationalFunctionPair {
public:
    RationalFunctionPair(Polynomial numerator, Polynomial denominator);

    [[nodiscard]] const Polynomial& numerator() const { return num_; }
    [[nodiscard]] const Polynomial& denominator() const { return den_; }

    /// One application of the quotient rule (P/Q)' = (P'Q - PQ')/Q^2.
    /// The common factor g = gcd(Q, Q') is divided out first, i.e. the
    /// result is (P'(Q/g) - P(Q'/g)) / (Q(Q/g)), which is the same
    /// function with degrees growing linearly under repeated application.
    [[nodiscard]] RationalFunctionPair derivative() const;

    /// Throws PoleError if the denominator vanishes at t.
    [[nodiscard]] BigRational evaluate(const BigRational& t) const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// 1 / (1 + t^2)
RationalFunctionPair inv_one_plus_t2_function();
/// 1 / (1 - u^2)
RationalFunctionPair inv_one_minus_u2_function();
/// x / (1 + x^2 t^2) as a function of t.
RationalFunctionPair arctan_integrand_function(const BigRational& x);

/// Successive derivatives f, f', f'', ... computed by the quotient rule and
/// cached, so evaluating many orders at many points differentiates once.
class DerivativeTower {
public:
    explicit DerivativeTower(RationalFunctionPair f) { levels_.push_back(std::move(f)); }

    const RationalFunctionPair& order(unsigned m);
    BigRational evaluate(unsigned m, const BigRational& t) { return order(m).evaluate(t); }

private:
    std::vector<RationalFunctionPair> levels_;
};

/// m-th derivative of f at t via the quotient-rule recurrence.
BigRational oracle_derivative(unsigned m, const RationalFunctionPair& f, const BigRational& t);

}  // namespace atanid
