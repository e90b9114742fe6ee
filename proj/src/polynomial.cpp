#include "atanid/polynomial.hpp"

#include <algorithm>

namespace atanid {

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(unsigned degree, BigRational c) {
    std::vector<BigRational> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * BigRational(static_cast<unsigned long>(k));
    return Polynomial(std::move(d));
}

BigRational Polynomial::evaluate(const BigRational& t) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    const BigRational inv = leading().inverse();
    return *this * inv;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        r[k] += b.coeffs_[k];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * BigRational(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigRational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const BigRational& s) {
    std::vector<BigRational> r = a.coeffs_;
    for (auto& c : r)
        c *= s;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};
    std::vector<BigRational> rem = a.coeffs_;
    std::vector<BigRational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const BigRational lead_inv = b.leading().inverse();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRational q = rem[k + db] * lead_inv;
        quot[k] = q;
        if (q.is_zero())
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= q * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

RationalFunctionPair::RationalFunctionPair(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
}

RationalFunctionPair RationalFunctionPair::derivative() const {
    const Polynomial dq = den_.derivative();
    if (dq.is_zero()) {
        // Constant denominator: plain term-wise derivative.
        return {num_.derivative(), den_};
    }
    const Polynomial g = gcd(den_, dq);
    const Polynomial q_red = divmod(den_, g).first;
    const Polynomial dq_red = divmod(dq, g).first;
    return {num_.derivative() * q_red - num_ * dq_red, den_ * q_red};
}

BigRational RationalFunctionPair::evaluate(const BigRational& t) const {
    const BigRational d = den_.evaluate(t);
    if (d.is_zero())
        throw PoleError("rational function evaluated at a pole t = " + t.to_string());
    return num_.evaluate(t) / d;
}

RationalFunctionPair inv_one_plus_t2_function() {
    return {Polynomial{1}, Polynomial{1, 0, 1}};
}

RationalFunctionPair inv_one_minus_u2_function() {
    return {Polynomial{1}, Polynomial{1, 0, -1}};
}

RationalFunctionPair arctan_integrand_function(const BigRational& x) {
    return {Polynomial::constant(x), Polynomial{1, 0, x * x}};
}

const RationalFunctionPair& DerivativeTower::order(unsigned m) {
    while (levels_.size() <= m)
        levels_.push_back(levels_.back().derivative());
    return levels_[m];
}

BigRational oracle_derivative(unsigned m, const RationalFunctionPair& f, const BigRational& t) {
    RationalFunctionPair g = f;
    for (unsigned k = 0; k < m; ++k)
        g = g.derivative();
    return g.evaluate(t);
}

}  // namespace atanid
