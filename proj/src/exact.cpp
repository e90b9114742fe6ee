#include "atanid/exact.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace atanid {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(mpq_class q) : value_(std::move(q)) {
    if (value_.get_den() == 0)
        throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("not an exact rational (expected p/q or an integer): '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return {n, d};
}

BigRational BigRational::abs() const {
    return BigRational(mpq_class(::abs(value_)));
}

BigRational BigRational::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    mpq_class q;
    mpq_inv(q.get_mpq_t(), value_.get_mpq_t());
    return BigRational(std::move(q));
}

BigRational BigRational::pow(unsigned k) const {
    return {int_pow(value_.get_num(), k), int_pow(value_.get_den(), k)};
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero())
        throw DivisionByZero("division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational operator-(const BigRational& a) {
    return BigRational(mpq_class(-a.value_));
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

BigRational rat_add(const BigRational& a, const BigRational& b) { return a + b; }
BigRational rat_mul(const BigRational& a, const BigRational& b) { return a * b; }
BigRational rat_neg(const BigRational& a) { return -a; }
BigRational rat_inv(const BigRational& a) { return a.inverse(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt int_pow(const BigInt& base, unsigned k) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

// Gaussian integers

GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {BigInt(a.re_ + b.re_), BigInt(a.im_ + b.im_)};
}

GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {BigInt(a.re_ - b.re_), BigInt(a.im_ - b.im_)};
}

GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {BigInt(a.re_ * b.re_ - a.im_ * b.im_), BigInt(a.re_ * b.im_ + a.im_ * b.re_)};
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
    os << z.re_ << (sgn(z.im_) < 0 ? "-" : "+") << BigInt(::abs(z.im_)) << 'i';
    return os;
}

GaussianInteger gauss_pow(const GaussianInteger& z, unsigned k) {
    GaussianInteger result(1, 0);
    GaussianInteger base = z;
    while (k != 0) {
        if (k & 1u)
            result = result * base;
        k >>= 1;
        if (k != 0)
            base = base * base;
    }
    return result;
}

GaussianRational gauss_recip_pow(const GaussianInteger& z, unsigned k) {
    if (z.is_zero())
        throw DivisionByZero("reciprocal power of 0");
    const GaussianInteger zk = gauss_pow(z, k);
    const BigInt n = zk.norm();
    return {BigRational(zk.re(), n), BigRational(BigInt(-zk.im()), n)};
}

// Gaussian rationals

GaussianRational GaussianRational::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of 0 + 0i");
    const BigRational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational operator*(const GaussianRational& a, const BigRational& s) {
    return {a.re_ * s, a.im_ * s};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    os << z.re_ << (z.im_.sign() < 0 ? " - " : " + ") << z.im_.abs() << 'i';
    return os;
}

// Decimal expansion

std::string DecimalExpansion::to_string() const {
    std::string s;
    if (negative)
        s += '-';
    s += integer_digits;
    if (!fraction_digits.empty()) {
        s += '.';
        s += fraction_digits;
    }
    return s;
}

BigRational DecimalExpansion::to_rational() const {
    BigInt n(integer_digits + fraction_digits, 10);
    if (negative)
        n = -n;
    return {n, int_pow(BigInt(10), static_cast<unsigned>(fraction_digits.size()))};
}

DecimalExpansion DecimalExpansion::parse(std::string_view text) {
    DecimalExpansion d;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        d.negative = true;
        body.remove_prefix(1);
    }
    const auto dot = body.find('.');
    const std::string_view ip = body.substr(0, dot);
    const std::string_view fp = dot == std::string_view::npos ? std::string_view() : body.substr(dot + 1);
    if (!all_digits(ip) || (dot != std::string_view::npos && !all_digits(fp)))
        throw ParseError("malformed decimal '" + std::string(text) + "'");
    d.integer_digits = ip;
    d.fraction_digits = fp;
    return d;
}

DecimalExpansion decimal_expand(const BigRational& r, unsigned n_fraction_digits) {
    if (n_fraction_digits == 0)
        throw DomainError("decimal_expand needs at least one fraction digit");
    DecimalExpansion d;
    d.negative = r.sign() < 0;
    const BigInt num = ::abs(r.numerator());
    const BigInt den = r.denominator();

    BigInt ip;
    BigInt rem;
    mpz_tdiv_qr(ip.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    d.integer_digits = ip.get_str();

    // All fraction digits in one division: floor(rem * 10^n / den).
    const BigInt scaled = rem * int_pow(BigInt(10), n_fraction_digits);
    BigInt frac;
    BigInt tail;
    mpz_tdiv_qr(frac.get_mpz_t(), tail.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    std::string fd = frac.get_str();
    d.fraction_digits = std::string(n_fraction_digits - fd.size(), '0') + fd;
    d.truncated = tail != 0;
    return d;
}

std::size_t matching_digits(const DecimalExpansion& a, const DecimalExpansion& b, DigitConvention convention) {
    if (a.negative != b.negative)
        throw ComparisonError("cannot compare expansions of opposite sign");
    if (a.total_digits() == 0 || b.total_digits() == 0)
        throw ComparisonError("cannot compare an empty expansion");
    if (a.integer_digits.size() != b.integer_digits.size())
        return 0;
    const std::string da = a.integer_digits + a.fraction_digits;
    const std::string db = b.integer_digits + b.fraction_digits;
    const auto [ia, ib] = std::mismatch(da.begin(), da.end(), db.begin(), db.end());
    const auto common = static_cast<std::size_t>(ia - da.begin());
    if (convention == DigitConvention::IncludeIntegerDigits)
        return common;
    const std::size_t int_len = a.integer_digits.size();
    return common > int_len ? common - int_len : 0;
}

}  // namespace atanid
