#pragma once

/**
 * @file exact.hpp
 * @brief Exact rational and Gaussian-rational arithmetic.
 *
 * Every quantity the library computes is an exact value. BigRational is
 * kept in canonical form at all times: the denominator is positive, the
 * numerator and denominator are coprime, and zero is 0/1. Gaussian types
 * carry the complex terms (2l-1) +/- 2iL that the arctangent series is
 * built from.
 *
 * Values are immutable once built (compound assignment rebinds the whole
 * value) and can be handed between threads freely.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include "atanid/errors.hpp"

namespace atanid {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() : value_(0) {}
    template <std::integral T>
    BigRational(T n)  // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>)
            value_ = static_cast<long>(n);
        else
            value_ = static_cast<unsigned long>(n);
    }
    BigRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(mpq_class q);

    /// Parses "p/q" or "p". Decimal notation is rejected.
    static BigRational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] std::string to_string() const { return value_.get_str(); }

    [[nodiscard]] BigRational abs() const;
    [[nodiscard]] BigRational inverse() const;
    [[nodiscard]] BigRational pow(unsigned k) const;

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

private:
    mpq_class value_;
};

// Named forms of the field operations.
BigRational rat_add(const BigRational& a, const BigRational& b);
BigRational rat_mul(const BigRational& a, const BigRational& b);
BigRational rat_neg(const BigRational& a);
BigRational rat_inv(const BigRational& a);

BigInt factorial(unsigned n);
BigInt int_pow(const BigInt& base, unsigned k);

class GaussianInteger {
public:
    GaussianInteger() = default;
    GaussianInteger(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInteger(long re, long im) : re_(re), im_(im) {}

    [[nodiscard]] const BigInt& re() const { return re_; }
    [[nodiscard]] const BigInt& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_ == 0 && im_ == 0; }
    [[nodiscard]] BigInt norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] GaussianInteger conj() const { return {re_, -im_}; }

    friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b);
    friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b);
    friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b);
    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) = default;
    friend std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

private:
    BigInt re_{0};
    BigInt im_{0};
};

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussianRational(const GaussianInteger& z) : re_(z.re()), im_(z.im()) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }
    /// i^k for any integer k (k may be negative).
    static GaussianRational i_pow(long k);

    [[nodiscard]] const BigRational& re() const { return re_; }
    [[nodiscard]] const BigRational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] BigRational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    [[nodiscard]] GaussianRational inverse() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
    friend GaussianRational operator*(const GaussianRational& a, const BigRational& s);
    friend GaussianRational operator*(const BigRational& s, const GaussianRational& a) { return a * s; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

private:
    BigRational re_;
    BigRational im_;
};

/// z^k by repeated squaring; 0^0 is defined as 1.
GaussianInteger gauss_pow(const GaussianInteger& z, unsigned k);

/// z^-k computed as conj(z^k) / norm(z^k). Throws DivisionByZero for z = 0.
GaussianRational gauss_recip_pow(const GaussianInteger& z, unsigned k);

/// Truncated (never rounded) decimal expansion of an exact rational.
struct DecimalExpansion {
    bool negative = false;
    std::string integer_digits;
    std::string fraction_digits;
    bool truncated = false;  // true iff the discarded remainder was nonzero

    [[nodiscard]] std::string to_string() const;
    /// The rational the digits spell out exactly.
    [[nodiscard]] BigRational to_rational() const;
    [[nodiscard]] std::size_t total_digits() const {
        return integer_digits.size() + fraction_digits.size();
    }

    static DecimalExpansion parse(std::string_view text);

    friend bool operator==(const DecimalExpansion&, const DecimalExpansion&) = default;
};

DecimalExpansion decimal_expand(const BigRational& r, unsigned n_fraction_digits);

enum class DigitConvention {
    IncludeIntegerDigits,  // "3.14" vs "3.15" -> 2
    FractionOnly,          // "3.14" vs "3.15" -> 1
};

/// Length of the common prefix of the two digit sequences, decimal point
/// ignored. Zero when the integer parts differ in length.
std::size_t matching_digits(const DecimalExpansion& a, const DecimalExpansion& b,
                            DigitConvention convention = DigitConvention::IncludeIntegerDigits);

}  // namespace atanid
