#include <doctest.h>

#include <string>

#include "atanid/exact.hpp"
#include "test_support.hpp"

using namespace atanid;
using atanid::test::Q;

namespace {

// Independent oracles: naive repeated multiplication and digit-by-digit
// long division.
GaussianInteger naive_pow(const GaussianInteger& z, unsigned k) {
    GaussianInteger r(1, 0);
    for (unsigned i = 0; i < k; ++i)
        r = r * z;
    return r;
}

std::string long_division(BigInt num, const BigInt& den, unsigned n) {
    std::string s;
    BigInt q = num / den;
    s += q.get_str() + ".";
    BigInt rem = num - q * den;
    for (unsigned i = 0; i < n; ++i) {
        rem *= 10;
        const BigInt digit = rem / den;
        s += digit.get_str();
        rem -= digit * den;
    }
    return s;
}

}  // namespace

TEST_SUITE("exact_arithmetic") {

TEST_CASE("rational field operations") {
    CHECK(rat_add(Q(1, 2), Q(1, 3)) == Q(5, 6));
    const BigRational one = rat_mul(Q(6, 4), Q(2, 3));
    CHECK(one == Q(1));
    CHECK(one.numerator() == 1);
    CHECK(one.denominator() == 1);
    const BigRational inv = rat_inv(Q(-3, 7));
    CHECK(inv.numerator() == -7);
    CHECK(inv.denominator() == 3);
    CHECK(rat_neg(Q(2, 5)) == Q(-2, 5));
}

TEST_CASE("canonical form on construction") {
    const BigRational r(BigInt(10), BigInt(-4));
    CHECK(r.numerator() == -5);
    CHECK(r.denominator() == 2);
    const BigRational z(BigInt(0), BigInt(-17));
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(rat_inv(Q(0)), DivisionByZero);
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(Q(3) / Q(0), DivisionByZero);
}

TEST_CASE("parse accepts p/q and integers only") {
    CHECK(BigRational::parse("296/375") == Q(296, 375));
    CHECK(BigRational::parse("-4/6") == Q(-2, 3));
    CHECK(BigRational::parse("12") == Q(12));
    CHECK(BigRational::parse("0") == Q(0));
    CHECK_THROWS_AS(BigRational::parse("0.5"), ParseError);
    CHECK_THROWS_AS(BigRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(BigRational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(BigRational::parse(""), ParseError);
    CHECK_THROWS_AS(BigRational::parse("1e5"), ParseError);
}

TEST_CASE("field identities hold for random rationals") {
    test::Gen gen(1);
    for (int i = 0; i < 500; ++i) {
        const BigRational a = i % 2 ? gen.rational() : gen.big_rational();
        const BigRational b = gen.rational();
        CHECK(rat_add(a, rat_neg(a)) == Q(0));
        if (!a.is_zero())
            CHECK(rat_mul(a, rat_inv(a)) == Q(1));
        const BigRational s = a + b;
        CHECK(s.denominator() > 0);
        CHECK(gcd(s.numerator(), s.denominator()) == 1);
        const BigRational p = a * b;
        CHECK(gcd(p.numerator(), p.denominator()) == 1);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("gauss_pow") {
    CHECK(gauss_pow({1, 2}, 2) == GaussianInteger(-3, 4));
    CHECK(gauss_pow({3, 2}, 0) == GaussianInteger(1, 0));
    CHECK(gauss_pow({3, 2}, 3) == GaussianInteger(-9, 46));
    CHECK(gauss_pow({0, 0}, 0) == GaussianInteger(1, 0));
    CHECK(gauss_pow({0, 0}, 3) == GaussianInteger(0, 0));
    CHECK(gauss_pow({0, 1}, 4) == GaussianInteger(1, 0));
}

TEST_CASE("gauss_pow agrees with naive repeated multiplication") {
    test::Gen gen(2);
    for (int i = 0; i < 200; ++i) {
        const GaussianInteger z = gen.gaussian(1000);
        const auto k = static_cast<unsigned>(gen.integer(0, 40));
        CHECK(gauss_pow(z, k) == naive_pow(z, k));
    }
}

TEST_CASE("gauss_recip_pow") {
    CHECK(gauss_recip_pow({1, 2}, 1) == GaussianRational(Q(1, 5), Q(-2, 5)));
    CHECK(gauss_recip_pow({1, 2}, 3) == GaussianRational(Q(-11, 125), Q(2, 125)));
    CHECK(gauss_recip_pow({0, 1}, 4) == GaussianRational(Q(1), Q(0)));
    CHECK_THROWS_AS(gauss_recip_pow({0, 0}, 2), DivisionByZero);
}

TEST_CASE("Gaussian power properties") {
    test::Gen gen(3);
    for (int i = 0; i < 200; ++i) {
        GaussianInteger z = gen.gaussian();
        if (z.is_zero())
            z = {1, 1};
        const auto k = static_cast<unsigned>(gen.integer(1, 25));
        const GaussianRational product = GaussianRational(gauss_pow(z, k)) * gauss_recip_pow(z, k);
        CHECK(product == GaussianRational(Q(1), Q(0)));
        CHECK(gauss_pow(z.conj(), k) == gauss_pow(z, k).conj());
        CHECK(gauss_pow(z, k).norm() == int_pow(z.norm(), k));
    }
}

TEST_CASE("Gaussian rational conjugation is an involution") {
    test::Gen gen(4);
    for (int i = 0; i < 100; ++i) {
        const GaussianRational z(gen.rational(), gen.rational());
        CHECK(z.conj().conj() == z);
        if (!z.is_zero())
            CHECK(z * z.inverse() == GaussianRational(Q(1), Q(0)));
    }
    CHECK(GaussianRational::i_pow(2) == GaussianRational(Q(-1), Q(0)));
    CHECK(GaussianRational::i_pow(-1) == GaussianRational(Q(0), Q(-1)));
    CHECK(GaussianRational::i_pow(7) == GaussianRational(Q(0), Q(-1)));
}

TEST_CASE("decimal_expand") {
    const DecimalExpansion third = decimal_expand(Q(1, 3), 5);
    CHECK(third.to_string() == "0.33333");
    CHECK(third.truncated);
    const DecimalExpansion approx = decimal_expand(Q(22, 7), 6);
    CHECK(approx.to_string() == "3.142857");
    CHECK(approx.truncated);
    const DecimalExpansion half = decimal_expand(Q(1, 2), 4);
    CHECK(half.to_string() == "0.5000");
    CHECK_FALSE(half.truncated);
}

TEST_CASE("decimal_expand truncates toward zero for negatives") {
    const DecimalExpansion d = decimal_expand(Q(-2, 3), 3);
    CHECK(d.to_string() == "-0.666");
    CHECK(d.negative);
    CHECK(decimal_expand(Q(-5, 2), 2).to_string() == "-2.50");
    CHECK_THROWS_AS(decimal_expand(Q(1), 0), DomainError);
}

TEST_CASE("decimal_expand matches digit-by-digit long division") {
    test::Gen gen(5);
    for (int i = 0; i < 200; ++i) {
        const BigRational r = gen.big_rational().abs();
        const auto n = static_cast<unsigned>(gen.integer(1, 80));
        CHECK(decimal_expand(r, n).to_string() == long_division(r.numerator(), r.denominator(), n));
    }
}

TEST_CASE("decimal_expand round trip stays within 10^-n") {
    test::Gen gen(6);
    for (int i = 0; i < 300; ++i) {
        const BigRational r = gen.big_rational();
        const auto n = static_cast<unsigned>(gen.integer(1, 60));
        const DecimalExpansion d = decimal_expand(r, n);
        const BigRational back = DecimalExpansion::parse(d.to_string()).to_rational();
        CHECK(back == d.to_rational());
        CHECK((back - r).abs() < BigRational(BigInt(1), int_pow(BigInt(10), n)));
        CHECK(d.truncated == !(back == r));
    }
}

TEST_CASE("matching_digits") {
    auto P = DecimalExpansion::parse;
    CHECK(matching_digits(P("3.14159"), P("3.14158")) == 5);
    CHECK(matching_digits(P("3.1415"), P("3.1415")) == 5);
    CHECK(matching_digits(P("3.20"), P("3.14")) == 1);
    CHECK(matching_digits(P("4.1"), P("3.1")) == 0);
    CHECK(matching_digits(P("13.1"), P("3.1")) == 0);
    CHECK(matching_digits(P("3.14"), P("3.14159")) == 3);
    CHECK_THROWS_AS(matching_digits(P("-3.1"), P("3.1")), ComparisonError);
}

TEST_CASE("matching_digits fraction-only convention") {
    auto P = DecimalExpansion::parse;
    constexpr auto frac = DigitConvention::FractionOnly;
    CHECK(matching_digits(P("3.14159"), P("3.14158"), frac) == 4);
    CHECK(matching_digits(P("3.20"), P("3.14"), frac) == 0);
    CHECK(matching_digits(P("4.20"), P("3.20"), frac) == 0);
}

TEST_CASE("matching_digits is symmetric and self-complete") {
    test::Gen gen(7);
    for (int i = 0; i < 200; ++i) {
        const BigRational a = gen.rational().abs();
        const BigRational b = a + BigRational(BigInt(gen.integer(0, 9)), int_pow(BigInt(10), static_cast<unsigned>(gen.integer(0, 12))));
        const DecimalExpansion da = decimal_expand(a, 15);
        const DecimalExpansion db = decimal_expand(b, 15);
        CHECK(matching_digits(da, db) == matching_digits(db, da));
        CHECK(matching_digits(da, da) == da.total_digits());
    }
}

}  // TEST_SUITE
