#include <random>

#include "doctest.h"
#include "powersum/exact.hpp"

using namespace powersum;

TEST_CASE("binomial small values and conventions") {
    CHECK(binomial(4, 2) == ExactInteger(6));
    CHECK(binomial(6, 3) == ExactInteger(20));
    CHECK(binomial(0, 0) == ExactInteger(1));
    // zero-extension: binom(k-q, 2r+1-2q) with a negative lower index
    CHECK(binomial(5, -1) == ExactInteger(0));
    CHECK(binomial(3, 7) == ExactInteger(0));
    CHECK_THROWS_AS(binomial(-2, 1), std::domain_error);
}

TEST_CASE("binomial symmetry and Pascal identity") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> dn(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = dn(rng);
        std::uniform_int_distribution<long> dk(0, n);
        const long k = dk(rng);
        CHECK(binomial(n, k) == binomial(n, n - k));
        if (n >= 1)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0UL) == ExactInteger(1));
    CHECK(factorial(4UL) == ExactInteger(24));
    // 6! = 720, the leading coefficient of P_6
    CHECK(factorial(6UL) == ExactInteger(720));
    CHECK_THROWS_AS(factorial(ExactInteger(-1)), std::domain_error);
}

TEST_CASE("integer string round trip") {
    for (const char* s : {"0", "1", "-1", "123456789012345678901234567890", "-98765432109876543210"}) {
        auto v = ExactInteger::parse(s);
        REQUIRE(v.has_value());
        CHECK(v->to_string() == s);
    }
    CHECK(ExactInteger::parse("-0")->to_string() == "0");
    CHECK_FALSE(ExactInteger::parse("").has_value());
    CHECK_FALSE(ExactInteger::parse("+3").has_value());
    CHECK_FALSE(ExactInteger::parse("1 2").has_value());
    CHECK_FALSE(ExactInteger::parse("12a").has_value());
}

TEST_CASE("rational arithmetic examples") {
    CHECK(ExactRational(2, 3) + ExactRational(1, 3) == ExactRational(1));
    // c_2 = (-1)^3 * 5 * 2^2 * B_4 = (-1/30)(-20)
    CHECK(ExactRational(-1, 30) * ExactRational(-20) == ExactRational(2, 3));
    CHECK(ExactRational(1, 2).pow(0) == ExactRational(1));
    CHECK(ExactRational(2, 3).pow(-2) == ExactRational(9, 4));
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
    CHECK_THROWS_AS(ExactRational(ExactInteger(1), ExactInteger(0)), std::domain_error);
    CHECK_THROWS_AS(ExactRational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational normalization invariants on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-400, 400);
    auto draw = [&]() {
        long den = 0;
        while (den == 0) den = d(rng);
        return ExactRational(d(rng), den);
    };
    auto normalized = [](const ExactRational& v) {
        return v.denominator() > ExactInteger(0) &&
               gcd(v.numerator().abs(), v.denominator()) == ExactInteger(1) &&
               (!v.is_zero() || v.denominator() == ExactInteger(1));
    };
    for (int trial = 0; trial < 300; ++trial) {
        const ExactRational a = draw(), b = draw();
        CHECK(normalized(a + b));
        CHECK(normalized(a - b));
        CHECK(normalized(a * b));
        if (!b.is_zero()) CHECK(normalized(a / b));
        CHECK(normalized(-a));
        CHECK(normalized(a.pow(3)));
    }
}

TEST_CASE("rational string encoding") {
    CHECK(ExactRational(2, 3).to_string() == "2/3");
    CHECK(ExactRational(-2, 3).to_string() == "-2/3");
    CHECK(ExactRational(2, -3).to_string() == "-2/3");  // sign moves to the numerator
    CHECK(ExactRational(4, 2).to_string() == "2");      // denominator 1 omitted
    CHECK(ExactRational(0, 5).to_string() == "0");
    CHECK(ExactRational::parse("7/3") == ExactRational(7, 3));
    CHECK(ExactRational::parse("-1/30") == ExactRational(-1, 30));
    CHECK(ExactRational::parse("17") == ExactRational(17));
    CHECK_FALSE(ExactRational::parse("1/-2").has_value());
    CHECK_FALSE(ExactRational::parse("1/0").has_value());
    CHECK_FALSE(ExactRational::parse("").has_value());

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-5000, 5000);
    for (int trial = 0; trial < 100; ++trial) {
        long den = 0;
        while (den == 0) den = d(rng);
        const ExactRational v(d(rng), den);
        CHECK(ExactRational::parse(v.to_string()) == v);
    }
}

TEST_CASE("integer comparison and exact division") {
    CHECK(ExactInteger(10) > ExactInteger(3));
    CHECK(ExactInteger(-10) < ExactInteger(3));
    CHECK(ExactInteger(12).divexact(ExactInteger(4)) == ExactInteger(3));
    CHECK_THROWS_AS(ExactInteger(10).divexact(ExactInteger(4)), internal_error);
    CHECK_THROWS_AS(ExactInteger(10).divexact(ExactInteger(0)), std::domain_error);
    CHECK(pow(ExactInteger(-3), 3) == ExactInteger(-27));
    CHECK(pow(ExactInteger(2), 70).to_string() == "1180591620717411303424");
}
