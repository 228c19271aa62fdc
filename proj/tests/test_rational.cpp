#include <gtest/gtest.h>

#include "ecci/rational.hpp"

using ecci::Rational;

TEST(Rational, ReducedFormAndSign) {
    EXPECT_EQ(Rational(34, 12).str(), "17/6");
    EXPECT_EQ(Rational(-4, 8).str(), "-1/2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational(8, 4).str(), "2");
    EXPECT_EQ(Rational(0, 5).str(), "0");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ExactArithmeticAndOrder) {
    Rational a(1, 3), b(1, 6);
    EXPECT_EQ((a + b).str(), "1/2");
    EXPECT_EQ((a - b).str(), "1/6");
    EXPECT_EQ((a * b).str(), "1/18");
    EXPECT_EQ((a / b).str(), "2");
    EXPECT_LT(b, a);
    EXPECT_GT(Rational(10, 3), Rational(3));
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    Rational acc;
    for (int i = 1; i <= 10; ++i) acc += Rational(1, i);
    EXPECT_EQ(acc.str(), "7381/2520");  // harmonic H_10
}

TEST(Rational, ParseRoundTrip) {
    EXPECT_EQ(Rational::parse("17/6"), Rational(17, 6));
    EXPECT_EQ(Rational::parse("-3"), Rational(-3));
    EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
}

TEST(Rational, DecimalRendering) {
    EXPECT_EQ(Rational(9, 2).decimal(), "4.5");
    EXPECT_EQ(Rational(71, 12).decimal(), "5.91666666667");
    EXPECT_EQ(Rational(1, 3).decimal(6), "0.333333");
    EXPECT_EQ(Rational(0).decimal(), "0");
}
