#include <gtest/gtest.h>

#include "ehrkit/polynomial.hpp"
#include "test_util.hpp"

using namespace ehrkit;
using ehrkit::testing::q;

TEST(Polynomial, CanonicalTrailingZeros) {
    Polynomial p({Rational(1), Rational(0), Rational(0)});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_TRUE(Polynomial({Rational(0)}).is_zero());
    EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, Arithmetic) {
    Polynomial a({Rational(1), Rational(1)});  // 1 + t
    Polynomial cube = a * a * a;
    EXPECT_EQ(cube, Polynomial({Rational(1), Rational(3), Rational(3), Rational(1)}));
    EXPECT_EQ(cube - cube, Polynomial());
    EXPECT_EQ(cube(Rational(2)), 27);
}

TEST(Polynomial, InterpolationRecoversPolynomial) {
    Polynomial f({q("1"), q("5/2"), q("7/2")});
    std::vector<std::pair<Rational, Rational>> pts;
    for (int t = 1; t <= 3; ++t) pts.emplace_back(Rational(t), f(Rational(t)));
    EXPECT_EQ(interpolate(pts), f);
    pts.emplace_back(Rational(9), f(Rational(9)));
    EXPECT_EQ(interpolate(pts), f);
}

TEST(Polynomial, InterpolationRejectsRepeatedAbscissa) {
    EXPECT_THROW(interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}), Error);
}

TEST(Polynomial, ToString) {
    EXPECT_EQ(Polynomial({q("0"), q("3/2"), q("7/2")}).to_string(), "7/2*t^2 + 3/2*t");
    EXPECT_EQ(Polynomial({q("0"), q("-4/3"), q("0"), q("4/3")}).to_string(), "4/3*t^3 - 4/3*t");
    EXPECT_EQ(Polynomial({q("1"), q("1")}).to_string(), "t + 1");
    EXPECT_EQ(Polynomial().to_string(), "0");
}
