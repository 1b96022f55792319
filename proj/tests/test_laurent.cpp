#include <gtest/gtest.h>

#include <random>

#include "burau/error.hpp"
#include "burau/laurent.hpp"

using namespace burau;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-5, 5), count(0, 5);
  LaurentPoly p;
  int n = count(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coef(rng), deg(rng));
  return p;
}

LaurentMatrix random_matrix(std::mt19937& rng, int n) {
  LaurentMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
  return m;
}

const LaurentPoly t = LaurentPoly::var(1);

}  // namespace

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ(t * LaurentPoly::var(-1), LaurentPoly(1L));
  EXPECT_EQ((LaurentPoly(1L) - t) * (-t - LaurentPoly(1L)), LaurentPoly({{2, 1}, {0, -1}}));
  EXPECT_EQ((t - LaurentPoly(1L)).pow(3), LaurentPoly({{3, 1}, {2, -3}, {1, 3}, {0, -1}}));
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ(LaurentPoly({{1, 2}, {1, -2}}), LaurentPoly());
}

TEST(LaurentPoly, DegreesAndCoefficients) {
  LaurentPoly p{{-2, 3}, {5, -1}};
  EXPECT_EQ(p.low_degree(), -2);
  EXPECT_EQ(p.high_degree(), 5);
  EXPECT_EQ(p.coeff(5), -1);
  EXPECT_EQ(p.coeff(0), 0);
}

TEST(LaurentPoly, BigCoefficientsDoNotOverflow) {
  LaurentPoly p = (t + LaurentPoly(1L)).pow(80);
  EXPECT_EQ(p.coeff(40).get_str(), "107507208733336176461620");
}

TEST(LaurentPoly, Bar) {
  EXPECT_EQ(LaurentPoly::var(3).bar(), LaurentPoly::var(-3));
  LaurentPoly sym{{1, -1}, {0, 1}, {-1, -1}};
  EXPECT_EQ(sym.bar(), sym);
}

TEST(LaurentPoly, Printing) {
  EXPECT_EQ(LaurentPoly({{-1, -1}, {0, 1}, {2, -1}}).to_string(), "-1*t^-1 + 1 - 1*t^2");
  EXPECT_EQ(LaurentPoly({{1, 2}}).to_string(), "2*t");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, UnitsAndSubstitution) {
  EXPECT_EQ((-t).as_unit(), std::make_pair(-1, 1));
  EXPECT_FALSE((t + t).as_unit());
  EXPECT_EQ(t.substitute_power(2), LaurentPoly::var(2));
  EXPECT_EQ(LaurentPoly({{2, 1}, {-4, 3}}).deflate(2), LaurentPoly({{1, 1}, {-2, 3}}));
  EXPECT_FALSE(LaurentPoly({{1, 1}}).deflate(2));
}

TEST(LaurentPoly, Evaluate) {
  LaurentPoly p{{-1, 1}, {0, 1}, {1, -1}};
  EXPECT_EQ(p.evaluate(Rational(2)), Rational(-1, 2));
  EXPECT_EQ(p.evaluate(Scalar(Rational(1, 2))), Scalar(Rational(5, 2)));
}

TEST(LaurentMatrix, GeneratorInverseAndDet) {
  LaurentMatrix s1(2, {-t, LaurentPoly(1L), LaurentPoly(0L), LaurentPoly(1L)});
  LaurentMatrix expected(2, {-LaurentPoly::var(-1), LaurentPoly::var(-1), LaurentPoly(0L), LaurentPoly(1L)});
  EXPECT_EQ(s1.inverse(), expected);
  EXPECT_TRUE((s1 * s1.inverse()).is_identity());
  EXPECT_EQ(s1.det(), -t);
}

TEST(LaurentMatrix, NonUnitDeterminantIsRejected) {
  LaurentMatrix m(2, {t + LaurentPoly(1L), LaurentPoly(0L), LaurentPoly(0L), LaurentPoly(1L)});
  EXPECT_THROW(m.inverse(), PreconditionError);
}

TEST(LaurentMatrix, ThreeByThreeInverse) {
  LaurentMatrix m(3, {LaurentPoly(1L), LaurentPoly(0L), LaurentPoly(0L), t, -t, LaurentPoly(1L), LaurentPoly(0L),
                      LaurentPoly(0L), LaurentPoly(1L)});
  EXPECT_TRUE((m * m.inverse()).is_identity());
  EXPECT_TRUE((m.inverse() * m).is_identity());
}

TEST(LaurentProperties, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(LaurentProperties, StarReversesProducts) {
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 2;
    LaurentMatrix a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
    EXPECT_EQ((a * b).star(), b.star() * a.star());
    EXPECT_EQ(a.star().star(), a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).det(), a.det() * b.det());
  }
}
