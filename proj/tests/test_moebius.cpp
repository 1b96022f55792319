#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "burau/error.hpp"
#include "burau/moebius.hpp"
#include "burau/representation.hpp"

using namespace burau;

namespace {

Scalar q5(Rational a, Rational b) { return Scalar::quadratic(a, b, 5); }
const Scalar kParabolic = q5(Rational(3, 2), Rational(1, 2));

RealMatrix x_at(const Scalar& t0) { return specialize(conjugated_generators().x, t0); }
RealMatrix y_at(const Scalar& t0) { return specialize(conjugated_generators().y, t0); }

BoundaryPoint fin(Scalar v) { return BoundaryPoint::finite(std::move(v)); }

RealMatrix random_sl2(std::mt19937& rng) {
  // Products of elementary matrices stay in SL2(Q).
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  RealMatrix m = RealMatrix::identity(2);
  for (int i = 0; i < 3; ++i) {
    m = m * RealMatrix(2, {1, Rational(num(rng), den(rng)), 0, 1});
    m = m * RealMatrix(2, {1, 0, Rational(num(rng), den(rng)), 1});
  }
  return m;
}

}  // namespace

TEST(ClassifyIsometry, TraceTrichotomy) {
  // tr x = tr y = 1 - t - 1/t
  auto hx = classify_isometry(x_at(-2));
  EXPECT_EQ(hx.kind, IsometryKind::Hyperbolic);
  EXPECT_EQ(hx.trace, Scalar(Rational(7, 2)));
  EXPECT_EQ(classify_isometry(x_at(4)).kind, IsometryKind::Hyperbolic);
  EXPECT_EQ(classify_isometry(x_at(Rational(1, 4))).trace, Scalar(Rational(-13, 4)));

  auto e = classify_isometry(x_at(Rational(1, 2)));
  EXPECT_EQ(e.kind, IsometryKind::Elliptic);
  ASSERT_TRUE(e.cos_theta.has_value());
  EXPECT_EQ(*e.cos_theta, Scalar(Rational(3, 4)));

  EXPECT_EQ(classify_isometry(x_at(kParabolic)).kind, IsometryKind::Parabolic);
  EXPECT_EQ(classify_isometry(y_at(galois_conjugate(kParabolic))).kind, IsometryKind::Parabolic);
  EXPECT_EQ(classify_isometry(RealMatrix::identity(2)).kind, IsometryKind::Scalar);
  EXPECT_EQ(classify_isometry(-RealMatrix::identity(2)).kind, IsometryKind::Scalar);
  EXPECT_EQ(to_string(IsometryKind::Hyperbolic), "hyperbolic");
}

TEST(ClassifyIsometry, RejectsBadDeterminant) {
  EXPECT_THROW(classify_isometry(RealMatrix(2, {2, 0, 0, 1})), PreconditionError);
  EXPECT_THROW(classify_isometry(RealMatrix::identity(3)), PreconditionError);
}

TEST(ClassifyIsometry, FloatBoundaryTolerance) {
  Scalar near = Scalar::from_double(kParabolic.to_double());
  EXPECT_EQ(classify_isometry(x_at(near)).kind, IsometryKind::Parabolic);
}

TEST(MobiusApply, NegativeCaseImages) {
  // t = -2: x = [[1/2, 1/2], [1, 3]], y^-1 = [[2, -1], [-2, 3/2]]
  RealMatrix x = x_at(-2), yi = y_at(-2).inverse();
  EXPECT_EQ(mobius_apply(x, BoundaryPoint::infinity()), fin(Rational(1, 2)));
  EXPECT_EQ(mobius_apply(yi, BoundaryPoint::infinity()), fin(-1));
  EXPECT_EQ(mobius_apply(x * yi, BoundaryPoint::infinity()), fin(0));
  EXPECT_EQ(mobius_apply(x, fin(-3)), BoundaryPoint::infinity());
}

TEST(BoundaryPoints, Ordering) {
  EXPECT_EQ(compare(fin(1), BoundaryPoint::infinity()), -1);
  EXPECT_EQ(compare(BoundaryPoint::infinity(), BoundaryPoint::infinity()), 0);
  EXPECT_EQ(compare(fin(kParabolic), fin(Rational(5, 2))), 1);
  EXPECT_EQ(BoundaryPoint::infinity().to_string(), "inf");
  EXPECT_TRUE(std::isinf(BoundaryPoint().to_double()));
}

TEST(FixedPoints, ParabolicEndpoint) {
  FixedPoints fx = fixed_points(x_at(kParabolic));
  ASSERT_EQ(fx.kind, IsometryKind::Parabolic);
  ASSERT_EQ(fx.boundary.size(), 1u);
  EXPECT_EQ(fx.boundary[0], fin(q5(Rational(-1, 2), Rational(1, 2))));
  FixedPoints fy = fixed_points(y_at(kParabolic));
  ASSERT_EQ(fy.boundary.size(), 1u);
  EXPECT_EQ(fy.boundary[0], fin(q5(Rational(1, 2), Rational(-1, 2))));
}

TEST(FixedPoints, EllipticAtOne) {
  FixedPoints f = fixed_points(x_at(1));
  ASSERT_EQ(f.kind, IsometryKind::Elliptic);
  ASSERT_TRUE(f.interior.has_value());
  EXPECT_EQ(f.interior->re, Scalar(Rational(-1, 2)));
  EXPECT_EQ(f.interior->im, Scalar(QuadNum(0, Rational(1, 2), 3)));
}

TEST(FixedPoints, HyperbolicSortedAndFixed) {
  for (Scalar t0 : {Scalar(-2), Scalar(3), Scalar(Rational(1, 4)), Scalar(Rational(11, 4))}) {
    for (const RealMatrix& m : {x_at(t0), y_at(t0)}) {
      FixedPoints f = fixed_points(m);
      ASSERT_EQ(f.kind, IsometryKind::Hyperbolic);
      ASSERT_EQ(f.boundary.size(), 2u);
      EXPECT_EQ(compare(f.boundary[0], f.boundary[1]), -1);
      for (const auto& p : f.boundary) {
        EXPECT_TRUE(p.is_exact());
        EXPECT_EQ(mobius_apply(m, p), p) << t0.to_string();
      }
    }
  }
}

TEST(MoebiusProperties, ConjugationInvarianceAndComposition) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int i = 0; i < 100; ++i) {
    RealMatrix p = random_sl2(rng), a = random_sl2(rng), b = random_sl2(rng);
    auto ca = classify_isometry(a), cc = classify_isometry(p * a * p.inverse());
    EXPECT_EQ(ca.kind, cc.kind);
    EXPECT_EQ(ca.trace, cc.trace);
    BoundaryPoint z = fin(Rational(num(rng), 7));
    EXPECT_EQ(mobius_apply(a * b, z), mobius_apply(a, mobius_apply(b, z)));
    EXPECT_EQ(mobius_apply(a * b, BoundaryPoint::infinity()),
              mobius_apply(a, mobius_apply(b, BoundaryPoint::infinity())));
    EXPECT_EQ(mobius_apply(a.inverse(), mobius_apply(a, z)), z);
  }
}

TEST(CommutatorTrace, Identity) {
  CommutatorTraceCheck c = commutator_trace_check();
  EXPECT_TRUE(c.symbolic_equal);
  EXPECT_EQ(c.trace, LaurentPoly({{3, 1}, {-3, 1}}));
  EXPECT_EQ(c.expected, LaurentPoly({{3, 1}, {-3, 1}}));
  EXPECT_TRUE(c.samples_exceed_two);
  EXPECT_EQ(c.value_at_one, Scalar(2));
  ASSERT_FALSE(c.samples.empty());
  for (const auto& [t0, v] : c.samples) EXPECT_EQ(v, t0.pow(3) + t0.pow(-3));
}

TEST(RotationCandidates, MatchesBruteForceDegreeBound) {
  // Oracle: 2cos(2 pi k/m) is an algebraic integer; it has degree <= 2
  // exactly when it is a root of z + c or z^2 + b z + c with small b, c.
  auto low_degree = [](double z) {
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        if (std::abs(z + c) < 1e-9 || std::abs(z * z + b * z + c) < 1e-9) return true;
    return false;
  };
  std::set<std::pair<long, long>> expected;
  for (long m = 1; m <= 50; ++m)
    for (long k = 0; 2 * k <= m; ++k)
      if (std::gcd(k, m) == 1 && low_degree(2 * std::cos(2 * std::numbers::pi * k / m)))
        expected.insert({k, m});
  std::set<std::pair<long, long>> got;
  for (const auto& c : rotation_candidates()) {
    got.insert({c.k, c.m});
    EXPECT_NEAR(c.cos_value.to_double(), std::cos(2 * std::numbers::pi * c.k / c.m), 1e-12);
    EXPECT_TRUE(c.cos_value.is_exact());
  }
  EXPECT_EQ(got, expected);
}

TEST(RotationData, ExactCases) {
  RotationData one = rotation_data(x_at(1), Scalar(1));
  EXPECT_EQ(one.cos_theta, Scalar(Rational(1, 2)));
  EXPECT_EQ(one.order_class, RotationClass::Rational);
  ASSERT_TRUE(one.rotation_number.has_value());
  EXPECT_EQ(*one.rotation_number, std::make_pair(1L, 6L));
  EXPECT_FALSE(one.numerical);
  EXPECT_EQ(one.matrix_order, 3);

  RotationData half = rotation_data(x_at(Rational(1, 2)), Scalar(Rational(1, 2)));
  EXPECT_EQ(half.order_class, RotationClass::Irrational);
  EXPECT_FALSE(half.rotation_number.has_value());
  EXPECT_FALSE(half.matrix_order.has_value());

  // t = (1 + sqrt 5)/2 gives cos = (sqrt 5 - 1)/2, not a candidate value.
  Scalar g = q5(Rational(1, 2), Rational(1, 2));
  RotationData gold = rotation_data(x_at(g), g);
  EXPECT_EQ(gold.order_class, RotationClass::Irrational);

  EXPECT_THROW(rotation_data(x_at(-2), Scalar(-2)), PreconditionError);
}

TEST(RotationData, FloatMatching) {
  RotationData f = rotation_data(x_at(Scalar::from_double(1.0)), Scalar::from_double(1.0));
  EXPECT_TRUE(f.numerical);
  EXPECT_EQ(f.order_class, RotationClass::Rational);
  EXPECT_EQ(*f.rotation_number, std::make_pair(1L, 6L));
  RotationData h = rotation_data(x_at(Scalar::from_double(0.5)), Scalar::from_double(0.5));
  EXPECT_EQ(h.order_class, RotationClass::Undetermined);
}

TEST(MatchRational, ContinuedFractions) {
  RotationOptions opt;
  EXPECT_EQ(*match_rational(1.0 / 6 + 1e-12, opt), std::make_pair(1L, 6L));
  EXPECT_EQ(*match_rational(0.0, opt), std::make_pair(0L, 1L));
  EXPECT_EQ(*match_rational(355.0 / 997, opt), std::make_pair(355L, 997L));
  EXPECT_FALSE(match_rational(std::sqrt(2.0) - 1, opt).has_value());
  EXPECT_FALSE(match_rational(1.0 / 1009, opt).has_value());
  RotationOptions wide{1e-3, 10};
  EXPECT_EQ(*match_rational(0.3334, wide), std::make_pair(1L, 3L));
}

TEST(Orbit, FiniteAtOne) {
  OrbitEvidence o = orbit_accumulation_test(Scalar(1), 50, 0.05);
  EXPECT_EQ(o.distinct_points, 1);
  EXPECT_FALSE(o.accumulating);
  EXPECT_NEAR(o.fixed_point.real(), -0.5, 1e-15);
  EXPECT_NEAR(o.fixed_point.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Orbit, DistancesAtHalf) {
  OrbitEvidence o = orbit_accumulation_test(Scalar(Rational(1, 2)), 200, 0.05);
  EXPECT_EQ(o.distinct_points, 200);
  EXPECT_GT(o.min_distance, 0.0);
  // More points can only bring the orbit closer together.
  OrbitEvidence longer = orbit_accumulation_test(Scalar(Rational(1, 2)), 400, 0.05);
  EXPECT_LE(longer.min_distance, o.min_distance);
  EXPECT_THROW(orbit_accumulation_test(Scalar(-2), 10, 0.05), PreconditionError);
}

TEST(HyperbolicDistance, Basics) {
  using C = std::complex<double>;
  EXPECT_NEAR(hyperbolic_distance(C(0, 1), C(0, std::exp(1.0))), 1.0, 1e-14);
  EXPECT_EQ(hyperbolic_distance(C(0.3, 2), C(0.3, 2)), 0.0);
  // Invariant under z -> 2z + 1.
  EXPECT_NEAR(hyperbolic_distance(C(0, 1), C(1, 1)), hyperbolic_distance(C(1, 2), C(3, 2)), 1e-14);
}
