#include <gtest/gtest.h>

#include <random>

#include "burau/classifier.hpp"
#include "burau/error.hpp"

using namespace burau;

namespace {

Scalar q5(Rational a, Rational b) { return Scalar::quadratic(a, b, 5); }

struct Row {
  Scalar t;
  Regime regime;
  Discreteness discrete;
  Faithfulness faithful;
  Exactness exactness;
};

bool has_evidence(const SpecializationVerdict& v, const std::string& name, const std::string& status) {
  for (const auto& e : v.evidence)
    if (e.name == name && e.status == status) return true;
  return false;
}

}  // namespace

TEST(Classifier, ReferenceTable) {
  const Discreteness yes{DiscreteKind::Yes}, no{DiscreteKind::No};
  const std::vector<Row> rows = {
      {Scalar(-2), Regime::NegativeHyperbolic, yes, Faithfulness::Yes, Exactness::Certified},
      {Scalar(-1), Regime::MinusOne, yes, Faithfulness::No, Exactness::Certified},
      {Scalar(Rational(1, 4)), Regime::PositiveOuter, yes, Faithfulness::Yes, Exactness::Certified},
      {Scalar(4), Regime::PositiveOuter, yes, Faithfulness::Yes, Exactness::Certified},
      {Scalar(Rational(1, 2)), Regime::EllipticWindow, no, Faithfulness::Undetermined, Exactness::Certified},
      {Scalar(1), Regime::One, {DiscreteKind::TriangleGroup, 6}, Faithfulness::No, Exactness::Certified},
      {q5(Rational(3, 2), Rational(1, 2)), Regime::ParabolicBoundary, yes, Faithfulness::Yes, Exactness::Certified},
      {q5(Rational(3, 2), Rational(-1, 2)), Regime::ParabolicBoundary, yes, Faithfulness::Yes, Exactness::Certified},
      {q5(Rational(1, 2), Rational(1, 2)), Regime::EllipticWindow, no, Faithfulness::Undetermined, Exactness::Certified},
      {Scalar::from_double(0.5), Regime::EllipticWindow, {DiscreteKind::NumericalNo}, Faithfulness::Undetermined,
       Exactness::Numerical},
      {Scalar::from_double(-0.5), Regime::NegativeHyperbolic, yes, Faithfulness::Yes, Exactness::Numerical},
      {Scalar(0), Regime::ExcludedZero, no, Faithfulness::No, Exactness::Certified},
  };
  for (const auto& r : rows) {
    SpecializationVerdict v = classify(r.t);
    SCOPED_TRACE(r.t.to_string());
    EXPECT_EQ(v.regime, r.regime);
    EXPECT_EQ(v.discrete, r.discrete);
    EXPECT_EQ(v.faithful, r.faithful);
    EXPECT_EQ(v.exactness, r.exactness);
    EXPECT_EQ(v.t_input, r.t);
  }
}

TEST(Classifier, EvidenceDetails) {
  EXPECT_TRUE(has_evidence(classify(Scalar(-2)), "pingpong", "verified"));
  EXPECT_TRUE(has_evidence(classify(Scalar(Rational(1, 4))), "pingpong", "verified"));
  SpecializationVerdict m1 = classify(Scalar(-1));
  EXPECT_TRUE(has_evidence(m1, "minus_one", "flag"));
  EXPECT_TRUE(has_evidence(m1, "kernel_element", "ok"));
  SpecializationVerdict one = classify(Scalar(1));
  EXPECT_TRUE(has_evidence(one, "matrix_order", "finite"));
  EXPECT_TRUE(has_evidence(one, "center", "identity"));
  EXPECT_TRUE(has_evidence(classify(Scalar(Rational(1, 2))), "matrix_order", "none_up_to_12"));
}

TEST(Classifier, FloatNearBoundaryIsUndetermined) {
  SpecializationVerdict v = classify(Scalar::from_double(1.0));
  EXPECT_EQ(v.discrete.kind, DiscreteKind::NumericalUndetermined);
  EXPECT_EQ(v.exactness, Exactness::Numerical);
  SpecializationVerdict p = classify(Scalar::from_double(2.618033988749895));
  EXPECT_EQ(p.discrete.kind, DiscreteKind::NumericalUndetermined);
}

TEST(Classifier, Names) {
  EXPECT_EQ(to_string(Regime::NegativeHyperbolic), "negative_hyperbolic");
  EXPECT_EQ(to_string(Discreteness{DiscreteKind::TriangleGroup, 6}), "triangle_group(6)");
  EXPECT_EQ(to_string(Discreteness{DiscreteKind::NumericalNo}), "numerical_no");
  EXPECT_EQ(to_string(Faithfulness::Undetermined), "undetermined");
  EXPECT_EQ(to_string(Exactness::Certified), "certified");
  EXPECT_TRUE(is_outer(Regime::ParabolicBoundary));
  EXPECT_TRUE(is_outer(Regime::PositiveOuter));
  EXPECT_FALSE(is_outer(Regime::EllipticWindow));
}

TEST(ClassifierProperties, RegimeMatchesQuadraticSign) {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> num(-300, 300), den(1, 60);
  for (int i = 0; i < 400; ++i) {
    Rational t(num(rng), den(rng));
    t.canonicalize();
    Regime r = regime_of(t);
    Rational q = t * t - 3 * t + 1;
    if (t == 0) {
      EXPECT_EQ(r, Regime::ExcludedZero);
    } else if (t == -1) {
      EXPECT_EQ(r, Regime::MinusOne);
    } else if (t == 1) {
      EXPECT_EQ(r, Regime::One);
    } else if (t < 0) {
      EXPECT_EQ(r, Regime::NegativeHyperbolic);
    } else if (q > 0) {
      EXPECT_EQ(r, Regime::PositiveOuter) << t.get_str();
    } else {
      EXPECT_EQ(r, Regime::EllipticWindow) << t.get_str();
    }
  }
}

TEST(ClassifierProperties, InvariantsOnRandomParameters) {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 12);
  for (int i = 0; i < 60; ++i) {
    Rational t(num(rng), den(rng));
    t.canonicalize();
    if (t == 0) continue;
    SpecializationVerdict v = classify(t);
    SCOPED_TRACE(t.get_str());
    EXPECT_EQ(v.exactness, Exactness::Certified);
    if (v.faithful == Faithfulness::Yes) {
      EXPECT_TRUE(v.regime == Regime::NegativeHyperbolic || is_outer(v.regime));
    }
    if (v.regime == Regime::EllipticWindow) {
      EXPECT_NE(v.discrete.kind, DiscreteKind::Yes);
    }
    EXPECT_TRUE(duality_check(t));
  }
}

TEST(DualityCheck, NamedPoints) {
  for (Scalar t : {Scalar(-2), Scalar(-1), Scalar(1), Scalar(Rational(1, 2)), Scalar(Rational(1, 4)),
                   q5(Rational(3, 2), Rational(1, 2)), q5(Rational(1, 2), Rational(1, 2))})
    EXPECT_TRUE(duality_check(t)) << t.to_string();
  EXPECT_THROW(duality_check(Scalar(0)), PreconditionError);
  EXPECT_THROW(duality_check(Scalar::from_double(0.5)), PreconditionError);
}
