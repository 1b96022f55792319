#include "burau/classifier.hpp"

#include <cmath>

#include "burau/braid.hpp"
#include "burau/error.hpp"
#include "burau/pingpong.hpp"
#include "burau/representation.hpp"

namespace burau {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::NegativeHyperbolic: return "negative_hyperbolic";
    case Regime::PositiveOuter: return "positive_outer";
    case Regime::ParabolicBoundary: return "parabolic_boundary";
    case Regime::EllipticWindow: return "elliptic_window";
    case Regime::ExcludedZero: return "excluded_zero";
    case Regime::MinusOne: return "minus_one";
    case Regime::One: return "one";
  }
  return "?";
}

bool is_outer(Regime r) { return r == Regime::PositiveOuter || r == Regime::ParabolicBoundary; }

std::string to_string(const Discreteness& d) {
  switch (d.kind) {
    case DiscreteKind::Yes: return "yes";
    case DiscreteKind::No: return "no";
    case DiscreteKind::TriangleGroup: return "triangle_group(" + std::to_string(d.triangle_order) + ")";
    case DiscreteKind::NumericalNo: return "numerical_no";
    case DiscreteKind::NumericalUndetermined: return "numerical_undetermined";
  }
  return "?";
}

std::string to_string(Faithfulness f) {
  switch (f) {
    case Faithfulness::Yes: return "yes";
    case Faithfulness::No: return "no";
    case Faithfulness::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Exactness e) { return e == Exactness::Certified ? "certified" : "numerical"; }

Regime regime_of(const Scalar& t0) {
  if (t0.is_zero()) return Regime::ExcludedZero;
  if (compare(t0, Scalar(-1)) == 0) return Regime::MinusOne;
  if (compare(t0, Scalar(1)) == 0) return Regime::One;
  if (t0.sign() < 0) return Regime::NegativeHyperbolic;
  Scalar w = t0 * t0 - Scalar(3) * t0 + Scalar(1);
  int s = w.sign();
  if (s > 0) return Regime::PositiveOuter;
  if (s == 0) return Regime::ParabolicBoundary;
  return Regime::EllipticWindow;
}

namespace {

IsometryKind expected_kind(Regime r) {
  switch (r) {
    case Regime::ParabolicBoundary: return IsometryKind::Parabolic;
    case Regime::EllipticWindow:
    case Regime::One: return IsometryKind::Elliptic;
    default: return IsometryKind::Hyperbolic;
  }
}

std::string regime_detail(Regime r) {
  switch (r) {
    case Regime::NegativeHyperbolic: return "t < 0, t != -1";
    case Regime::PositiveOuter: return "t > 0 and t^2 - 3t + 1 > 0";
    case Regime::ParabolicBoundary: return "t^2 - 3t + 1 = 0";
    case Regime::EllipticWindow: return "t^2 - 3t + 1 < 0, t != 1";
    case Regime::ExcludedZero: return "t = 0";
    case Regime::MinusOne: return "t = -1";
    case Regime::One: return "t = 1";
  }
  return "";
}

bool near_float_boundary(double t) {
  const double s5 = std::sqrt(5.0);
  for (double b : {-1.0, 0.0, 1.0, (3 - s5) / 2, (3 + s5) / 2})
    if (std::abs(t - b) <= kFloatBoundaryTolerance) return true;
  return false;
}

// Ping-pong at t (t > 1) or at the dual point 1/t.
Evidence pingpong_evidence(const Scalar& t0, Regime r) {
  Evidence e{"pingpong", "", ""};
  Scalar t = t0;
  if (r != Regime::NegativeHyperbolic && compare(t0, Scalar(1)) < 0) t = t0.inverse();
  PingPongCase c = r == Regime::NegativeHyperbolic  ? PingPongCase::Negative
                   : r == Regime::ParabolicBoundary ? PingPongCase::Parabolic
                                                    : PingPongCase::Outer;
  try {
    PingPongCertificate cert = pingpong_certificate(t, c);
    e.status = cert.verified() ? "verified" : "failed";
    e.detail = "case " + std::to_string(static_cast<int>(c)) + " boundary schedule at t = " + t.to_string() +
               (cert.exact ? " (exact)" : " (float)");
  } catch (const Error& ex) {
    e.status = "failed";
    e.detail = ex.what();
  }
  return e;
}

std::string rotation_detail(const RotationData& rd) {
  std::string s = "cos_theta = " + rd.cos_theta.to_string() + ", " + to_string(rd.order_class);
  if (rd.rotation_number)
    s += " " + std::to_string(rd.rotation_number->first) + "/" + std::to_string(rd.rotation_number->second);
  s += rd.numerical ? " (continued fractions)" : " (degree <= 2 candidate list)";
  return s;
}

}  // namespace

SpecializationVerdict classify(const Scalar& t0, const RotationOptions& opt) {
  SpecializationVerdict v;
  v.t_input = t0;
  v.exactness = t0.is_exact() ? Exactness::Certified : Exactness::Numerical;
  v.regime = regime_of(t0);
  v.evidence.push_back({"regime", "ok", regime_detail(v.regime)});

  if (v.regime == Regime::ExcludedZero) {
    v.discrete = {DiscreteKind::No};
    v.faithful = Faithfulness::No;
    v.evidence.push_back({"zero_specialization", "error", "det rho(sigma_i) = -t vanishes; no map to GL_2"});
    return v;
  }
  if (t0.is_float() && near_float_boundary(t0.float_value())) {
    v.discrete = {DiscreteKind::NumericalUndetermined};
    v.faithful = Faithfulness::Undetermined;
    v.evidence.push_back({"boundary_proximity", "undetermined", "float within 1e-12 of a regime boundary"});
    return v;
  }

  const auto gens = conjugated_generators();
  const RealMatrix x = specialize(gens.x, t0);
  const IsometryClass cls = classify_isometry(x);
  const bool kind_ok = cls.kind == expected_kind(v.regime);
  v.evidence.push_back({"trace_class", kind_ok ? "ok" : "mismatch",
                        "x is " + to_string(cls.kind) + " with trace " + cls.trace.to_string()});
  if (!kind_ok) throw InvariantError("isometry class of x disagrees with the regime at t = " + t0.to_string());

  const Scalar t3 = t0 * t0 * t0;
  v.evidence.push_back({"center", t3.is_one() ? "identity" : "nonidentity",
                        "rho((s1 s2)^3) specializes to " + t3.to_string() + " * I"});
  const Scalar dual = t0.inverse();
  v.evidence.push_back({"duality_partner", "ok", "1/t = " + dual.to_string() + " in regime " + to_string(regime_of(dual))});

  const bool exact = t0.is_exact();
  switch (v.regime) {
    case Regime::NegativeHyperbolic:
    case Regime::PositiveOuter:
    case Regime::ParabolicBoundary:
      v.discrete = {DiscreteKind::Yes};
      v.faithful = Faithfulness::Yes;
      v.evidence.push_back(pingpong_evidence(t0, v.regime));
      break;
    case Regime::MinusOne: {
      v.discrete = {DiscreteKind::Yes};
      v.faithful = Faithfulness::No;
      const RealMatrix y = specialize(gens.y, t0);
      bool integral = true;
      for (const RealMatrix* m : {&x, &y})
        for (const auto& e : m->entries())
          if (!e.is_rational() || e.rational().get_den() != 1) integral = false;
      v.evidence.push_back({"integer_entries", integral ? "ok" : "failed",
                            "x = " + x.to_string() + ", y = " + y.to_string()});
      v.evidence.push_back({"minus_one", "flag",
                            "t = -1 lies outside the negative regime of the classification; "
                            "discreteness is read off the integral image"});
      BraidWord k = power(named_word("center3", 3), 2);
      bool kernel = specialize(burau(k), t0).is_identity() && !burau(k).is_identity();
      v.evidence.push_back({"kernel_element", kernel ? "ok" : "failed",
                            "(s1 s2)^6 has image t^6 * I, the identity at t = -1"});
      break;
    }
    case Regime::One:
    case Regime::EllipticWindow: {
      RotationData rd = rotation_data(x, t0, opt);
      v.evidence.push_back({"rotation_data", "ok", rotation_detail(rd)});
      v.evidence.push_back({"matrix_order", rd.matrix_order ? "finite" : "none_up_to_12",
                            rd.matrix_order ? "x^" + std::to_string(*rd.matrix_order) + " = I" : "x^k != I for k <= 12"});
      v.faithful = Faithfulness::Undetermined;
      if (rd.order_class == RotationClass::Rational && rd.rotation_number->first == 1 &&
          rd.rotation_number->second >= 6) {
        v.discrete = {DiscreteKind::TriangleGroup, static_cast<int>(rd.rotation_number->second)};
        v.faithful = Faithfulness::No;
      } else if (rd.order_class == RotationClass::Undetermined) {
        v.discrete = {DiscreteKind::NumericalNo};
      } else {
        v.discrete = {exact ? DiscreteKind::No : DiscreteKind::NumericalNo};
      }
      if (v.regime == Regime::One) {
        bool kernel = specialize(burau(named_word("center3", 3)), t0).is_identity();
        v.evidence.push_back({"kernel_element", kernel ? "ok" : "failed",
                              "(s1 s2)^3 has image t^3 * I, the identity at t = 1"});
      }
      break;
    }
    case Regime::ExcludedZero: break;
  }
  return v;
}

bool duality_check(const Scalar& t0) {
  if (!t0.is_exact() || t0.is_zero()) throw PreconditionError("duality check needs an exact nonzero t");
  SpecializationVerdict a = classify(t0), b = classify(t0.inverse());
  return a.discrete == b.discrete && a.faithful == b.faithful;
}

}  // namespace burau
