#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "burau/exact_reals.hpp"
#include "burau/laurent.hpp"
#include "burau/real_matrix.hpp"

namespace burau {

/// A point of the boundary R u {inf} of the upper half-plane.
class BoundaryPoint {
 public:
  /// The point at infinity.
  BoundaryPoint() = default;
  static BoundaryPoint infinity() { return BoundaryPoint(); }
  static BoundaryPoint finite(Scalar v) { BoundaryPoint p; p.value_ = std::move(v); return p; }

  bool is_infinity() const { return !value_.has_value(); }
  const Scalar& value() const { return *value_; }
  bool is_exact() const { return is_infinity() || value_->is_exact(); }

  bool operator==(const BoundaryPoint& o) const;
  std::string to_string() const;
  /// Numeric value; +inf for the point at infinity.
  double to_double() const;

 private:
  std::optional<Scalar> value_;
};

/// Compares boundary points on the line, with infinity above everything.
int compare(const BoundaryPoint& p, const BoundaryPoint& q);

enum class IsometryKind { Hyperbolic, Parabolic, Elliptic, Scalar };
std::string to_string(IsometryKind k);

struct IsometryClass {
  IsometryKind kind;
  Scalar trace;
  /// -trace/2 for elliptic elements: for x and y this is the cosine of the
  /// angle defined by -2 cos(theta) = 1 - t - 1/t.
  std::optional<Scalar> cos_theta;
};

/// Tolerance for float determinants.
inline constexpr double kDeterminantTolerance = 1e-9;
/// Float traces within this distance of +-2 count as parabolic.
inline constexpr double kFloatBoundaryTolerance = 1e-12;

/// Trace trichotomy for a 2x2 matrix of determinant 1.
IsometryClass classify_isometry(const RealMatrix& m);

/// (a p + b) / (c p + d) with the usual conventions at infinity.
BoundaryPoint mobius_apply(const RealMatrix& m, const BoundaryPoint& p);

/// A point of the upper half-plane re + i*im, im > 0.
struct InteriorPoint {
  Scalar re;
  Scalar im;
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

struct FixedPoints {
  IsometryKind kind;
  /// Two points (hyperbolic, ascending) or one (parabolic).
  std::vector<BoundaryPoint> boundary;
  /// Elliptic only.
  std::optional<InteriorPoint> interior;
};

/// Fixed points from c z^2 + (d - a) z - b = 0. Square roots are taken
/// exactly when they exist in Q or the entries' quadratic field; otherwise
/// the affected coordinates fall back to floats.
FixedPoints fixed_points(const RealMatrix& m);

/// Symbolic check of tr([x^-1, y]) * t^3 = (1 + t^2)(1 - t^2 + t^4) together
/// with sampled values.
struct CommutatorTraceCheck {
  LaurentPoly trace;
  LaurentPoly expected;
  bool symbolic_equal = false;
  /// (t, value) at exact sample points beyond the parabolic endpoint.
  std::vector<std::pair<Scalar, Scalar>> samples;
  bool samples_exceed_two = false;
  Scalar value_at_one;
};
CommutatorTraceCheck commutator_trace_check();

enum class RotationClass { Rational, Irrational, Undetermined };
std::string to_string(RotationClass c);

struct RotationData {
  Scalar cos_theta;
  /// k/m in lowest terms.
  std::optional<std::pair<long, long>> rotation_number;
  RotationClass order_class = RotationClass::Undetermined;
  /// True when the decision came from float matching.
  bool numerical = false;
  /// Smallest k <= 12 with M^k = I (exactly, or within 1e-9 for floats).
  std::optional<int> matrix_order;
};

struct RotationOptions {
  double epsilon = 1e-9;
  long n_max = 1000;
};

/// cos(2 pi k / m) for every reduced k/m in [0, 1/2] whose cosine has degree
/// at most 2 over Q.
struct RotationCandidate {
  long k;
  long m;
  Scalar cos_value;
};
const std::vector<RotationCandidate>& rotation_candidates();

/// Rotation data for an elliptic M arising at t0, with
/// cos_theta = (t0 + 1/t0 - 1) / 2.
RotationData rotation_data(const RealMatrix& m, const Scalar& t0, const RotationOptions& opt = {});

/// Best rational approximation k/m (m <= n_max) of x by continued fractions,
/// accepted when |x - k/m| < epsilon.
std::optional<std::pair<long, long>> match_rational(double x, const RotationOptions& opt);

/// Orbit of the elliptic fixed point of x under y, in double precision.
struct OrbitEvidence {
  double t = 0;
  int iterations = 0;
  std::complex<double> fixed_point;
  /// Smallest distance between distinct orbit points (0 when there is one).
  double min_distance = 0;
  double threshold = 0;
  /// Every point distinct and min_distance below the threshold.
  bool accumulating = false;
  /// Number of clusters at hyperbolic distance 1e-9.
  int distinct_points = 0;
};
OrbitEvidence orbit_accumulation_test(const Scalar& t0, int iterations, double threshold);

/// Upper half-plane distance, in the form stable for nearby points.
double hyperbolic_distance(std::complex<double> z, std::complex<double> w);

}  // namespace burau
