#include "burau/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "burau/braid.hpp"
#include "burau/error.hpp"
#include "burau/representation.hpp"

namespace burau {

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() && o.is_infinity();
  return compare(*value_, *o.value_) == 0;
}

std::string BoundaryPoint::to_string() const { return is_infinity() ? "inf" : value_->to_string(); }

double BoundaryPoint::to_double() const {
  return is_infinity() ? std::numeric_limits<double>::infinity() : value_->to_double();
}

int compare(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_infinity()) return q.is_infinity() ? 0 : 1;
  if (q.is_infinity()) return -1;
  return compare(p.value(), q.value());
}

std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Hyperbolic: return "hyperbolic";
    case IsometryKind::Parabolic: return "parabolic";
    case IsometryKind::Elliptic: return "elliptic";
    case IsometryKind::Scalar: return "scalar";
  }
  return "?";
}

namespace {

void require_2x2(const RealMatrix& m) {
  if (m.size() != 2) throw PreconditionError("expected a 2x2 matrix");
}

bool is_float_matrix(const RealMatrix& m) {
  for (const auto& e : m.entries())
    if (e.is_float()) return true;
  return false;
}

// Sign of x, treating floats within tol of zero as zero.
int fuzzy_sign(const Scalar& x, double tol) {
  if (!x.is_float()) return x.sign();
  double v = x.float_value();
  if (std::abs(v) <= tol) return 0;
  return v > 0 ? 1 : -1;
}

bool is_plus_minus_identity(const RealMatrix& m) {
  if (is_float_matrix(m)) {
    double a = m.at(0, 0).to_double(), d = m.at(1, 1).to_double();
    return std::abs(m.at(0, 1).to_double()) <= kFloatBoundaryTolerance &&
           std::abs(m.at(1, 0).to_double()) <= kFloatBoundaryTolerance &&
           std::abs(a - d) <= kFloatBoundaryTolerance && std::abs(std::abs(a) - 1) <= kFloatBoundaryTolerance;
  }
  return m.at(0, 1).is_zero() && m.at(1, 0).is_zero() && compare(m.at(0, 0), m.at(1, 1)) == 0 &&
         (m.at(0, 0).is_one() || (-m.at(0, 0)).is_one());
}

Scalar sqrt_or_float(const Scalar& x) {
  if (auto r = exact_sqrt(x)) return *r;
  return Scalar::from_double(std::sqrt(x.to_double()));
}

}  // namespace

IsometryClass classify_isometry(const RealMatrix& m) {
  require_2x2(m);
  Scalar det = m.det();
  if (det.is_float()) {
    if (std::abs(det.float_value() - 1) >= kDeterminantTolerance)
      throw PreconditionError("determinant " + det.to_string() + " is not 1");
  } else if (!det.is_one()) {
    throw PreconditionError("determinant " + det.to_string() + " is not 1");
  }
  Scalar tr = m.trace();
  if (is_plus_minus_identity(m)) return {IsometryKind::Scalar, tr, std::nullopt};
  int s = fuzzy_sign(tr * tr - Scalar(4), kFloatBoundaryTolerance);
  if (s > 0) return {IsometryKind::Hyperbolic, tr, std::nullopt};
  if (s == 0) return {IsometryKind::Parabolic, tr, std::nullopt};
  return {IsometryKind::Elliptic, tr, -tr / Scalar(2)};
}

BoundaryPoint mobius_apply(const RealMatrix& m, const BoundaryPoint& p) {
  require_2x2(m);
  const Scalar &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  if (p.is_infinity()) return c.is_zero() ? BoundaryPoint::infinity() : BoundaryPoint::finite(a / c);
  Scalar den = c * p.value() + d;
  if (den.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint::finite((a * p.value() + b) / den);
}

FixedPoints fixed_points(const RealMatrix& m) {
  require_2x2(m);
  if (is_plus_minus_identity(m)) throw PreconditionError("scalar matrix fixes every point");
  const Scalar &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  Scalar disc = (a - d) * (a - d) + Scalar(4) * b * c;
  int s = fuzzy_sign(disc, kFloatBoundaryTolerance);
  FixedPoints out;
  if (c.is_zero()) {
    // Upper triangular: infinity is fixed, plus b / (d - a) when a != d.
    out.boundary.push_back(BoundaryPoint::infinity());
    if (compare(a, d) == 0) {
      out.kind = IsometryKind::Parabolic;
    } else {
      out.kind = IsometryKind::Hyperbolic;
      out.boundary.insert(out.boundary.begin(), BoundaryPoint::finite(b / (d - a)));
    }
    return out;
  }
  Scalar two_c = Scalar(2) * c;
  Scalar centre = (a - d) / two_c;
  if (s == 0) {
    out.kind = IsometryKind::Parabolic;
    out.boundary.push_back(BoundaryPoint::finite(centre));
  } else if (s > 0) {
    out.kind = IsometryKind::Hyperbolic;
    Scalar r = sqrt_or_float(disc) / two_c;
    BoundaryPoint p = BoundaryPoint::finite(centre - r), q = BoundaryPoint::finite(centre + r);
    if (compare(p, q) > 0) std::swap(p, q);
    out.boundary = {p, q};
  } else {
    out.kind = IsometryKind::Elliptic;
    Scalar im = sqrt_or_float(-disc) / two_c;
    if (im.sign() < 0) im = -im;
    out.interior = InteriorPoint{centre, im};
  }
  return out;
}

CommutatorTraceCheck commutator_trace_check() {
  auto [x, y] = conjugated_generators();
  LaurentMatrix xi = x.inverse();
  CommutatorTraceCheck out;
  out.trace = (xi * y * x * y.inverse()).trace();
  const LaurentPoly t2{{2, 1}};
  out.expected = (LaurentPoly(1L) + t2) * LaurentPoly{{0, 1}, {2, -1}, {4, 1}} * LaurentPoly::var(-3);
  out.symbolic_equal = out.trace == out.expected;
  out.samples_exceed_two = true;
  for (const Scalar& t : {Scalar(3), Scalar(Rational(7, 2)), Scalar(4), Scalar(10)}) {
    Scalar v = out.trace.evaluate(t);
    out.samples.emplace_back(t, v);
    if (compare(v, Scalar(2)) <= 0) out.samples_exceed_two = false;
  }
  out.value_at_one = out.trace.evaluate(Scalar(1));
  return out;
}

std::string to_string(RotationClass c) {
  switch (c) {
    case RotationClass::Rational: return "rational_rotation";
    case RotationClass::Irrational: return "irrational_rotation";
    case RotationClass::Undetermined: return "undetermined";
  }
  return "?";
}

const std::vector<RotationCandidate>& rotation_candidates() {
  // phi(m) / 2 <= 2 leaves m in {1, 2, 3, 4, 5, 6, 8, 10, 12}.
  static const std::vector<RotationCandidate> list = [] {
    const Rational h(1, 2), q(1, 4);
    return std::vector<RotationCandidate>{
        {0, 1, Scalar(1)},
        {1, 2, Scalar(-1)},
        {1, 3, Scalar(Rational(-1, 2))},
        {1, 4, Scalar(0)},
        {1, 5, Scalar::quadratic(-q, q, 5)},
        {2, 5, Scalar::quadratic(-q, -q, 5)},
        {1, 6, Scalar(h)},
        {1, 8, Scalar::quadratic(0, h, 2)},
        {3, 8, Scalar::quadratic(0, -h, 2)},
        {1, 10, Scalar::quadratic(q, q, 5)},
        {3, 10, Scalar::quadratic(q, -q, 5)},
        {1, 12, Scalar::quadratic(0, h, 3)},
        {5, 12, Scalar::quadratic(0, -h, 3)},
    };
  }();
  return list;
}

std::optional<std::pair<long, long>> match_rational(double x, const RotationOptions& opt) {
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(r);
    long h = static_cast<long>(a) * h1 + h2;
    long k = static_cast<long>(a) * k1 + k2;
    if (k > opt.n_max) break;
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) < opt.epsilon) return std::make_pair(h, k);
    double frac = r - a;
    if (frac < 1e-300) break;
    r = 1 / frac;
    h2 = h1, h1 = h, k2 = k1, k1 = k;
  }
  return std::nullopt;
}

RotationData rotation_data(const RealMatrix& m, const Scalar& t0, const RotationOptions& opt) {
  if (classify_isometry(m).kind != IsometryKind::Elliptic)
    throw PreconditionError("rotation data needs an elliptic element");
  if (t0.is_zero()) throw PreconditionError("zero specialization");
  RotationData out;
  out.cos_theta = (t0 + t0.inverse() - Scalar(1)) / Scalar(2);
  if (out.cos_theta.is_exact()) {
    out.order_class = RotationClass::Irrational;
    for (const auto& c : rotation_candidates())
      if (c.cos_value.field() == out.cos_theta.field() && c.cos_value == out.cos_theta) {
        out.rotation_number = std::make_pair(c.k, c.m);
        out.order_class = RotationClass::Rational;
      }
  } else {
    out.numerical = true;
    double cv = std::clamp(out.cos_theta.to_double(), -1.0, 1.0);
    out.rotation_number = match_rational(std::acos(cv) / (2 * std::numbers::pi), opt);
    out.order_class = out.rotation_number ? RotationClass::Rational : RotationClass::Undetermined;
  }
  RealMatrix p = m;
  for (int k = 1; k <= 12; ++k, p = p * m) {
    bool id = is_float_matrix(p) ? p.near_identity(1e-9) : p.is_identity();
    if (id) {
      out.matrix_order = k;
      break;
    }
  }
  return out;
}

double hyperbolic_distance(std::complex<double> z, std::complex<double> w) {
  return 2 * std::asinh(std::abs(z - w) / (2 * std::sqrt(z.imag() * w.imag())));
}

OrbitEvidence orbit_accumulation_test(const Scalar& t0, int iterations, double threshold) {
  if (iterations < 2) throw PreconditionError("orbit test needs at least 2 iterations");
  const double t = t0.to_double();
  if (t == 0) throw PreconditionError("zero specialization");
  const double tr = -1 / t + 1 - t;
  if (!(std::abs(tr) < 2)) throw PreconditionError("t is outside the elliptic window");

  using C = std::complex<double>;
  // Elliptic fixed point of x = [[-1/t, -1/t], [1, 1 - t]].
  const double xa = -1 / t, xd = 1 - t;
  const double re = (xa - xd) / 2;
  const double im = std::sqrt(4 - tr * tr) / 2;
  OrbitEvidence out;
  out.t = t;
  out.iterations = iterations;
  out.threshold = threshold;
  out.fixed_point = C(re, im);

  const double ya = (t - 1) / t, yb = 1, yc = -t, yd = -t;
  std::vector<C> pts{out.fixed_point};
  while (static_cast<int>(pts.size()) < iterations) {
    C z = pts.back();
    pts.push_back((ya * z + yb) / (yc * z + yd));
  }
  std::vector<C> reps;
  for (const C& z : pts) {
    bool seen = false;
    for (const C& r : reps)
      if (hyperbolic_distance(z, r) < 1e-9) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(z);
  }
  // Distances between distinct orbit points; a periodic orbit never accumulates.
  out.min_distance = reps.size() < 2 ? 0 : std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      out.min_distance = std::min(out.min_distance, hyperbolic_distance(reps[i], reps[j]));
  out.accumulating = reps.size() == pts.size() && out.min_distance < threshold;
  out.distinct_points = static_cast<int>(reps.size());
  return out;
}

}  // namespace burau
