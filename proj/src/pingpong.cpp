#include "burau/pingpong.hpp"

#include <algorithm>
#include <cmath>

#include "burau/error.hpp"
#include "burau/representation.hpp"

namespace burau {

namespace {

BoundaryPoint inf() { return BoundaryPoint::infinity(); }
BoundaryPoint pt(const Scalar& v) { return BoundaryPoint::finite(v); }

const Scalar& finite(const BoundaryPoint& p, const char* what) {
  if (p.is_infinity()) throw InvariantError(std::string(what) + " is unexpectedly infinite");
  return p.value();
}

// A point inside the open arc.
BoundaryPoint arc_sample(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (q.is_infinity()) return pt(p.value() + Scalar(1));
  if (p.is_infinity()) return pt(q.value() - Scalar(1));
  if (compare(p, q) < 0) return pt((p.value() + q.value()) / Scalar(2));
  return pt(p.value() + Scalar(1));
}

// Attracting when |c z + d| > 1, i.e. the derivative 1/(c z + d)^2 is below 1.
bool is_attracting(const RealMatrix& m, const BoundaryPoint& z) {
  if (z.is_infinity()) return compare(m.at(1, 1) * m.at(1, 1), Scalar(1)) < 0;
  Scalar v = m.at(1, 0) * z.value() + m.at(1, 1);
  return compare(v * v, Scalar(1)) > 0;
}

std::pair<BoundaryPoint, BoundaryPoint> repelling_attracting(const RealMatrix& m) {
  FixedPoints f = fixed_points(m);
  if (f.kind != IsometryKind::Hyperbolic) throw InvariantError("expected a hyperbolic generator");
  if (is_attracting(m, f.boundary[0])) return {f.boundary[1], f.boundary[0]};
  return {f.boundary[0], f.boundary[1]};
}

BoundaryPoint single_fixed_point(const RealMatrix& m) {
  FixedPoints f = fixed_points(m);
  if (f.kind != IsometryKind::Parabolic) throw InvariantError("expected a parabolic element");
  return f.boundary.front();
}

void check_regime(const Scalar& t0, PingPongCase c) {
  if (t0.is_zero()) throw PreconditionError("zero specialization");
  Scalar w = t0 * t0 - Scalar(3) * t0 + Scalar(1);
  switch (c) {
    case PingPongCase::Negative:
      if (t0.sign() >= 0) throw PreconditionError("case 1 needs t < 0");
      return;
    case PingPongCase::Parabolic:
      if (!t0.is_exact() || !w.is_zero() || compare(t0, Scalar(1)) <= 0)
        throw PreconditionError("case 2 needs the exact parabolic point t = (3+sqrt5)/2");
      return;
    case PingPongCase::Outer: {
      bool outside = w.is_float() ? w.float_value() > kFloatBoundaryTolerance : w.sign() > 0;
      if (!outside || compare(t0, Scalar(1)) <= 0) throw PreconditionError("case 3 needs t > (3+sqrt5)/2");
      return;
    }
  }
  throw PreconditionError("unknown ping-pong case");
}

// Exact equality, or agreement to 1e-9 (relative) when floats are involved.
bool same_point(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.is_exact() && q.is_exact()) return p == q;
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  double a = p.to_double(), b = q.to_double();
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a));
}

ArcMapping check_mapping(const std::string& gen, const RealMatrix& g, const Arc& source, const Arc& target) {
  ArcMapping m;
  m.generator = gen;
  m.source = source.name;
  m.target = target.name;
  // The complement of the source runs from source.end to source.start.
  m.image_of_start = mobius_apply(g, source.end);
  m.image_of_end = mobius_apply(g, source.start);
  m.sample = arc_sample(source.end, source.start);
  m.image_of_sample = mobius_apply(g, m.sample);
  m.endpoints_ok = same_point(m.image_of_start, target.start) && same_point(m.image_of_end, target.end);
  m.sample_ok = arc_contains(target, m.image_of_sample);
  m.orientation_preserving = g.det().sign() > 0;
  return m;
}

// Endpoints read around the circle must wrap exactly once.
bool cyclically_ordered(const std::vector<Arc>& arcs) {
  std::vector<BoundaryPoint> seq;
  for (const auto& a : arcs) {
    if (a.start == a.end) return false;
    seq.push_back(a.start);
    seq.push_back(a.end);
  }
  int descents = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (compare(seq[(i + 1) % seq.size()], seq[i]) < 0) ++descents;
  return descents == 1;
}

}  // namespace

bool arc_contains(const Arc& arc, const BoundaryPoint& z) {
  const BoundaryPoint &p = arc.start, &q = arc.end;
  if (q.is_infinity()) return !z.is_infinity() && compare(z, p) > 0;
  if (p.is_infinity()) return !z.is_infinity() && compare(z, q) < 0;
  if (compare(p, q) < 0) return compare(p, z) < 0 && compare(z, q) < 0;
  return z.is_infinity() || compare(z, p) > 0 || compare(z, q) < 0;
}

bool PingPongCertificate::verified() const {
  if (!points_distinct || !arcs_cyclically_ordered) return false;
  for (const auto& m : mappings)
    if (!m.endpoints_ok || !m.sample_ok || !m.orientation_preserving) return false;
  return !mappings.empty();
}

PingPongCertificate pingpong_certificate(const Scalar& t0, PingPongCase case_id) {
  check_regime(t0, case_id);
  auto gens = conjugated_generators();
  RealMatrix x = specialize(gens.x, t0), y = specialize(gens.y, t0);
  RealMatrix xi = x.inverse(), yi = y.inverse();

  PingPongCertificate cert;
  cert.case_id = case_id;
  cert.t = t0;
  std::vector<BoundaryPoint> distinct;  // must be pairwise different

  if (case_id == PingPongCase::Negative) {
    BoundaryPoint a = mobius_apply(yi, inf());      // -1
    BoundaryPoint b = mobius_apply(x * yi, inf());  // 0
    BoundaryPoint c = mobius_apply(x, inf());       // -1/t
    cert.marked_points = {{"inf", inf()},
                          {"y^-1(inf)", a},
                          {"x y^-1(inf)", b},
                          {"x(inf)", c},
                          {"y x y^-1(inf)", mobius_apply(y * x * yi, inf())}};
    distinct = {inf(), a, b, c};
    cert.arcs = {{"Y-", a, b}, {"X+", b, c}, {"Y+", c, inf()}, {"X-", inf(), a}};
  } else if (case_id == PingPongCase::Parabolic) {
    BoundaryPoint p = single_fixed_point(x);
    BoundaryPoint q = single_fixed_point(y);
    BoundaryPoint r = single_fixed_point(y * xi);
    BoundaryPoint s = mobius_apply(xi, r);
    cert.marked_points = {{"fix(x^-1)", single_fixed_point(xi)}, {"fix(y)", q},
                          {"fix(y x^-1)", r},                     {"x^-1(fix(y x^-1))", s},
                          {"y^-1(fix(y x^-1))", mobius_apply(yi, r)}};
    distinct = {p, q, r, s};
    cert.arcs = {{"Y-", s, q}, {"Y+", q, r}, {"X+", r, p}, {"X-", p, s}};
  } else {
    auto [xr, xa] = repelling_attracting(x);
    auto [yr, ya] = repelling_attracting(y);
    FixedPoints rf = fixed_points(y * xi);
    if (rf.kind != IsometryKind::Hyperbolic) throw InvariantError("y x^-1 is not hyperbolic");
    BoundaryPoint r1 = rf.boundary[0], r2 = rf.boundary[1];
    BoundaryPoint s1 = mobius_apply(xi, r1), s2 = mobius_apply(xi, r2);
    cert.marked_points = {{"fix(x^-1) repelling for x", xr}, {"fix(x^-1) attracting for x", xa},
                          {"fix(y) repelling", yr},          {"fix(y) attracting", ya},
                          {"fix(y x^-1) low", r1},           {"fix(y x^-1) high", r2},
                          {"x^-1(fix(y x^-1) low)", s1},     {"x^-1(fix(y x^-1) high)", s2}};
    distinct = {xr, xa, yr, ya, r1, r2};
    const Scalar two(2);
    // Cut points: one inside each gap of the funnel picture.
    Scalar s = (finite(s1, "s1") + finite(s2, "s2")) / two;
    Scalar r = finite(mobius_apply(y, pt(s)), "y(s)");
    Scalar r_prime = (r + finite(mobius_apply(x, pt(s)), "x(s)")) / two;
    BoundaryPoint s_prime = mobius_apply(xi, pt(r_prime));
    Scalar q1 = (finite(yr, "fix(y)") + finite(ya, "fix(y)")) / two;
    BoundaryPoint q2 = mobius_apply(y, pt(q1));
    Scalar p2 = (finite(xr, "fix(x)") + finite(xa, "fix(x)")) / two;
    BoundaryPoint p1 = mobius_apply(x, pt(p2));
    cert.arcs = {{"Y-", pt(s), pt(q1)}, {"Y+", q2, pt(r)}, {"X+", pt(r_prime), p1}, {"X-", pt(p2), s_prime}};
  }

  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (distinct[i] == distinct[j])
        throw InvariantError("marked boundary points coincide: " + distinct[i].to_string());
  cert.points_distinct = true;
  cert.arcs_cyclically_ordered = cyclically_ordered(cert.arcs);

  auto arc = [&](const std::string& name) -> const Arc& {
    for (const auto& a : cert.arcs)
      if (a.name == name) return a;
    throw InvariantError("missing arc " + name);
  };
  cert.mappings = {check_mapping("y", y, arc("Y-"), arc("Y+")), check_mapping("x", x, arc("X-"), arc("X+"))};

  cert.exact = true;
  for (const auto& a : cert.arcs)
    if (!a.start.is_exact() || !a.end.is_exact()) cert.exact = false;
  for (const auto& m : cert.marked_points)
    if (!m.point.is_exact()) cert.exact = false;
  return cert;
}

}  // namespace burau
