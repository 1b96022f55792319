#pragma once

#include <string>
#include <utility>
#include <vector>

#include "burau/exact_reals.hpp"
#include "burau/laurent.hpp"

namespace burau {

/// Ordinary integer polynomial, coefficients in ascending degree, no
/// trailing zeros (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  Integer coeff(int i) const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }
  IntPoly derivative() const;
  /// Divides out the integer content and makes the leading coefficient positive.
  IntPoly primitive() const;

  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Dense ascending form with zero terms omitted, e.g. `-1 + t - 2*t^2 + t^3`.
  std::string to_string() const;

 private:
  std::vector<Integer> c_;
};

/// q with q(t) * t^shift = p(t) and q(0) != 0. The integer content is kept.
std::pair<IntPoly, int> normalize_to_intpoly(const LaurentPoly& p);

/// f divides g over Q.
bool divides(const IntPoly& f, const IntPoly& g);
/// Primitive gcd over Q with positive leading coefficient.
IntPoly gcd(const IntPoly& f, const IntPoly& g);
/// Product of the distinct irreducible factors (p / gcd(p, p')), primitive.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of a polynomial. Every member is stored as a primitive
/// integer polynomial (positive rescaling keeps sign sequences intact).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);

  const std::vector<IntPoly>& chain() const { return chain_; }
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  /// Distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  /// Distinct real roots on the whole line.
  int count_real_roots() const;

 private:
  std::vector<IntPoly> chain_;
};

/// An isolating interval for one real root of `poly`. When lo == hi the
/// root is the exact rational lo. Otherwise poly(lo) and poly(hi) are
/// nonzero with opposite signs and the root is the only one in (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;
  IntPoly poly;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  double approx() const;
};

/// All distinct real roots of q, ascending. The isolating polynomial stored
/// in each interval is the squarefree part of q. Rational roots are reported
/// as exact points.
std::vector<RootInterval> isolate_real_roots(const IntPoly& q);
/// Same, restricted to roots in (lo, hi].
std::vector<RootInterval> isolate_real_roots(const IntPoly& q, const Rational& lo, const Rational& hi);
/// Bisects until width <= max_width (exact intervals are returned as is).
RootInterval refine(const RootInterval& r, const Rational& max_width);
/// A bound B with every real root of q in (-B, B).
Rational root_bound(const IntPoly& q);

}  // namespace burau
