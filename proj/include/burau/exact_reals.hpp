#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace burau {

using Integer = mpz_class;
using Rational = mpq_class;

/// a + b*sqrt(d) with rational a, b and squarefree d >= 2.
///
/// The constructor accepts any d >= 2 and pulls square factors into b, so
/// QuadNum(0, 1, 8) is stored as 2*sqrt(2). A radicand that reduces to 1 is
/// rejected; use Scalar::quadratic() when that case should collapse to a
/// rational instead.
class QuadNum {
 public:
  QuadNum(Rational a, Rational b, long d);
  /// Embeds a rational into Q(sqrt(d)); d must already be squarefree.
  static QuadNum embed(Rational a, long squarefree_d) {
    return QuadNum(std::move(a), Rational(0), squarefree_d, Normalized{});
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Galois conjugate a - b*sqrt(d).
  QuadNum conjugate() const { return QuadNum(a_, -b_, d_, Normalized{}); }
  /// Field norm x * conj(x) = a^2 - d*b^2.
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  /// Field trace x + conj(x) = 2a.
  Rational trace() const { return 2 * a_; }

  /// Exact sign, decided without floating point.
  int sign() const;

  QuadNum operator-() const { return QuadNum(-a_, -b_, d_, Normalized{}); }
  QuadNum operator+(const QuadNum& o) const;
  QuadNum operator-(const QuadNum& o) const;
  QuadNum operator*(const QuadNum& o) const;
  QuadNum operator/(const QuadNum& o) const;
  QuadNum inverse() const;

  bool operator==(const QuadNum& o) const;

  /// Within one ulp of the true value (computed through 256-bit floats).
  double to_double() const;
  /// `q(a,b,d)` -- the scalar input grammar.
  std::string to_string() const;

 private:
  struct Normalized {};
  QuadNum(Rational a, Rational b, long d, Normalized)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  void check_field(const QuadNum& o) const;

  Rational a_;
  Rational b_;
  long d_;
};

/// Splits n > 0 into s^2 * m with m squarefree. Returns {s, m}.
std::pair<long, long> square_decomposition(long n);

enum class ScalarKind { Rational, Quadratic, Float };

/// The specialization scalar: an exact rational, an exact element of a real
/// quadratic field, or a double.
///
/// Arithmetic promotes Rational -> Quadratic -> Float. A quadratic result
/// whose irrational part cancels collapses back to Rational, so the
/// Quadratic alternative always has b != 0. Combining two irrational
/// quadratics from different fields throws PreconditionError.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int v) : v_(Rational(v)) {}
  Scalar(long v) : v_(Rational(v)) {}
  Scalar(Rational v) : v_(std::move(v)) { std::get<Rational>(v_).canonicalize(); }
  Scalar(const Integer& v) : v_(Rational(v)) {}
  Scalar(const QuadNum& q);

  static Scalar from_double(double v) { Scalar s; s.v_ = v; return s; }
  /// a + b*sqrt(d); d may carry square factors, d reducing to 1 is allowed.
  static Scalar quadratic(const Rational& a, const Rational& b, long d);

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
  bool is_exact() const { return kind() != ScalarKind::Float; }
  bool is_float() const { return kind() == ScalarKind::Float; }
  bool is_rational() const { return kind() == ScalarKind::Rational; }
  bool is_quadratic() const { return kind() == ScalarKind::Quadratic; }

  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadNum& quad() const { return std::get<QuadNum>(v_); }
  double float_value() const { return std::get<double>(v_); }
  /// The radicand for quadratic values, nullopt otherwise.
  std::optional<long> field() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(int k) const;

  /// Exact equality for exact kinds; bitwise value equality for floats.
  bool operator==(const Scalar& o) const;

  double to_double() const;
  std::string to_string() const;

 private:
  std::variant<Rational, QuadNum, double> v_;
};

/// sign(x - y); exact whenever both operands are exact.
int compare(const Scalar& x, const Scalar& y);

/// Galois conjugation on exact scalars (identity on rationals).
Scalar galois_conjugate(const Scalar& x);

/// Square root inside Q or a real quadratic field, if one exists there.
/// Returns nullopt for negative input, floats, or roots of higher degree.
std::optional<Scalar> exact_sqrt(const Scalar& x);

/// Parses `p/q`, an integer, `q(a,b,d)` or a decimal literal (Float).
Scalar parse_scalar(std::string_view text);

enum class QuadraticIntegerStatus {
  NormOne,       // algebraic integer with x * conj(x) = 1
  NormMinusOne,  // algebraic integer with x * conj(x) = -1
  NotUnit,       // algebraic integer, norm not +-1
  NotInteger,    // minimal polynomial not monic over Z
  Rational,      // b = 0: not a quadratic irrationality
};

struct QuadraticIntegerInfo {
  QuadraticIntegerStatus status;
  Rational norm;
  /// Minimal polynomial over Q, ascending, scaled to a primitive integer
  /// polynomial with positive leading coefficient.
  std::vector<Integer> minimal_polynomial;
};

QuadraticIntegerInfo quadratic_integer_info(const QuadNum& x);
bool is_unit_quadratic_integer(const QuadNum& x);
std::string to_string(QuadraticIntegerStatus s);

}  // namespace burau
