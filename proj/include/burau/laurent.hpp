#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burau/exact_reals.hpp"

namespace burau {

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored; the empty map is the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);
  LaurentPoly(const Integer& constant);
  /// Builds from (degree, coefficient) pairs; repeated degrees add up.
  LaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static LaurentPoly monomial(const Integer& coeff, int degree);
  /// The variable to the k-th power.
  static LaurentPoly var(int k = 1) { return monomial(1, k); }

  bool is_zero() const { return terms_.empty(); }
  /// Requires a nonzero polynomial.
  int low_degree() const;
  int high_degree() const;
  Integer coeff(int degree) const;
  const std::map<int, Integer>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(unsigned k) const;

  /// t -> t^-1.
  LaurentPoly bar() const;
  /// t -> t^k (k != 0); used for the t = s^2 convention.
  LaurentPoly substitute_power(int k) const;
  /// Divides every exponent by k when all are multiples of k.
  std::optional<LaurentPoly> deflate(int k) const;

  /// (c, k) when the polynomial is the unit c * t^k with c = +-1.
  std::optional<std::pair<int, int>> as_unit() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  Scalar evaluate(const Scalar& x) const;
  Rational evaluate(const Rational& x) const;

  /// Sparse ascending form, e.g. `-1*t^-1 + 1 - 1*t^2`.
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(int degree, const Integer& c);
  std::map<int, Integer> terms_;
};

/// Square matrix (2x2 or 3x3) over integer Laurent polynomials.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int size);
  LaurentMatrix(int size, std::vector<LaurentPoly> entries);

  static LaurentMatrix identity(int size);
  static LaurentMatrix diagonal(std::vector<LaurentPoly> d);

  int size() const { return n_; }
  const LaurentPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator+(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  LaurentMatrix scaled(const LaurentPoly& c) const;
  bool operator==(const LaurentMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

  LaurentMatrix transpose() const;
  LaurentMatrix bar() const;
  /// M* = bar(M)^T.
  LaurentMatrix star() const { return bar().transpose(); }
  LaurentMatrix substitute_power(int k) const;
  std::optional<LaurentMatrix> deflate(int k) const;

  LaurentPoly det() const;
  LaurentPoly trace() const;
  LaurentMatrix adjugate() const;
  /// Exact inverse over the Laurent ring; throws PreconditionError unless
  /// det is a unit +-t^k.
  LaurentMatrix inverse() const;
  bool is_identity() const { return *this == identity(n_); }

  std::string to_string(const std::string& var = "t") const;

 private:
  int n_;
  std::vector<LaurentPoly> e_;
};

}  // namespace burau
