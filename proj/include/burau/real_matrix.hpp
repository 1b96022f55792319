#pragma once

#include <string>
#include <vector>

#include "burau/exact_reals.hpp"

namespace burau {

/// Small dense matrix over Scalar (sizes 2 and 3 in practice).
class RealMatrix {
 public:
  explicit RealMatrix(int size);
  RealMatrix(int size, std::vector<Scalar> entries);

  static RealMatrix identity(int size);

  int size() const { return n_; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Scalar>& entries() const { return e_; }

  RealMatrix operator*(const RealMatrix& o) const;
  RealMatrix operator-(const RealMatrix& o) const;
  RealMatrix operator-() const;
  bool operator==(const RealMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

  Scalar det() const;
  Scalar trace() const;
  RealMatrix transpose() const;
  RealMatrix inverse() const;
  RealMatrix pow(int k) const;
  /// Entrywise Galois conjugation.
  RealMatrix conjugate() const;

  bool is_exact() const;
  bool is_identity() const { return *this == identity(n_); }
  /// Within `tol` of the identity entrywise (for float matrices).
  bool near_identity(double tol) const;
  bool is_upper_triangular() const;
  bool is_upper_unitriangular() const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Scalar> e_;
};

}  // namespace burau
