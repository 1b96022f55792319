#include "burau/real_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "burau/error.hpp"

namespace burau {

RealMatrix::RealMatrix(int size) : n_(size), e_(static_cast<std::size_t>(size * size), Scalar(0)) {}

RealMatrix::RealMatrix(int size, std::vector<Scalar> entries) : n_(size), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(size * size))
    throw PreconditionError("matrix entry count does not match size");
}

RealMatrix RealMatrix::identity(int size) {
  RealMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = Scalar(1);
  return m;
}

RealMatrix RealMatrix::operator*(const RealMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  RealMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Scalar acc(0);
      for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

RealMatrix RealMatrix::operator-(const RealMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  RealMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

RealMatrix RealMatrix::operator-() const {
  RealMatrix out = *this;
  for (auto& e : out.e_) e = -e;
  return out;
}

Scalar RealMatrix::det() const {
  if (n_ == 1) return at(0, 0);
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n_ == 3)
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  throw PreconditionError("determinant only implemented up to 3x3");
}

Scalar RealMatrix::trace() const {
  Scalar s(0);
  for (int i = 0; i < n_; ++i) s += at(i, i);
  return s;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RealMatrix RealMatrix::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw PreconditionError("singular matrix");
  Scalar inv = d.inverse();
  RealMatrix out(n_);
  if (n_ == 2) {
    out.at(0, 0) = at(1, 1) * inv;
    out.at(0, 1) = -at(0, 1) * inv;
    out.at(1, 0) = -at(1, 0) * inv;
    out.at(1, 1) = at(0, 0) * inv;
    return out;
  }
  if (n_ == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
        int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
        Scalar cof = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        out.at(i, j) = ((i + j) % 2 == 0 ? cof : -cof) * inv;
      }
    return out;
  }
  if (n_ == 1) {
    out.at(0, 0) = inv;
    return out;
  }
  throw PreconditionError("inverse only implemented up to 3x3");
}

RealMatrix RealMatrix::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RealMatrix result = identity(n_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

RealMatrix RealMatrix::conjugate() const {
  RealMatrix out = *this;
  for (auto& e : out.e_) e = galois_conjugate(e);
  return out;
}

bool RealMatrix::is_exact() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool RealMatrix::near_identity(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (std::abs(at(i, j).to_double() - (i == j ? 1.0 : 0.0)) > tol) return false;
  return true;
}

bool RealMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool RealMatrix::is_upper_unitriangular() const {
  if (!is_upper_triangular()) return false;
  for (int i = 0; i < n_; ++i)
    if (!(at(i, i) == Scalar(1))) return false;
  return true;
}

std::string RealMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) out += (j ? ", " : "") + at(i, j).to_string();
    out += "]";
  }
  return out + "]";
}

}  // namespace burau
