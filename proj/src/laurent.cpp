#include "burau/laurent.hpp"

#include "burau/error.hpp"

namespace burau {

LaurentPoly::LaurentPoly(long constant) { add_term(0, Integer(constant)); }

LaurentPoly::LaurentPoly(const Integer& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long>> terms) {
  for (const auto& [d, c] : terms) add_term(d, Integer(c));
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int degree) {
  LaurentPoly p;
  p.add_term(degree, coeff);
  return p;
}

void LaurentPoly::add_term(int degree, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly::low_degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::high_degree() const {
  if (is_zero()) throw PreconditionError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [d, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out -= o;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  // Dense accumulation over the product's degree range.
  int lo = low_degree() + o.low_degree();
  int hi = high_degree() + o.high_degree();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) acc[static_cast<std::size_t>(d1 + d2 - lo)] += c1 * c2;
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) out.terms_.emplace_hint(out.terms_.end(), lo + static_cast<int>(i), std::move(acc[i]));
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1L), base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(-d, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw PreconditionError("substitute_power needs a nonzero exponent");
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d * k, c);
  return out;
}

std::optional<LaurentPoly> LaurentPoly::deflate(int k) const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) {
    if (d % k != 0) return std::nullopt;
    out.terms_.emplace(d / k, c);
  }
  return out;
}

std::optional<std::pair<int, int>> LaurentPoly::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [d, c] = *terms_.begin();
  if (c == 1) return std::make_pair(1, d);
  if (c == -1) return std::make_pair(-1, d);
  return std::nullopt;
}

Scalar LaurentPoly::evaluate(const Scalar& x) const {
  if (is_zero()) return Scalar(0);
  int lo = low_degree(), hi = high_degree();
  if (lo < 0 && x.is_zero()) throw PreconditionError("evaluating a Laurent polynomial with negative powers at 0");
  // Horner on the shifted polynomial, then multiply by x^lo.
  Scalar acc(0);
  for (int d = hi; d >= lo; --d) {
    acc = acc * x;
    Integer c = coeff(d);
    if (c != 0) acc = acc + Scalar(c);
  }
  return acc * x.pow(lo);
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  int lo = low_degree(), hi = high_degree();
  if (lo < 0 && x == 0) throw PreconditionError("evaluating a Laurent polynomial with negative powers at 0");
  Rational acc = 0;
  for (int d = hi; d >= lo; --d) {
    acc *= x;
    auto it = terms_.find(d);
    if (it != terms_.end()) acc += it->second;
  }
  Rational scale = 1;
  Rational base = lo < 0 ? Rational(1 / x) : x;
  for (int i = 0; i < std::abs(lo); ++i) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += mag.get_str();
    if (d == 1)
      out += "*" + var;
    else if (d != 0)
      out += "*" + var + "^" + std::to_string(d);
  }
  return out;
}

// ------------------------------------------------------------ LaurentMatrix

LaurentMatrix::LaurentMatrix(int size) : n_(size), e_(static_cast<std::size_t>(size * size)) {
  if (size < 1) throw PreconditionError("matrix size must be positive");
}

LaurentMatrix::LaurentMatrix(int size, std::vector<LaurentPoly> entries) : n_(size), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(size * size))
    throw PreconditionError("matrix entry count does not match size");
}

LaurentMatrix LaurentMatrix::identity(int size) {
  LaurentMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = LaurentPoly(1L);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal(std::vector<LaurentPoly> d) {
  LaurentMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      LaurentPoly acc;
      for (int k = 0; k < n_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc += at(i, k) * o.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
  LaurentMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& c) const {
  LaurentMatrix out = *this;
  for (auto& e : out.e_) e = e * c;
  return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

LaurentMatrix LaurentMatrix::bar() const {
  LaurentMatrix out = *this;
  for (auto& e : out.e_) e = e.bar();
  return out;
}

LaurentMatrix LaurentMatrix::substitute_power(int k) const {
  LaurentMatrix out = *this;
  for (auto& e : out.e_) e = e.substitute_power(k);
  return out;
}

std::optional<LaurentMatrix> LaurentMatrix::deflate(int k) const {
  LaurentMatrix out = *this;
  for (auto& e : out.e_) {
    auto d = e.deflate(k);
    if (!d) return std::nullopt;
    e = std::move(*d);
  }
  return out;
}

LaurentPoly LaurentMatrix::det() const {
  if (n_ == 1) return at(0, 0);
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n_ == 3) {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }
  throw PreconditionError("determinant only implemented up to 3x3");
}

LaurentPoly LaurentMatrix::trace() const {
  LaurentPoly s;
  for (int i = 0; i < n_; ++i) s += at(i, i);
  return s;
}

LaurentMatrix LaurentMatrix::adjugate() const {
  LaurentMatrix out(n_);
  if (n_ == 1) {
    out.at(0, 0) = LaurentPoly(1L);
  } else if (n_ == 2) {
    out.at(0, 0) = at(1, 1);
    out.at(0, 1) = -at(0, 1);
    out.at(1, 0) = -at(1, 0);
    out.at(1, 1) = at(0, 0);
  } else if (n_ == 3) {
    auto minor = [&](int r, int c) {
      int r0 = r == 0 ? 1 : 0, r1 = r == 2 ? 1 : 2;
      int c0 = c == 0 ? 1 : 0, c1 = c == 2 ? 1 : 2;
      return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        LaurentPoly cof = minor(j, i);
        out.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
      }
  } else {
    throw PreconditionError("adjugate only implemented up to 3x3");
  }
  return out;
}

LaurentMatrix LaurentMatrix::inverse() const {
  LaurentPoly d = det();
  auto unit = d.as_unit();
  if (!unit) throw PreconditionError("determinant " + d.to_string() + " is not a unit of Z[t,t^-1]");
  // d = c t^k with c = +-1, so d^-1 = c t^-k.
  return adjugate().scaled(LaurentPoly::monomial(unit->first, -unit->second));
}

std::string LaurentMatrix::to_string(const std::string& var) const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < n_; ++j) out += (j ? ", " : "") + at(i, j).to_string(var);
    out += "]";
  }
  return out + "]";
}

}  // namespace burau
