#include "burau/exact_reals.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "burau/error.hpp"

namespace burau {

namespace {

constexpr unsigned long kFloatBits = 256;

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n = sqrt(Integer(r.get_num()));
  Integer d = sqrt(Integer(r.get_den()));
  Rational out(n, d);
  out.canonicalize();
  return out;
}

// s^2 * m decomposition for arbitrary nonnegative integers that fit in a
// long; larger inputs are only handled when they are perfect squares.
std::optional<std::pair<Integer, long>> square_decomposition_big(const Integer& n) {
  if (n.fits_slong_p()) {
    auto [s, m] = square_decomposition(n.get_si());
    return std::make_pair(Integer(s), m);
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) return std::make_pair(Integer(sqrt(n)), 1L);
  return std::nullopt;
}

Rational parse_rational_token(std::string_view text, std::size_t offset) {
  auto trimmed_begin = text.find_first_not_of(" \t");
  auto trimmed_end = text.find_last_not_of(" \t");
  if (trimmed_begin == std::string_view::npos) throw ParseError("empty number", offset);
  text = text.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
  offset += trimmed_begin;

  auto slash = text.find('/');
  auto check_int = [&](std::string_view s, std::size_t off) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) throw ParseError("expected digits", off);
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", off + i);
    std::string str(s);
    if (str[0] == '+') str.erase(0, 1);
    return Integer(str);
  };
  if (slash == std::string_view::npos) return Rational(check_int(text, offset));
  Integer num = check_int(text.substr(0, slash), offset);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be unsigned", offset + slash + 1);
  Integer den = check_int(den_text, offset + slash + 1);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

std::pair<long, long> square_decomposition(long n) {
  if (n <= 0) throw PreconditionError("square_decomposition needs a positive integer");
  long s = 1, m = 1;
  long p = 2;
  constexpr long kTrialBound = 2'100'000;  // cube root of LONG_MAX
  for (; p <= kTrialBound && p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      m *= p;
    }
  }
  if (p * p > n) return {s, m * n};
  // n has no prime factor up to the cube root of LONG_MAX, so it is a
  // prime, a product of two primes, or a prime square.
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return {s * r, m};
  return {s, m * n};
}

// ---------------------------------------------------------------- QuadNum

QuadNum::QuadNum(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (d < 2) throw PreconditionError("quadratic radicand must be >= 2, got " + std::to_string(d));
  auto [s, m] = square_decomposition(d);
  if (m == 1) throw PreconditionError("radicand " + std::to_string(d) + " is a perfect square");
  b_ *= s;
  d_ = m;
}

void QuadNum::check_field(const QuadNum& o) const {
  if (d_ != o.d_)
    throw PreconditionError("incompatible quadratic fields Q(sqrt(" + std::to_string(d_) +
                            ")) and Q(sqrt(" + std::to_string(o.d_) + "))");
}

int QuadNum::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * d_;
  return a2 > b2d ? sa : sb;
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
  check_field(o);
  return QuadNum(a_ + o.a_, b_ + o.b_, d_, Normalized{});
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
  check_field(o);
  return QuadNum(a_ - o.a_, b_ - o.b_, d_, Normalized{});
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
  check_field(o);
  return QuadNum(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_, Normalized{});
}

QuadNum QuadNum::inverse() const {
  Rational n = norm();
  if (n == 0) throw PreconditionError("division by zero");
  return QuadNum(a_ / n, -b_ / n, d_, Normalized{});
}

QuadNum QuadNum::operator/(const QuadNum& o) const { return *this * o.inverse(); }

bool QuadNum::operator==(const QuadNum& o) const {
  if (b_ == 0 && o.b_ == 0) return a_ == o.a_;
  return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

double QuadNum::to_double() const {
  mpf_class root(d_, kFloatBits);
  root = sqrt(root);
  mpf_class value(a_, kFloatBits);
  mpf_class bf(b_, kFloatBits);
  value += bf * root;
  return value.get_d();
}

std::string QuadNum::to_string() const {
  return "q(" + a_.get_str() + "," + b_.get_str() + "," + std::to_string(d_) + ")";
}

// ----------------------------------------------------------------- Scalar

Scalar::Scalar(const QuadNum& q) {
  if (q.is_rational())
    v_ = q.a();
  else
    v_ = q;
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long d) {
  if (d < 1) throw PreconditionError("quadratic radicand must be positive");
  auto [s, m] = square_decomposition(d);
  if (m == 1) return Scalar(Rational(a + b * s));
  return Scalar(QuadNum(a, b * s, m));
}

std::optional<long> Scalar::field() const {
  if (is_quadratic()) return quad().d();
  return std::nullopt;
}

int Scalar::sign() const {
  switch (kind()) {
    case ScalarKind::Rational: return sgn(rational());
    case ScalarKind::Quadratic: return quad().sign();
    case ScalarKind::Float: {
      double v = float_value();
      return (v > 0) - (v < 0);
    }
  }
  return 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rational() == 1 : (is_float() && float_value() == 1.0);
}

namespace {

template <class F>
Scalar binary(const Scalar& x, const Scalar& y, F f) {
  if (x.is_float() || y.is_float()) return Scalar::from_double(f(x.to_double(), y.to_double()));
  if (x.is_rational() && y.is_rational()) return Scalar(Rational(f(x.rational(), y.rational())));
  if (x.is_quadratic() && y.is_quadratic()) return Scalar(f(x.quad(), y.quad()));
  if (x.is_quadratic()) return Scalar(f(x.quad(), QuadNum::embed(y.rational(), x.quad().d())));
  return Scalar(f(QuadNum::embed(x.rational(), y.quad().d()), y.quad()));
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::Rational: return Scalar(Rational(-rational()));
    case ScalarKind::Quadratic: return Scalar(-quad());
    case ScalarKind::Float: return from_double(-float_value());
  }
  return {};
}

Scalar Scalar::operator+(const Scalar& o) const {
  return binary(*this, o, [](const auto& a, const auto& b) {
    using T = std::decay_t<decltype(a)>;
    return T(a + b);
  });
}

Scalar Scalar::operator-(const Scalar& o) const {
  return binary(*this, o, [](const auto& a, const auto& b) {
    using T = std::decay_t<decltype(a)>;
    return T(a - b);
  });
}

Scalar Scalar::operator*(const Scalar& o) const {
  return binary(*this, o, [](const auto& a, const auto& b) {
    using T = std::decay_t<decltype(a)>;
    return T(a * b);
  });
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_exact() && o.is_zero()) throw PreconditionError("division by zero");
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  switch (kind()) {
    case ScalarKind::Rational:
      if (rational() == 0) throw PreconditionError("division by zero");
      return Scalar(Rational(1 / rational()));
    case ScalarKind::Quadratic: return Scalar(quad().inverse());
    case ScalarKind::Float: return from_double(1.0 / float_value());
  }
  return {};
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_float() || o.is_float()) {
    if (!(is_float() && o.is_float())) return false;
    return float_value() == o.float_value();
  }
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  if (is_quadratic() && o.is_quadratic()) return quad() == o.quad();
  return false;  // b != 0 invariant: a quadratic never equals a rational
}

double Scalar::to_double() const {
  switch (kind()) {
    case ScalarKind::Rational: {
      mpf_class f(rational(), kFloatBits);
      return f.get_d();
    }
    case ScalarKind::Quadratic: return quad().to_double();
    case ScalarKind::Float: return float_value();
  }
  return 0;
}

std::string Scalar::to_string() const {
  switch (kind()) {
    case ScalarKind::Rational: return rational().get_str();
    case ScalarKind::Quadratic: return quad().to_string();
    case ScalarKind::Float: {
      std::ostringstream os;
      os.precision(17);
      os << float_value();
      std::string s = os.str();
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      return s;
    }
  }
  return {};
}

int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }

Scalar galois_conjugate(const Scalar& x) {
  switch (x.kind()) {
    case ScalarKind::Rational: return x;
    case ScalarKind::Quadratic: return Scalar(x.quad().conjugate());
    case ScalarKind::Float: throw PreconditionError("Galois conjugation needs an exact scalar");
  }
  return x;
}

std::optional<Scalar> exact_sqrt(const Scalar& x) {
  if (x.is_float() || x.sign() < 0) return std::nullopt;
  if (x.is_rational()) {
    const Rational& r = x.rational();
    if (r == 0) return Scalar(0);
    Integer nd = r.get_num() * r.get_den();
    auto dec = square_decomposition_big(nd);
    if (!dec) return std::nullopt;
    Rational coeff(dec->first, r.get_den());
    coeff.canonicalize();
    if (dec->second == 1) return Scalar(coeff);
    return Scalar(QuadNum(0, coeff, dec->second));
  }
  const QuadNum& q = x.quad();
  auto n = rational_sqrt(q.norm());
  if (!n) return std::nullopt;
  for (const Rational& u2 : {Rational((q.a() + *n) / 2), Rational((q.a() - *n) / 2)}) {
    if (u2 <= 0) continue;
    auto u = rational_sqrt(u2);
    if (!u) continue;
    Rational v = q.b() / (2 * *u);
    QuadNum root(*u, v, q.d());
    if (root.sign() < 0) root = -root;
    return Scalar(root);
  }
  return std::nullopt;
}

Scalar parse_scalar(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\n");
  if (begin == std::string_view::npos) throw ParseError("empty scalar", 0);
  auto end = text.find_last_not_of(" \t\n");
  std::string_view body = text.substr(begin, end - begin + 1);

  if (body.size() >= 2 && body[0] == 'q' && body[1] == '(') {
    if (body.back() != ')') throw ParseError("missing ')' in quadratic scalar", begin + body.size());
    std::string_view inner = body.substr(2, body.size() - 3);
    std::size_t c1 = inner.find(',');
    std::size_t c2 = c1 == std::string_view::npos ? c1 : inner.find(',', c1 + 1);
    if (c2 == std::string_view::npos || inner.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError("quadratic scalar needs exactly three arguments q(a,b,d)", begin + 2);
    std::size_t base = begin + 2;
    Rational a = parse_rational_token(inner.substr(0, c1), base);
    Rational b = parse_rational_token(inner.substr(c1 + 1, c2 - c1 - 1), base + c1 + 1);
    Rational d = parse_rational_token(inner.substr(c2 + 1), base + c2 + 1);
    if (d.get_den() != 1 || d <= 0 || !d.get_num().fits_slong_p())
      throw ParseError("radicand must be a positive machine-size integer", base + c2 + 1);
    return Scalar::quadratic(a, b, d.get_num().get_si());
  }

  if (body.find_first_of(".eE") != std::string_view::npos) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v))
      throw ParseError("malformed decimal literal '" + std::string(body) + "'",
                       begin + static_cast<std::size_t>(ptr - body.data()));
    return Scalar::from_double(v);
  }
  return Scalar(parse_rational_token(body, begin));
}

// ------------------------------------------------------ quadratic integers

QuadraticIntegerInfo quadratic_integer_info(const QuadNum& x) {
  QuadraticIntegerInfo info;
  info.norm = x.norm();
  if (x.is_rational()) {
    info.status = QuadraticIntegerStatus::Rational;
    info.minimal_polynomial = {-x.a().get_num(), x.a().get_den()};
    return info;
  }
  Rational trace = x.trace();
  // t^2 - trace*t + norm, cleared of denominators.
  Integer l = lcm(Integer(trace.get_den()), Integer(info.norm.get_den()));
  info.minimal_polynomial = {Integer(info.norm * l), Integer(-trace * l), l};
  if (l != 1) {
    info.status = QuadraticIntegerStatus::NotInteger;
  } else if (info.norm == 1) {
    info.status = QuadraticIntegerStatus::NormOne;
  } else if (info.norm == -1) {
    info.status = QuadraticIntegerStatus::NormMinusOne;
  } else {
    info.status = QuadraticIntegerStatus::NotUnit;
  }
  return info;
}

bool is_unit_quadratic_integer(const QuadNum& x) {
  return quadratic_integer_info(x).status == QuadraticIntegerStatus::NormOne;
}

std::string to_string(QuadraticIntegerStatus s) {
  switch (s) {
    case QuadraticIntegerStatus::NormOne: return "norm_one";
    case QuadraticIntegerStatus::NormMinusOne: return "norm_minus_one";
    case QuadraticIntegerStatus::NotUnit: return "not_unit";
    case QuadraticIntegerStatus::NotInteger: return "not_integer";
    case QuadraticIntegerStatus::Rational: return "rational";
  }
  return "unknown";
}

}  // namespace burau
