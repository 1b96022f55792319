#include "burau/intpoly.hpp"

#include <algorithm>

#include "burau/error.hpp"

namespace burau {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

// Scales a rational polynomial by a positive constant into a primitive
// integer polynomial.
IntPoly to_primitive_int(const RatPoly& p) {
  if (p.empty()) return {};
  Integer l = 1;
  for (const auto& c : p) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c * l);
  Integer g = 0;
  for (const auto& c : out) g = gcd(g, c);
  if (g > 1)
    for (auto& c : out) c /= g;
  return IntPoly(std::move(out));
}

// Polynomial division over Q; returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw PreconditionError("polynomial division by zero");
  RatPoly q;
  trim(num);
  if (num.size() < den.size()) return {q, num};
  q.assign(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = num[k + den.size() - 1] / lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(q);
  return {q, num};
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.emplace_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  if (leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<IntPoly, int> normalize_to_intpoly(const LaurentPoly& p) {
  if (p.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  int shift = p.low_degree();
  std::vector<Integer> c(static_cast<std::size_t>(p.high_degree() - shift + 1));
  for (const auto& [d, v] : p.terms()) c[static_cast<std::size_t>(d - shift)] = v;
  return {IntPoly(std::move(c)), shift};
}

bool divides(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) throw PreconditionError("divisibility by the zero polynomial");
  return divmod(to_rat(g), to_rat(f)).second.empty();
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  RatPoly a = to_rat(f), b = to_rat(g);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = to_primitive_int(r).is_zero() ? RatPoly{} : to_rat(to_primitive_int(r));
  }
  return to_primitive_int(a).primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree part of the zero polynomial");
  if (p.degree() == 0) return IntPoly{1};
  IntPoly g = gcd(p, p.derivative());
  return to_primitive_int(divmod(to_rat(p), to_rat(g)).first).primitive();
}

// ------------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  IntPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    RatPoly r = divmod(to_rat(chain_[chain_.size() - 2]), to_rat(chain_.back())).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain_.push_back(to_primitive_int(r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int count = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

// --------------------------------------------------------------- isolation

double RootInterval::approx() const {
  Rational mid = (lo + hi) / 2;
  return Scalar(mid).to_double();
}

Rational root_bound(const IntPoly& q) {
  if (q.degree() < 1) return 1;
  // Cauchy: 1 + max |a_i / a_n|.
  Integer m = 0;
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, Integer(abs(q.coeff(i))));
  Rational b(m, abs(q.leading()));
  b.canonicalize();
  return b + 1;
}

namespace {

struct Isolator {
  IntPoly poly;
  SturmSequence sturm;
  std::vector<RootInterval> out;

  explicit Isolator(IntPoly p) : poly(std::move(p)), sturm(poly) {}

  // Shrinks (lo, hi) holding exactly one root so that neither endpoint is a
  // root, or collapses it onto an exact root.
  void emit_single(Rational lo, Rational hi) {
    while (true) {
      if (poly.sign_at(hi) == 0) {
        out.push_back({hi, hi, poly});
        return;
      }
      if (poly.sign_at(lo) != 0) break;
      Rational mid = (lo + hi) / 2;
      if (sturm.count_roots(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    RootInterval r{lo, hi, poly};
    out.push_back(detect_rational(r));
  }

  // A rational root of a primitive integer polynomial has the form k/a_n.
  // Once the interval is shorter than 1/|a_n| it contains at most one such
  // candidate.
  RootInterval detect_rational(RootInterval r) {
    Integer lead = abs(poly.leading());
    Rational step(1, lead);
    r = refine(r, step / 2);
    if (r.is_exact()) return r;
    Rational scaled = r.lo * lead;
    Integer k = scaled.get_num() / scaled.get_den();  // truncation
    for (Integer cand = k - 1; cand <= k + 2; ++cand) {
      Rational x(cand, lead);
      x.canonicalize();
      if (x > r.lo && x < r.hi && poly.sign_at(x) == 0) return {x, x, r.poly};
    }
    return r;
  }

  void run(const Rational& lo, const Rational& hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      emit_single(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    int left = sturm.count_roots(lo, mid);
    run(lo, mid, left);
    run(mid, hi, count - left);
  }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& q, const Rational& lo, const Rational& hi) {
  if (q.is_zero()) throw PreconditionError("root isolation of the zero polynomial");
  if (q.degree() == 0) return {};
  Isolator iso(squarefree_part(q));
  iso.run(lo, hi, iso.sturm.count_roots(lo, hi));
  std::sort(iso.out.begin(), iso.out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return iso.out;
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& q) {
  Rational b = root_bound(q);
  return isolate_real_roots(q, Rational(-b), b);
}

RootInterval refine(const RootInterval& r, const Rational& max_width) {
  RootInterval out = r;
  if (out.is_exact()) return out;
  int s_lo = out.poly.sign_at(out.lo);
  while (out.hi - out.lo > max_width) {
    Rational mid = (out.lo + out.hi) / 2;
    int s = out.poly.sign_at(mid);
    if (s == 0) {
      out.lo = out.hi = mid;
      return out;
    }
    if (s == s_lo)
      out.lo = mid;
    else
      out.hi = mid;
  }
  return out;
}

}  // namespace burau
