#include "burau/forensics.hpp"

#include "burau/error.hpp"
#include "burau/representation.hpp"

namespace burau {

IntPoly entry21_polynomial(const BraidWord& w) {
  if (w.strands() != 3) throw PreconditionError("the 2-1 entry is taken in B_3");
  if (w.is_sigma1_power()) throw PreconditionError("powers of s1 have a vanishing 2-1 entry");
  LaurentPoly e = burau(w).at(1, 0);
  if (e.is_zero()) throw PreconditionError("the 2-1 entry of " + w.to_string() + " vanishes identically");
  return normalize_to_intpoly(e).first;
}

namespace {

const IntPoly kWindow{1, -3, 1};  // negative exactly on the elliptic window

bool in_window(const RootInterval& r) {
  if (r.is_exact()) return kWindow.sign_at(r.lo) < 0;
  return kWindow.sign_at(r.lo) < 0 && kWindow.sign_at(r.hi) < 0;
}

// Window membership is undecided while an end sits outside but the interval
// still straddles a window endpoint.
bool window_decided(const RootInterval& r) {
  if (r.is_exact()) return true;
  int a = kWindow.sign_at(r.lo), b = kWindow.sign_at(r.hi);
  return a == b && a != 0;
}

}  // namespace

std::vector<UnfaithfulnessCertificate> hunt_unfaithful(const BraidWord& w, const Rational& refine_width) {
  if (refine_width <= 0) throw PreconditionError("refine width must be positive");
  const IntPoly q = entry21_polynomial(w);
  const LaurentPoly entry = burau(w).at(1, 0);
  const bool sigma1_ut = burau_generator(3, 1).at(1, 0).is_zero();
  std::vector<UnfaithfulnessCertificate> out;
  for (const RootInterval& iso : isolate_real_roots(q, Rational(0), root_bound(q))) {
    UnfaithfulnessCertificate c;
    c.word = w;
    c.entry = q;
    c.factor = iso.poly;
    c.root = refine(iso, refine_width);
    // Tighten until the window test has a definite answer (the window ends
    // are irrational, so a root never sits on them).
    for (int i = 0; i < 64 && !window_decided(c.root); ++i)
      c.root = refine(c.root, c.root.width() / Rational(1 << 16));
    c.in_window = in_window(c.root);
    if (c.root.is_exact()) {
      c.exact_root = c.root.lo;
      c.entry21_vanishes = entry.evaluate(c.root.lo) == 0;
      c.vanishing_method = "exact_evaluation";
    } else {
      c.entry21_vanishes = divides(c.factor, q);
      c.vanishing_method = "divisibility";
    }
    c.gcd_degree = gcd(c.factor, q).degree();
    c.sigma1_upper_triangular = sigma1_ut;
    c.upper_triangular_pair = sigma1_ut && c.entry21_vanishes;
    out.push_back(std::move(c));
  }
  return out;
}

KernelPairCheck b4_kernel_pair_check() {
  KernelPairCheck out;
  out.t0 = Scalar::quadratic(Rational(3, 2), Rational(1, 2), 5);
  out.probe = Scalar(2);
  const BraidWord w1 = named_word("omega1", 4), w2 = named_word("omega2", 4);
  out.omega1_length = w1.length();
  out.omega2_length = w2.length();
  const LaurentMatrix r1 = burau(w1), r2 = burau(w2);
  out.symbolic_unequal = !(r1 == r2);
  out.equal_at_t0 = specialize(r1, out.t0) == specialize(r2, out.t0);
  const LaurentMatrix quotient = burau(concat(w1, inverse(w2)));
  out.quotient_symbolic_nonidentity = !quotient.is_identity();
  out.quotient_identity_at_t0 = specialize(quotient, out.t0).is_identity();
  out.unequal_at_probe = !(specialize(r1, out.probe) == specialize(r2, out.probe));
  return out;
}

UnipotentExtension unipotent_extension_check(const BraidWord& w, const Scalar& t0) {
  if (w.strands() != 3) throw PreconditionError("expected a B_3 word");
  if (!t0.is_exact()) throw PreconditionError("the extension check needs an exact t");
  if (!specialize(burau(w), t0).is_identity())
    throw PreconditionError(w.to_string() + " is not in the kernel at t = " + t0.to_string());

  UnipotentExtension out;
  out.word = w;
  out.t0 = t0;
  const BraidWord w4 = embed(w, 4);
  const RealMatrix g = specialize(burau(w4), t0);
  out.unitriangular = g.is_upper_unitriangular();
  if (g.is_identity()) {
    out.depth = 0;
    if (!burau(w4).is_identity()) {
      out.kernel_element = w4;
      out.kernel_symbolic_nonidentity = true;
      out.kernel_specializes_to_identity = true;
    }
    return out;
  }
  if (!out.unitriangular) throw InvariantError("kernel image in B_4 is not unitriangular");

  // The B_3 kernel is normal, so conjugates of w stay in it. Commutators of
  // kernel elements climb the lower central series of the unitriangular
  // group and vanish after at most two steps.
  const std::vector<std::string> conjugators{"s1", "s2", "s1 s2", "s2 s1", "s1^2", "s2^2", "s1 s2^-1"};
  for (const auto& text : conjugators) {
    const BraidWord c = parse_word(text, 4);
    const BraidWord u = concat(concat(c, w4), inverse(c));
    BraidWord chain = commutator(w4, u);
    int depth = 1;
    while (chain.length() <= kMaxChainWordLength) {
      if (specialize(burau(chain), t0).is_identity()) break;
      chain = commutator(chain, w4);
      ++depth;
    }
    if (chain.length() > kMaxChainWordLength) continue;
    if (burau(chain).is_identity()) continue;  // trivial braid, try another conjugate
    out.depth = depth;
    out.conjugator = c;
    out.kernel_element = chain;
    out.kernel_symbolic_nonidentity = true;
    out.kernel_specializes_to_identity = true;
    return out;
  }
  throw InvariantError("no nontrivial commutator within the word-length cap");
}

std::vector<BraidWord> galois_sample_words(int strands) {
  if (strands == 3)
    return {parse_word("s1", 3), parse_word("s2", 3), named_word("a1", 3), named_word("center3", 3)};
  if (strands == 4) return {named_word("x4", 4), named_word("omega1", 4)};
  throw PreconditionError("strands must be 3 or 4");
}

GaloisCertificate galois_discreteness_certificate(const QuadNum& alpha, const std::vector<BraidWord>& words,
                                                  int strands) {
  QuadraticIntegerInfo info = quadratic_integer_info(alpha);
  if (info.status != QuadraticIntegerStatus::NormOne)
    throw PreconditionError("alpha = " + alpha.to_string() + " is " + to_string(info.status) +
                            "; the certificate needs a quadratic integer of norm 1");
  const SquierForm& form = squier_form(strands);
  auto jt = form.j_t();
  if (!jt) throw InvariantError("Squier form has odd powers of s");
  GaloisCertificate out;
  out.alpha = alpha;
  out.strands = strands;
  const Scalar a(alpha);
  out.j = specialize(*jt, a);
  if (out.j.det().is_zero()) throw InvariantError("J is singular at alpha");
  out.relation_verified = true;
  for (const auto& w : words) {
    if (w.strands() != strands) throw PreconditionError("word " + w.to_string() + " has the wrong strand count");
    GaloisWordCheck c;
    c.word = w;
    c.a = specialize(burau(w), a);
    c.a_sigma = c.a.conjugate();
    // (A^sigma)^T J = J A^-1, the J^-1 cleared.
    c.holds = c.a_sigma.transpose() * out.j == out.j * c.a.inverse();
    out.relation_verified = out.relation_verified && c.holds;
    out.words_checked.push_back(std::move(c));
  }
  return out;
}

}  // namespace burau
