#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burau/braid.hpp"
#include "burau/intpoly.hpp"
#include "burau/laurent.hpp"
#include "burau/real_matrix.hpp"

namespace burau {

/// The 2-1 entry of rho_3(w) as an integer polynomial with nonzero constant
/// term. Rejects sigma_1 powers (and any word whose entry vanishes
/// identically) with PreconditionError.
IntPoly entry21_polynomial(const BraidWord& w);

/// A positive real t_w at which rho_3(w) becomes upper triangular, so that
/// <S(sigma_1), S(w)> is solvable and the specialization is not faithful.
struct UnfaithfulnessCertificate {
  BraidWord word{3};
  /// Normalized 2-1 entry.
  IntPoly entry;
  /// Squarefree polynomial isolating the root; it divides `entry`.
  IntPoly factor;
  RootInterval root;
  /// Present when the root is rational.
  std::optional<Rational> exact_root;
  /// Root strictly inside ((3-sqrt5)/2, (3+sqrt5)/2), decided by exact signs
  /// of t^2 - 3t + 1 at the interval ends.
  bool in_window = false;
  bool entry21_vanishes = false;
  std::string vanishing_method;  // "exact_evaluation" or "divisibility"
  /// Degree of gcd(factor, entry); positive for a genuine common root.
  int gcd_degree = 0;
  bool sigma1_upper_triangular = false;
  bool upper_triangular_pair = false;

  bool verified() const { return in_window && entry21_vanishes && upper_triangular_pair && gcd_degree > 0; }
};

/// One certificate per positive real root of the 2-1 entry; intervals are
/// refined to at most refine_width, and further when needed to decide the
/// window test.
std::vector<UnfaithfulnessCertificate> hunt_unfaithful(const BraidWord& w, const Rational& refine_width);

/// The omega_1 / omega_2 pair in B_4 at t0 = (3+sqrt5)/2.
struct KernelPairCheck {
  bool symbolic_unequal = false;
  bool equal_at_t0 = false;
  bool quotient_identity_at_t0 = false;
  bool quotient_symbolic_nonidentity = false;
  bool unequal_at_probe = false;  // at t = 2
  Scalar t0;
  Scalar probe;
  std::size_t omega1_length = 0;
  std::size_t omega2_length = 0;

  bool verified() const {
    return symbolic_unequal && equal_at_t0 && quotient_identity_at_t0 && quotient_symbolic_nonidentity &&
           unequal_at_probe;
  }
};
KernelPairCheck b4_kernel_pair_check();

/// Lifts a kernel element of the B_3 specialization into B_4 and walks the
/// commutator chain of the (upper unitriangular) images down to the identity.
struct UnipotentExtension {
  BraidWord word{3};
  Scalar t0;
  bool unitriangular = false;
  /// Number of commutator steps until the specialized image is trivial.
  int depth = 0;
  std::optional<BraidWord> conjugator;
  /// Nontrivial braid (symbolic image != I) specializing to the identity.
  std::optional<BraidWord> kernel_element;
  bool kernel_symbolic_nonidentity = false;
  bool kernel_specializes_to_identity = false;
};
inline constexpr std::size_t kMaxChainWordLength = 10000;
UnipotentExtension unipotent_extension_check(const BraidWord& w, const Scalar& t0);

/// (A^sigma)^T = J A^-1 J^-1 for A the specialization of rho(w) at a norm-one
/// quadratic unit alpha, with sigma the Galois conjugation.
struct GaloisWordCheck {
  BraidWord word{3};
  RealMatrix a{2};
  RealMatrix a_sigma{2};
  bool holds = false;
};
struct GaloisCertificate {
  QuadNum alpha{Rational(0), Rational(1), 5};
  int strands = 3;
  RealMatrix j{2};
  std::vector<GaloisWordCheck> words_checked;
  bool relation_verified = false;
};
GaloisCertificate galois_discreteness_certificate(const QuadNum& alpha, const std::vector<BraidWord>& words,
                                                  int strands);
/// Default sample words for the certificate.
std::vector<BraidWord> galois_sample_words(int strands);

}  // namespace burau
