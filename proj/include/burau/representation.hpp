#pragma once

#include <optional>

#include "burau/braid.hpp"
#include "burau/laurent.hpp"
#include "burau/real_matrix.hpp"

namespace burau {

/// Reduced Burau image of sigma_index^{+-1} in GL_{strands-1}(Z[t,t^-1]).
LaurentMatrix burau_generator(int strands, int index, bool inverted = false);

/// Reduced Burau representation of a braid word (strands 3 or 4).
LaurentMatrix burau(const BraidWord& w);

/// diag(1, -1).
LaurentMatrix iota();

/// The generators of the image of N = <a1, a2> after conjugation by iota:
/// x = iota^-1 rho(a2) iota and y = iota^-1 rho(a1) iota.
struct ConjugatedGenerators {
  LaurentMatrix x;
  LaurentMatrix y;
};
ConjugatedGenerators conjugated_generators();

/// A nonsingular J over Z[s, s^-1] (with t = s^2) such that
/// star(rho(g)) J rho(g) = J for every generator g.
struct SquierForm {
  int strands = 0;
  /// J in the variable s.
  LaurentMatrix j_s{1};
  /// Width of the exponent window [0, window] that first admitted a solution.
  int window = 0;
  /// Dimension of the solution space inside that window.
  int solution_dimension = 0;

  /// J rewritten in t, available when only even powers of s occur.
  std::optional<LaurentMatrix> j_t() const { return j_s.deflate(2); }
};

/// Solves the Squier relation on a tridiagonal ansatz with growing exponent
/// windows, fixes the first nonsingular basis vector of the solution space
/// (primitive, first nonzero coefficient positive) and verifies it.
SquierForm derive_squier_form(int strands);
/// Cached derive_squier_form.
const SquierForm& squier_form(int strands);

/// star(rho) J rho == J after t = s^2, for a Burau image rho given in t.
bool satisfies_squier_relation(const SquierForm& form, const LaurentMatrix& rho_t);

/// Orientation of the conjugation relating bar(M) and (M^-1)^T.
enum class DualityOrder {
  /// bar(M) = (J^T)^-1 (M^-1)^T J^T, which follows from star(M) J M = J.
  FromSquierRelation,
  /// bar(M) = J^T (M^-1)^T (J^T)^-1.
  Reversed,
};

/// Checks the t <-> t^-1 duality of a Burau image symbolically (in s,
/// cleared of J^-1 by cross-multiplying).
bool duality_holds(const LaurentMatrix& rho_t, const SquierForm& form,
                   DualityOrder order = DualityOrder::FromSquierRelation);
bool verify_duality(const BraidWord& w, DualityOrder order = DualityOrder::FromSquierRelation);

/// Entrywise evaluation at t0 != 0.
RealMatrix specialize(const LaurentMatrix& m, const Scalar& t0);

}  // namespace burau
