#pragma once

#include <string>
#include <vector>

#include "burau/exact_reals.hpp"
#include "burau/moebius.hpp"

namespace burau {

enum class Regime {
  NegativeHyperbolic,  // t < 0, t != -1
  PositiveOuter,       // 0 < t < (3-sqrt5)/2 or t > (3+sqrt5)/2
  ParabolicBoundary,   // t = (3 +- sqrt5)/2; an outer point where x, y are parabolic
  EllipticWindow,      // (3-sqrt5)/2 < t < (3+sqrt5)/2, t != 1
  ExcludedZero,
  MinusOne,
  One,
};
std::string to_string(Regime r);
/// Both outer regimes, the parabolic endpoints included.
bool is_outer(Regime r);

enum class DiscreteKind { Yes, No, TriangleGroup, NumericalNo, NumericalUndetermined };
struct Discreteness {
  DiscreteKind kind = DiscreteKind::No;
  int triangle_order = 0;  // n for TriangleGroup(n)
  bool operator==(const Discreteness&) const = default;
};
std::string to_string(const Discreteness& d);

enum class Faithfulness { Yes, No, Undetermined };
std::string to_string(Faithfulness f);

enum class Exactness { Certified, Numerical };
std::string to_string(Exactness e);

struct Evidence {
  std::string name;
  std::string status;
  std::string detail;
};

struct SpecializationVerdict {
  Scalar t_input;
  Regime regime = Regime::ExcludedZero;
  Discreteness discrete;
  Faithfulness faithful = Faithfulness::Undetermined;
  Exactness exactness = Exactness::Certified;
  std::vector<Evidence> evidence;
};

/// Regime of t0 alone. Floats are placed by plain comparison.
Regime regime_of(const Scalar& t0);

/// Discreteness and faithfulness of the specialization at t0. t0 = 0 yields
/// an ExcludedZero verdict (discrete No, faithful No) whose evidence records
/// the error; callers treating it as fatal should check the regime.
SpecializationVerdict classify(const Scalar& t0, const RotationOptions& opt = {});

/// classify(t0) and classify(1/t0) agree on discreteness and faithfulness.
bool duality_check(const Scalar& t0);

}  // namespace burau
