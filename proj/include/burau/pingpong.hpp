#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "burau/moebius.hpp"

namespace burau {

/// The three configurations of the boundary action of <x, y> for t outside
/// the elliptic window.
enum class PingPongCase {
  Negative = 1,   // t < 0: x, y hyperbolic, ideal quadrilateral
  Parabolic = 2,  // t = (3 + sqrt5)/2: x, y, y x^-1 parabolic
  Outer = 3,      // t > (3 + sqrt5)/2: x, y, y x^-1 hyperbolic
};

struct NamedPoint {
  std::string name;
  BoundaryPoint point;
};

/// Closed boundary arc from `start` to `end`, running in the increasing
/// direction of R u {inf}.
struct Arc {
  std::string name;
  BoundaryPoint start;
  BoundaryPoint end;
};

/// g maps the closure of the complement of `source` onto `target`.
struct ArcMapping {
  std::string generator;
  std::string source;
  std::string target;
  BoundaryPoint image_of_start;  // image of source.end, the complement's start
  BoundaryPoint image_of_end;    // image of source.start
  BoundaryPoint sample;
  BoundaryPoint image_of_sample;
  bool endpoints_ok = false;
  bool sample_ok = false;
  bool orientation_preserving = false;
};

struct PingPongCertificate {
  PingPongCase case_id;
  Scalar t;
  /// Fixed points and their images that define the configuration.
  std::vector<NamedPoint> marked_points;
  /// Four arcs in cyclic order.
  std::vector<Arc> arcs;
  std::vector<ArcMapping> mappings;
  bool points_distinct = false;
  bool arcs_cyclically_ordered = false;
  bool exact = false;

  bool verified() const;
};

/// Checks the boundary ping-pong schedule for case_id at t0. Throws
/// PreconditionError when t0 is not in the case's regime and InvariantError
/// when marked points coincide.
PingPongCertificate pingpong_certificate(const Scalar& t0, PingPongCase case_id);

/// Open arc membership.
bool arc_contains(const Arc& arc, const BoundaryPoint& p);

/// Disk picture of a certificate: boundary points under the Cayley
/// transform z -> (z - i)/(z + i), one geodesic per arc.
struct DiskGeodesic {
  std::string name;
  std::complex<double> from;
  std::complex<double> to;
};
struct DiskLabel {
  std::string name;
  std::complex<double> at;
};
struct DiskFigure {
  std::vector<DiskGeodesic> geodesics;
  std::vector<DiskLabel> labels;
};

std::complex<double> cayley(const BoundaryPoint& p);
DiskFigure disk_figure(const PingPongCertificate& cert);
/// True when the two geodesics cross in the open disk.
bool geodesics_cross(const DiskGeodesic& g, const DiskGeodesic& h);
void write_svg(const DiskFigure& fig, std::ostream& out);
/// Builds the certificate first; nothing is written when it throws.
void render_disk_figure(const Scalar& t0, PingPongCase case_id, std::ostream& out);

}  // namespace burau
