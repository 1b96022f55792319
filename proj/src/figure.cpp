#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "burau/pingpong.hpp"

namespace burau {

namespace {

using C = std::complex<double>;

constexpr double kPixels = 1000;
constexpr double kRadius = 430;  // unit disk radius in pixels, leaves room for labels

double angle_of(C w) {
  double a = std::arg(w);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

// Points along the geodesic from a to b (both on the unit circle).
std::vector<C> geodesic_points(C a, C b, int n = 64) {
  std::vector<C> pts;
  double cos_delta = std::real(a * std::conj(b));
  if (1 + cos_delta < 1e-12 || std::abs(a - b) < 1e-12) {
    for (int i = 0; i <= n; ++i) pts.push_back(a + (b - a) * (double(i) / n));
    return pts;
  }
  // Circle orthogonal to the unit circle through a and b.
  C centre = (a + b) / (1 + cos_delta);
  double pa = std::arg(a - centre), pb = std::arg(b - centre);
  double sweep = std::remainder(pb - pa, 2 * std::numbers::pi);
  double radius = std::abs(a - centre);
  for (int i = 0; i <= n; ++i) pts.push_back(centre + std::polar(radius, pa + sweep * i / n));
  return pts;
}

std::string px(C w) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << kPixels / 2 + kRadius * w.real() << ','
    << kPixels / 2 - kRadius * w.imag();
  return s.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::complex<double> cayley(const BoundaryPoint& p) {
  if (p.is_infinity()) return {1, 0};
  const C i(0, 1);
  double z = p.to_double();
  return (z - i) / (z + i);
}

DiskFigure disk_figure(const PingPongCertificate& cert) {
  DiskFigure fig;
  for (const auto& a : cert.arcs) fig.geodesics.push_back({a.name, cayley(a.start), cayley(a.end)});
  for (const auto& m : cert.marked_points) fig.labels.push_back({m.name, cayley(m.point)});
  return fig;
}

bool geodesics_cross(const DiskGeodesic& g, const DiskGeodesic& h) {
  const double tol = 1e-12;
  double a = angle_of(g.from), b = angle_of(g.to);
  if (a > b) std::swap(a, b);
  auto side = [&](C w) {
    double x = angle_of(w);
    if (std::abs(x - a) < tol || std::abs(x - b) < tol) return 0;
    return (x > a && x < b) ? 1 : -1;
  };
  int sc = side(h.from), sd = side(h.to);
  return sc * sd < 0;
}

void write_svg(const DiskFigure& fig, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\""
      << " viewBox=\"0 0 1000 1000\">\n"
      << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
      << "<circle cx=\"500\" cy=\"500\" r=\"" << kRadius << "\" fill=\"#d0d0d0\" stroke=\"black\"/>\n";
  // Each arc's cap (between the geodesic and its boundary arc) is cleared,
  // leaving the fundamental domain shaded.
  for (const auto& g : fig.geodesics) {
    double a0 = angle_of(g.from), a1 = angle_of(g.to);
    double sweep = a1 - a0;
    if (sweep <= 0) sweep += 2 * std::numbers::pi;
    out << "<path fill=\"white\" stroke=\"none\" d=\"M" << px(g.from);
    for (int i = 1; i <= 96; ++i) out << " L" << px(std::polar(1.0, a0 + sweep * i / 96));
    auto back = geodesic_points(g.to, g.from);
    for (const auto& w : back) out << " L" << px(w);
    out << " Z\"/>\n";
  }
  for (const auto& g : fig.geodesics) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& w : geodesic_points(g.from, g.to)) {
      out << (first ? "" : " ") << px(w);
      first = false;
    }
    out << "\"><title>" << escape(g.name) << "</title></polyline>\n";
  }
  for (const auto& l : fig.labels) {
    out << "<circle cx=\"" << px(l.at).substr(0, px(l.at).find(',')) << "\" cy=\""
        << px(l.at).substr(px(l.at).find(',') + 1) << "\" r=\"4\" fill=\"black\"/>\n";
    std::string pos = px(l.at * 1.08);
    out << "<text x=\"" << pos.substr(0, pos.find(',')) << "\" y=\"" << pos.substr(pos.find(',') + 1)
        << "\" font-size=\"14\" text-anchor=\"middle\">" << escape(l.name) << "</text>\n";
  }
  out << "</svg>\n";
}

void render_disk_figure(const Scalar& t0, PingPongCase case_id, std::ostream& out) {
  PingPongCertificate cert = pingpong_certificate(t0, case_id);
  write_svg(disk_figure(cert), out);
}

}  // namespace burau
