#include "burau/json_io.hpp"

namespace burau {

namespace {

std::string kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Quadratic: return "quadratic";
    case ScalarKind::Float: return "float";
  }
  return "?";
}

Json rational(const Rational& r) { return r.get_str(); }

}  // namespace

Json to_json(const Scalar& s) {
  return Json{{"value", s.to_string()}, {"kind", kind_name(s.kind())}, {"approx", s.to_double()}};
}

Json to_json(const BoundaryPoint& p) { return p.to_string(); }

Json to_json(const BraidWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back({l.index, l.power});
  return Json{{"strands", w.strands()}, {"word", w.to_string()}, {"letters", letters}};
}

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  int low = 0;
  if (!p.is_zero()) {
    low = p.low_degree();
    for (int d = low; d <= p.high_degree(); ++d) coeffs.push_back(p.coeff(d).get_str());
  }
  return Json{{"low_degree", low}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return Json{{"size", m.size()}, {"entries", rows}};
}

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

Json to_json(const RootInterval& r) {
  return Json{{"lo", rational(r.lo)}, {"hi", rational(r.hi)}, {"exact", r.is_exact()}, {"approx", r.approx()}};
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const IsometryClass& c) {
  Json j{{"kind", to_string(c.kind)}, {"trace", to_json(c.trace)}};
  if (c.cos_theta) j["cos_theta"] = to_json(*c.cos_theta);
  return j;
}

Json to_json(const FixedPoints& f) {
  Json j{{"kind", to_string(f.kind)}};
  Json b = Json::array();
  for (const auto& p : f.boundary) b.push_back(to_json(p));
  j["boundary"] = b;
  if (f.interior) j["interior"] = Json{{"re", to_json(f.interior->re)}, {"im", to_json(f.interior->im)}};
  return j;
}

Json to_json(const RotationData& r) {
  Json j{{"cos_theta", to_json(r.cos_theta)}, {"order_class", to_string(r.order_class)}};
  if (r.rotation_number) j["rotation_number"] = {r.rotation_number->first, r.rotation_number->second};
  else j["rotation_number"] = nullptr;
  j["numerical"] = r.numerical;
  if (r.matrix_order) j["matrix_order"] = *r.matrix_order;
  else j["matrix_order"] = nullptr;
  return j;
}

Json to_json(const OrbitEvidence& o) {
  return Json{{"t", o.t},
              {"iterations", o.iterations},
              {"fixed_point", {o.fixed_point.real(), o.fixed_point.imag()}},
              {"min_distance", o.min_distance},
              {"threshold", o.threshold},
              {"accumulating", o.accumulating},
              {"distinct_points", o.distinct_points}};
}

Json to_json(const CommutatorTraceCheck& c) {
  Json samples = Json::array();
  for (const auto& [t, v] : c.samples) samples.push_back({{"t", t.to_string()}, {"value", to_json(v)}});
  return Json{{"trace", to_json(c.trace)},
              {"expected", to_json(c.expected)},
              {"symbolic_equal", c.symbolic_equal},
              {"samples", samples},
              {"samples_exceed_two", c.samples_exceed_two},
              {"value_at_one", to_json(c.value_at_one)}};
}

Json to_json(const PingPongCertificate& c) {
  Json points = Json::array();
  for (const auto& p : c.marked_points) points.push_back({{"name", p.name}, {"point", to_json(p.point)}});
  Json arcs = Json::array();
  for (const auto& a : c.arcs) arcs.push_back({{"name", a.name}, {"start", to_json(a.start)}, {"end", to_json(a.end)}});
  Json maps = Json::array();
  for (const auto& m : c.mappings)
    maps.push_back({{"generator", m.generator},
                    {"source", m.source},
                    {"target", m.target},
                    {"image_of_start", to_json(m.image_of_start)},
                    {"image_of_end", to_json(m.image_of_end)},
                    {"sample", to_json(m.sample)},
                    {"image_of_sample", to_json(m.image_of_sample)},
                    {"endpoints_ok", m.endpoints_ok},
                    {"sample_ok", m.sample_ok},
                    {"orientation_preserving", m.orientation_preserving}});
  return Json{{"case", static_cast<int>(c.case_id)},
              {"t", to_json(c.t)},
              {"marked_points", points},
              {"arcs", arcs},
              {"mappings", maps},
              {"points_distinct", c.points_distinct},
              {"arcs_cyclically_ordered", c.arcs_cyclically_ordered},
              {"exact", c.exact},
              {"verified", c.verified()}};
}

Json to_json(const SquierForm& f) {
  Json j{{"strands", f.strands}, {"variable", "s"}, {"j", to_json(f.j_s)}};
  if (auto jt = f.j_t()) j["j_in_t"] = to_json(*jt);
  j["window"] = f.window;
  j["solution_dimension"] = f.solution_dimension;
  return j;
}

Json to_json(const SpecializationVerdict& v) {
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back({{"name", e.name}, {"status", e.status}, {"detail", e.detail}});
  return Json{{"t_input", to_json(v.t_input)},
              {"regime", to_string(v.regime)},
              {"discrete", to_string(v.discrete)},
              {"faithful", to_string(v.faithful)},
              {"exactness", to_string(v.exactness)},
              {"evidence", ev}};
}

Json to_json(const UnfaithfulnessCertificate& c) {
  Json j{{"word", to_json(c.word)}, {"entry", to_json(c.entry)}, {"factor", to_json(c.factor)},
         {"root", to_json(c.root)}};
  j["exact_root"] = c.exact_root ? Json(rational(*c.exact_root)) : Json(nullptr);
  j["checks"] = Json{{"in_window", c.in_window},
                     {"entry21_vanishes", c.entry21_vanishes},
                     {"vanishing_method", c.vanishing_method},
                     {"gcd_degree", c.gcd_degree},
                     {"sigma1_upper_triangular", c.sigma1_upper_triangular},
                     {"upper_triangular_pair", c.upper_triangular_pair}};
  j["verified"] = c.verified();
  return j;
}

Json to_json(const KernelPairCheck& k) {
  return Json{{"symbolic_unequal", k.symbolic_unequal},
              {"equal_at_t0", k.equal_at_t0},
              {"quotient_identity_at_t0", k.quotient_identity_at_t0},
              {"quotient_symbolic_nonidentity", k.quotient_symbolic_nonidentity},
              {"unequal_at_probe", k.unequal_at_probe},
              {"t0", to_json(k.t0)},
              {"probe", to_json(k.probe)},
              {"omega1_length", k.omega1_length},
              {"omega2_length", k.omega2_length},
              {"verified", k.verified()}};
}

Json to_json(const UnipotentExtension& u) {
  Json j{{"word", to_json(u.word)}, {"t", to_json(u.t0)}, {"unitriangular", u.unitriangular}, {"depth", u.depth}};
  j["conjugator"] = u.conjugator ? to_json(*u.conjugator) : Json(nullptr);
  j["kernel_element"] = u.kernel_element ? to_json(*u.kernel_element) : Json(nullptr);
  j["kernel_symbolic_nonidentity"] = u.kernel_symbolic_nonidentity;
  j["kernel_specializes_to_identity"] = u.kernel_specializes_to_identity;
  return j;
}

Json to_json(const GaloisCertificate& g) {
  Json words = Json::array();
  for (const auto& w : g.words_checked)
    words.push_back({{"word", to_json(w.word)}, {"a", to_json(w.a)}, {"a_sigma", to_json(w.a_sigma)}, {"holds", w.holds}});
  return Json{{"alpha", g.alpha.to_string()},
              {"strands", g.strands},
              {"j_at_alpha", to_json(g.j)},
              {"words_checked", words},
              {"relation_verified", g.relation_verified}};
}

}  // namespace burau
