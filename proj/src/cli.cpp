#include "burau/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "burau/error.hpp"
#include "burau/json_io.hpp"

namespace burau {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// `a.b[0].c: value` lines, one per leaf.
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  auto leaf = [&](const Json& v) {
    out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
    if (scalars) {
      std::string line;
      for (const auto& v : j) line += (line.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
      out << prefix << ": [" << line << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    leaf(j);
  }
}

struct Options {
  std::string format = "json";
  double epsilon = 1e-9;
  long n_max = 1000;
  std::string refine_width = "1/1000000";
  std::string t;
  std::string word;
  std::string gen = "x";
  std::string out_path;
  std::string alpha = "q(3/2,1/2,5)";
  std::string words;
  int n = 3;
  int case_id = 1;
  int iters = 200;
  double threshold = 0.05;
  int random_words = 20;
  unsigned seed = 20240601;
};

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.format == "text") flatten(doc, "", out);
  else out << doc.dump(2) << '\n';
}

Rational parse_positive_rational(const std::string& text, const char* what) {
  Scalar s = parse_scalar(text);
  if (!s.is_rational() || s.sign() <= 0) throw PreconditionError(std::string(what) + " must be a positive rational");
  return s.rational();
}

std::vector<BraidWord> parse_word_list(const std::string& text, int strands) {
  std::vector<BraidWord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_word(item, strands));
  }
  return out;
}

BraidWord random_word(std::mt19937& rng, int strands) {
  std::uniform_int_distribution<int> len(1, 12), idx(1, strands - 1), pw(1, 3), sign(0, 1);
  std::vector<Letter> letters;
  int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back({idx(rng), sign(rng) ? pw(rng) : -pw(rng)});
  return BraidWord(strands, letters);
}

PingPongCase to_case(int c) {
  if (c < 1 || c > 3) throw PreconditionError("case must be 1, 2 or 3");
  return static_cast<PingPongCase>(c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Burau representations of B3 and B4: exact specializations, verdicts and certificates", "burau"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--epsilon", o.epsilon, "Float rotation matching tolerance");
  app.add_option("--nmax", o.n_max, "Largest denominator in float rotation matching");
  app.add_option("--refine-width", o.refine_width, "Root interval width (rational)");

  auto sub = [&](CLI::App* parent, const char* name, const char* help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto t_opt = [&](CLI::App* s) { s->add_option("--t", o.t, "Specialization parameter")->required(); };
  auto word_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--word", o.word, "Braid word, e.g. \"s1 s2^-1\"");
    if (required) opt->required();
  };
  auto n_opt = [&](CLI::App* s) { s->add_option("--n", o.n, "Strand count")->check(CLI::IsMember({3, 4})); };

  CLI::App* c_classify = sub(&app, "classify", "Verdict for the specialization at t");
  t_opt(c_classify);
  CLI::App* c_burau = sub(&app, "burau", "Symbolic Burau image of a word");
  n_opt(c_burau);
  word_opt(c_burau, true);
  CLI::App* c_spec = sub(&app, "specialize", "Burau image evaluated at t");
  n_opt(c_spec);
  word_opt(c_spec, true);
  t_opt(c_spec);
  CLI::App* c_iso = sub(&app, "isometry", "Isometry class and fixed points of x, y or y x^-1 at t");
  t_opt(c_iso);
  c_iso->add_option("--gen", o.gen)->check(CLI::IsMember({"x", "y", "yx-inv"}));
  CLI::App* c_roots = sub(&app, "roots", "Real roots of the 2-1 entry of a B3 word");
  word_opt(c_roots, true);
  CLI::App* c_hunt = sub(&app, "hunt", "Unfaithfulness certificates from the 2-1 entry");
  word_opt(c_hunt, true);
  CLI::App* c_figure = sub(&app, "figure", "SVG of the ping-pong configuration");
  t_opt(c_figure);
  c_figure->add_option("--case", o.case_id)->required();
  c_figure->add_option("--out", o.out_path)->required();
  CLI::App* c_orbit = sub(&app, "orbit", "Orbit of the elliptic fixed point of x under y");
  t_opt(c_orbit);
  c_orbit->add_option("--iters", o.iters)->required();
  c_orbit->add_option("--threshold", o.threshold);

  CLI::App* c_verify = sub(&app, "verify", "Symbolic and exact checks");
  c_verify->require_subcommand(1);
  CLI::App* v_squier = sub(c_verify, "squier", "Derived Squier form and its defining relation");
  n_opt(v_squier);
  CLI::App* v_duality = sub(c_verify, "duality", "bar(rho(w)) against (rho(w)^-1)^T conjugated by J^T");
  n_opt(v_duality);
  word_opt(v_duality, false);
  v_duality->add_option("--random", o.random_words, "Random words per strand count when no word is given");
  v_duality->add_option("--seed", o.seed);
  CLI::App* v_pair = sub(c_verify, "b4-pair", "The omega_1 / omega_2 kernel pair");
  CLI::App* v_pp = sub(c_verify, "pingpong", "Boundary ping-pong schedule");
  t_opt(v_pp);
  v_pp->add_option("--case", o.case_id)->required();
  CLI::App* v_galois = sub(c_verify, "galois", "Galois discreteness certificate");
  v_galois->add_option("--alpha", o.alpha);
  n_opt(v_galois);
  v_galois->add_option("--words", o.words, "Words separated by ';' (default sample set)");
  CLI::App* v_comm = sub(c_verify, "commutator", "Trace of [x^-1, y]");
  CLI::App* v_uni = sub(c_verify, "unipotent", "Lift a B3 kernel element at t into B4");
  word_opt(v_uni, true);
  t_opt(v_uni);
  CLI::App* v_cdual = sub(c_verify, "classify-duality", "Verdicts at t and 1/t agree");
  t_opt(v_cdual);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const RotationOptions rot{o.epsilon, o.n_max};
    if (*c_classify) {
      SpecializationVerdict v = classify(parse_scalar(o.t), rot);
      emit(to_json(v), o, out);
      if (v.regime == Regime::ExcludedZero) {
        err << "burau: zero specialization: t = 0 is not a valid parameter\n";
        return kExitUsage;
      }
      return 0;
    }
    if (*c_burau) {
      BraidWord w = parse_word(o.word, o.n);
      LaurentMatrix m = burau(w);
      emit(Json{{"word", to_json(w)}, {"matrix", to_json(m)}, {"det", to_json(m.det())}}, o, out);
      return 0;
    }
    if (*c_spec) {
      BraidWord w = parse_word(o.word, o.n);
      Scalar t = parse_scalar(o.t);
      emit(Json{{"word", to_json(w)}, {"t", to_json(t)}, {"matrix", to_json(specialize(burau(w), t))}}, o, out);
      return 0;
    }
    if (*c_iso) {
      Scalar t = parse_scalar(o.t);
      auto g = conjugated_generators();
      RealMatrix x = specialize(g.x, t), y = specialize(g.y, t);
      RealMatrix m = o.gen == "x" ? x : o.gen == "y" ? y : y * x.inverse();
      IsometryClass cls = classify_isometry(m);
      Json doc{{"generator", o.gen}, {"t", to_json(t)}, {"matrix", to_json(m)}, {"class", to_json(cls)}};
      if (cls.kind != IsometryKind::Scalar) doc["fixed_points"] = to_json(fixed_points(m));
      if (cls.kind == IsometryKind::Elliptic && o.gen != "yx-inv") doc["rotation_data"] = to_json(rotation_data(m, t, rot));
      emit(doc, o, out);
      return 0;
    }
    if (*c_roots) {
      BraidWord w = parse_word(o.word, 3);
      IntPoly q = entry21_polynomial(w);
      Rational width = parse_positive_rational(o.refine_width, "--refine-width");
      const IntPoly window{1, -3, 1};
      Json roots = Json::array();
      for (const auto& r0 : isolate_real_roots(q)) {
        RootInterval r = refine(r0, width);
        bool inside = r.is_exact() ? window.sign_at(r.lo) < 0 : window.sign_at(r.lo) < 0 && window.sign_at(r.hi) < 0;
        Json jr = to_json(r);
        jr["positive"] = r.lo >= 0;  // the entry has no root at 0
        jr["in_window"] = inside;
        roots.push_back(jr);
      }
      emit(Json{{"word", to_json(w)},
                {"entry", to_json(q)},
                {"squarefree_part", to_json(squarefree_part(q))},
                {"real_root_count", SturmSequence(q).count_real_roots()},
                {"roots", roots}},
           o, out);
      return 0;
    }
    if (*c_hunt) {
      BraidWord w = parse_word(o.word, 3);
      auto certs = hunt_unfaithful(w, parse_positive_rational(o.refine_width, "--refine-width"));
      Json list = Json::array();
      bool ok = true;
      for (const auto& c : certs) {
        list.push_back(to_json(c));
        ok = ok && c.verified();
      }
      emit(Json{{"word", to_json(w)}, {"certificates", list}}, o, out);
      return ok ? 0 : kExitFailure;
    }
    if (*c_figure) {
      Scalar t = parse_scalar(o.t);
      PingPongCertificate cert = pingpong_certificate(t, to_case(o.case_id));
      std::ostringstream svg;
      write_svg(disk_figure(cert), svg);
      std::ofstream file(o.out_path);
      if (!file || !(file << svg.str())) {
        err << "burau: cannot write " << o.out_path << '\n';
        return kExitUsage;
      }
      emit(Json{{"written", o.out_path}, {"certificate", to_json(cert)}}, o, out);
      return cert.verified() ? 0 : kExitFailure;
    }
    if (*c_orbit) {
      emit(to_json(orbit_accumulation_test(parse_scalar(o.t), o.iters, o.threshold)), o, out);
      return 0;
    }
    if (*v_squier) {
      Json forms = Json::array();
      bool ok = true;
      std::vector<int> strands = v_squier->count("--n") ? std::vector<int>{o.n} : std::vector<int>{3, 4};
      for (int n : strands) {
        SquierForm f = derive_squier_form(n);
        Json jf = to_json(f);
        Json rel = Json::array();
        for (int g = 1; g < n; ++g) {
          bool holds = satisfies_squier_relation(f, burau_generator(n, g));
          ok = ok && holds;
          rel.push_back({{"generator", "s" + std::to_string(g)}, {"holds", holds}});
        }
        jf["relation"] = rel;
        jf["nonsingular"] = !f.j_s.det().is_zero();
        forms.push_back(jf);
      }
      emit(Json{{"forms", forms}, {"verified", ok}}, o, out);
      return ok ? 0 : kExitFailure;
    }
    if (*v_duality) {
      std::vector<BraidWord> words;
      if (!o.word.empty() || v_duality->count("--word")) {
        words.push_back(parse_word(o.word, o.n));
      } else {
        std::mt19937 rng(o.seed);
        for (int n : {3, 4})
          for (int i = 0; i < o.random_words; ++i) words.push_back(random_word(rng, n));
      }
      Json list = Json::array();
      bool ok = true;
      for (const auto& w : words) {
        bool holds = verify_duality(w);
        ok = ok && holds;
        list.push_back({{"word", to_json(w)}, {"holds", holds}});
      }
      emit(Json{{"orientation", "J^T bar(M) = (M^-1)^T J^T"}, {"words", list}, {"verified", ok}}, o, out);
      return ok ? 0 : kExitFailure;
    }
    if (*v_pair) {
      KernelPairCheck k = b4_kernel_pair_check();
      emit(to_json(k), o, out);
      return k.verified() ? 0 : kExitFailure;
    }
    if (*v_pp) {
      PingPongCertificate cert = pingpong_certificate(parse_scalar(o.t), to_case(o.case_id));
      emit(to_json(cert), o, out);
      return cert.verified() ? 0 : kExitFailure;
    }
    if (*v_galois) {
      Scalar a = parse_scalar(o.alpha);
      if (!a.is_quadratic()) throw PreconditionError("alpha must be a quadratic irrational q(a,b,d)");
      int n = v_galois->count("--n") ? o.n : 3;
      std::vector<BraidWord> words = o.words.empty() ? galois_sample_words(n) : parse_word_list(o.words, n);
      GaloisCertificate g = galois_discreteness_certificate(a.quad(), words, n);
      emit(to_json(g), o, out);
      return g.relation_verified ? 0 : kExitFailure;
    }
    if (*v_comm) {
      CommutatorTraceCheck c = commutator_trace_check();
      emit(to_json(c), o, out);
      return c.symbolic_equal && c.samples_exceed_two ? 0 : kExitFailure;
    }
    if (*v_uni) {
      emit(to_json(unipotent_extension_check(parse_word(o.word, 3), parse_scalar(o.t))), o, out);
      return 0;
    }
    if (*v_cdual) {
      Scalar t = parse_scalar(o.t);
      bool agree = duality_check(t);
      emit(Json{{"t", to_json(t)},
                {"verdict", to_json(classify(t, rot))},
                {"dual_verdict", to_json(classify(t.inverse(), rot))},
                {"agree", agree}},
           o, out);
      return agree ? 0 : kExitFailure;
    }
  } catch (const burau::ParseError& e) {
    err << "burau: parse error at position " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "burau: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "burau: invariant failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "burau: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "burau: no command given\n";
  return kExitUsage;
}

}  // namespace burau
