#include "karteszi/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "karteszi/analyze.hpp"
#include "karteszi/combin.hpp"
#include "karteszi/config.hpp"
#include "karteszi/document.hpp"
#include "karteszi/error.hpp"
#include "karteszi/render.hpp"

namespace karteszi::cli {

namespace {

geom::TolerancePolicy tolerance_from_env() {
  geom::TolerancePolicy tol;
  if (const char* raw = std::getenv("KARTESZI_EPS"); raw && *raw) {
    char* end = nullptr;
    const double eps = std::strtod(raw, &end);
    if (end == raw || *end != '\0') throw Error(Errc::InvalidTolerance, std::string("KARTESZI_EPS='") + raw + "'");
    tol.eps_inc = eps;
  }
  tol.validate();
  return tol;
}

std::string name(const config::KParams& p) {
  std::ostringstream os;
  os << "K(" << p.n << ';' << p.l << ',' << p.m << ')';
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string role_name(analyze::PairRole r) {
  switch (r) {
    case analyze::PairRole::L1L2: return "l1,l2";
    case analyze::PairRole::L1R: return "l1,r";
    case analyze::PairRole::L2R: return "l2,r";
  }
  return "?";
}

int run_check(const config::KParams& params, std::ostream& out) {
  const auto tol = tolerance_from_env();
  const auto cfg = config::build(params, tol);
  const auto rep = analyze::scan(cfg);
  const int count = 3 * cfg.n();
  out << name(cfg.params) << ": " << cfg.points.size() << " points, " << cfg.lines.size() << " lines, "
      << cfg.incidence.size() << " flags, min margin " << sci(rep.min_margin) << '\n';
  const auto tag = analyze::is_exceptional(cfg.params);
  switch (rep.verdict) {
    case config::Verdict::Clean:
      out << "(" << count << "_4) configuration, clean\n";
      if (tag) out << "warning: classifier expected " << tag->text() << '\n';
      return kOk;
    case config::Verdict::ExtraIncidences: {
      const auto hot = rep.overfull_lines();
      const int max_deg = *std::max_element(rep.line_degrees.begin(), rep.line_degrees.end());
      out << "extra incidences: " << rep.extras.size() << " extra flags, " << hot.size()
          << " lines carry more than 4 points (max line degree " << max_deg << ")\n";
      out << "family: " << (tag ? tag->text() + " [" + role_name(tag->role) + "]" : "none (unclassified)") << '\n';
      return kExceptional;
    }
    case config::Verdict::Ambiguous:
      out << "ambiguous: a non-incident distance falls within " << sci(tol.separation())
          << "; rerun with a different KARTESZI_EPS\n";
      return kAmbiguous;
  }
  return kFailure;
}

int run_classify(const config::KParams& params, std::ostream& out) {
  const auto p = config::validate_params(params.n, params.l, params.m);
  const auto tag = analyze::is_exceptional(p);
  const auto x = analyze::astral_obstruction(p);
  const auto sym = config::celestial_symbol(p);
  out << name(p) << " = " << sym.text() << '\n';
  if (tag) {
    out << "exceptional: " << tag->text() << " [" << role_name(tag->role) << "]\n";
  } else {
    out << "valid: (" << 3 * p.n << "_4) configuration without extra incidences\n";
  }
  if (x) {
    out << "astral witness: x = " << *x << '\n';
  } else {
    out << "astral witness: none\n";
  }
  return tag ? kExceptional : kOk;
}

int run_triples(int n, std::ostream& out) {
  const auto tol = tolerance_from_env();
  const auto triples = analyze::concurrent_triples(n, tol);
  out << "# concurrent diagonal triples for n = " << n << " (" << triples.size() << ")\n";
  out << "# r l1 l2  witness: k i x y\n";
  for (const auto& t : triples) {
    out << t.r << ' ' << t.l1 << ' ' << t.l2 << "  " << t.witness_class << ' ' << t.witness_index << ' '
        << std::setprecision(12) << t.witness.x << ' ' << t.witness.y << '\n';
  }
  return kOk;
}

int run_survey(int max_n, bool verify, unsigned threads, std::ostream& out) {
  if (max_n < 7) throw Error(Errc::BadN, "--max-n must be at least 7");
  int exceptional = 0;
  for (const auto& p : analyze::all_params(max_n)) {
    if (auto tag = analyze::is_exceptional(p)) {
      ++exceptional;
      out << name(p) << ' ' << tag->text() << " [" << role_name(tag->role) << "]\n";
    }
  }
  const auto total = analyze::all_params(max_n).size();
  out << total << " parameter triples, " << exceptional << " exceptional pairs\n";
  if (!verify) return kOk;

  const auto report = analyze::cross_validate(max_n, tolerance_from_env(), threads);
  out << "verify: " << report.cases << " cases scanned, " << report.exceptional.size()
      << " exceptional by scan or classifier, " << report.disagreements.size() << " disagreements, "
      << report.ambiguous.size() << " ambiguous, min clean margin " << sci(report.min_clean_margin) << '\n';
  for (const auto& c : report.disagreements) {
    out << "disagreement: " << name(c.params) << " scan=" << config::verdict_name(c.verdict)
        << " classifier=" << (c.tag ? c.tag->text() : "none") << '\n';
  }
  for (const auto& c : report.ambiguous) out << "ambiguous: " << name(c.params) << '\n';
  if (!report.ambiguous.empty()) return kAmbiguous;
  return report.disagreements.empty() ? kOk : kFailure;
}

int run_iso(const std::string& a, const std::string& b, std::ostream& out) {
  const auto s1 = io::read_incidence(a);
  const auto s2 = io::read_incidence(b);
  const auto iso = combin::are_isomorphic(s1, s2);
  if (!iso) {
    out << "not isomorphic\n";
    return kOk;
  }
  out << "isomorphic\n";
  out << "points:";
  for (int v : iso->point_map) out << ' ' << v;
  out << "\nlines:";
  for (int v : iso->line_map) out << ' ' << v;
  out << '\n';
  return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Karteszi configurations K(n; l, m): construction, incidence analysis, rendering", "karteszi"};
  app.require_subcommand(1);

  config::KParams params;
  auto add_params = [&params](CLI::App* sub) {
    sub->add_option("N", params.n, "number of polygon vertices")->required();
    sub->add_option("L", params.l, "first diagonal class")->required();
    sub->add_option("M", params.m, "second diagonal class")->required();
  };

  std::string out_file;
  auto* build = app.add_subcommand("build", "construct K(N;L,M) and write its document");
  add_params(build);
  build->add_option("--out", out_file, "output file (stdout if omitted)");

  auto* check = app.add_subcommand("check", "construct and scan for extra incidences");
  add_params(check);

  int triples_n = 0;
  auto* triples = app.add_subcommand("triples", "list concurrent diagonal triples of the regular N-gon");
  triples->add_option("N", triples_n)->required();

  auto* classify = app.add_subcommand("classify", "closed-form verdict, family tag and astral witness");
  add_params(classify);

  int max_n = 0;
  bool verify = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* survey = app.add_subcommand("survey", "enumerate all valid parameters up to --max-n");
  survey->add_option("--max-n", max_n)->required();
  survey->add_flag("--verify", verify, "cross-check every case with the geometric scan");
  survey->add_option("--threads", threads, "worker threads for --verify");

  std::string doc_file, svg_file, style_name = "default";
  auto* render = app.add_subcommand("render", "render a configuration document as SVG");
  render->add_option("FILE", doc_file)->required();
  render->add_option("--svg", svg_file)->required();
  render->add_option("--style", style_name, "'default', 'mono' or a JSON style file");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "compare two structures up to isomorphism");
  iso->add_option("FILE1", iso_a)->required();
  iso->add_option("FILE2", iso_b)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*build) {
      const auto cfg = config::build(params, tolerance_from_env());
      const auto text = io::serialize(io::to_document(cfg));
      if (out_file.empty()) {
        out << text;
      } else {
        io::write_text(out_file, text);
        out << "wrote " << name(cfg.params) << " to " << out_file << '\n';
      }
      if (cfg.flags.verdict != config::Verdict::Clean) {
        err << "note: verdict " << config::verdict_name(cfg.flags.verdict) << '\n';
      }
      return kOk;
    }
    if (*check) return run_check(params, out);
    if (*triples) return run_triples(triples_n, out);
    if (*classify) return run_classify(params, out);
    if (*survey) return run_survey(max_n, verify, threads, out);
    if (*render) {
      const auto cfg = io::read_document(doc_file);
      io::render_svg(cfg, io::load_style(style_name), svg_file);
      out << "wrote " << svg_file << '\n';
      return kOk;
    }
    if (*iso) return run_iso(iso_a, iso_b, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace karteszi::cli
