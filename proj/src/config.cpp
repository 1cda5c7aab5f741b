#include "karteszi/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "karteszi/error.hpp"

namespace karteszi::config {

KParams validate_params(int n, int l, int m) {
  if (n < 7) throw Error(Errc::BadN, "K(n; l, m) needs n >= 7, got " + std::to_string(n));
  const int hi = (n - 1) / 2;
  for (int k : {l, m}) {
    if (k < 2 || k > hi) {
      throw Error(Errc::BadClassRange, "class " + std::to_string(k) + " outside [2, " +
                                           std::to_string(hi) + "] for n = " + std::to_string(n));
    }
  }
  if (l == m) throw Error(Errc::EqualClasses, "l and m must differ");
  return KParams{n, std::min(l, m), std::max(l, m)};
}

std::string_view orbit_tag(PointOrbit o) {
  switch (o) {
    case PointOrbit::P1: return "P1";
    case PointOrbit::PL: return "Pl";
    case PointOrbit::PM: return "Pm";
  }
  return "?";
}

std::string_view orbit_tag(LineOrbit o) {
  switch (o) {
    case LineOrbit::LL: return "Ll";
    case LineOrbit::LM: return "Lm";
    case LineOrbit::LC: return "Lc";
  }
  return "?";
}

PointOrbit point_orbit_from_tag(std::string_view tag) {
  for (auto o : {PointOrbit::P1, PointOrbit::PL, PointOrbit::PM}) {
    if (orbit_tag(o) == tag) return o;
  }
  throw Error(Errc::SchemaError, "unknown point orbit '" + std::string(tag) + "'");
}

LineOrbit line_orbit_from_tag(std::string_view tag) {
  for (auto o : {LineOrbit::LL, LineOrbit::LM, LineOrbit::LC}) {
    if (orbit_tag(o) == tag) return o;
  }
  throw Error(Errc::SchemaError, "unknown line orbit '" + std::string(tag) + "'");
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Clean: return "clean";
    case Verdict::ExtraIncidences: return "extra_incidences";
    case Verdict::Ambiguous: return "ambiguous";
  }
  return "?";
}

Verdict verdict_from_name(std::string_view name) {
  for (auto v : {Verdict::Clean, Verdict::ExtraIncidences, Verdict::Ambiguous}) {
    if (verdict_name(v) == name) return v;
  }
  throw Error(Errc::SchemaError, "unknown verdict '" + std::string(name) + "'");
}

Sweep sweep(const std::vector<ConfigPoint>& points, const std::vector<ConfigLine>& lines,
            const TolerancePolicy& tol) {
  Sweep out{{}, std::numeric_limits<double>::infinity(), 0};
  const double band = tol.separation();
  for (const auto& p : points) {
    for (const auto& l : lines) {
      const double d = std::abs(l.line.signed_distance(p.pos));
      if (d <= tol.eps_inc) {
        out.incidence.emplace_back(p.id, l.id);
      } else {
        out.min_margin = std::min(out.min_margin, d);
        if (d <= band) ++out.ambiguous_pairs;
      }
    }
  }
  std::sort(out.incidence.begin(), out.incidence.end());
  return out;
}

std::vector<Flag> designated_incidence(const KParams& p) {
  const int n = p.n;
  auto w = [n](int j) { return ((j % n) + n) % n; };
  const int a0 = 0, d0 = n, b0 = 2 * n;          // point orbit offsets
  const int ll0 = 0, lm0 = n, lc0 = 2 * n;       // line orbit offsets
  std::vector<Flag> out;
  out.reserve(static_cast<std::size_t>(12 * n));
  for (int j = 0; j < n; ++j) {
    for (int pt : {a0 + j, a0 + w(j + p.l), d0 + j, d0 + w(j + 1)}) out.emplace_back(pt, ll0 + j);
    for (int pt : {a0 + j, a0 + w(j + p.m), b0 + j, b0 + w(j + 1)}) out.emplace_back(pt, lm0 + j);
    for (int pt : {d0 + j, d0 + w(j + p.m), b0 + j, b0 + w(j + p.l)}) out.emplace_back(pt, lc0 + j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> KConfig::line_degrees() const {
  std::vector<int> deg(lines.size(), 0);
  for (const auto& [p, l] : incidence) ++deg[static_cast<std::size_t>(l)];
  return deg;
}

std::vector<int> KConfig::point_degrees() const {
  std::vector<int> deg(points.size(), 0);
  for (const auto& [p, l] : incidence) ++deg[static_cast<std::size_t>(p)];
  return deg;
}

Diagnostics diagnose(const KParams& p, const Sweep& s) {
  const auto designated = designated_incidence(p);
  Diagnostics d;
  std::set_difference(s.incidence.begin(), s.incidence.end(), designated.begin(), designated.end(),
                      std::back_inserter(d.extras));
  std::set_difference(designated.begin(), designated.end(), s.incidence.begin(), s.incidence.end(),
                      std::back_inserter(d.missing));
  d.min_margin = s.min_margin;
  std::vector<int> ld(static_cast<std::size_t>(3 * p.n), 0);
  std::vector<int> pd(static_cast<std::size_t>(3 * p.n), 0);
  for (const auto& [pt, l] : s.incidence) {
    ++pd[static_cast<std::size_t>(pt)];
    ++ld[static_cast<std::size_t>(l)];
  }
  d.max_line_degree = *std::max_element(ld.begin(), ld.end());
  d.max_point_degree = *std::max_element(pd.begin(), pd.end());
  if (s.ambiguous_pairs > 0 || !d.missing.empty()) {
    d.verdict = Verdict::Ambiguous;
  } else if (!d.extras.empty()) {
    d.verdict = Verdict::ExtraIncidences;
  } else {
    d.verdict = Verdict::Clean;
  }
  return d;
}

KConfig build(const KParams& params, const TolerancePolicy& tol) {
  tol.validate();
  const KParams p = validate_params(params.n, params.l, params.m);
  const int n = p.n;
  const ngon::RegularNGon g(n);
  const auto dl = ngon::kth_ngon(g, p.l);
  const auto dm = ngon::kth_ngon(g, p.m);

  KConfig cfg;
  cfg.params = p;
  cfg.tolerance = tol;
  cfg.points.reserve(static_cast<std::size_t>(3 * n));
  cfg.lines.reserve(static_cast<std::size_t>(3 * n));

  int id = 0;
  for (int j = 0; j < n; ++j) cfg.points.push_back({id++, PointOrbit::P1, j, ngon::vertex(g, j)});
  for (int j = 0; j < n; ++j) cfg.points.push_back({id++, PointOrbit::PL, j, dl.vertices[j]});
  for (int j = 0; j < n; ++j) cfg.points.push_back({id++, PointOrbit::PM, j, dm.vertices[j]});

  id = 0;
  for (int j = 0; j < n; ++j) cfg.lines.push_back({id++, LineOrbit::LL, j, ngon::diagonal(g, {j, p.l})});
  for (int j = 0; j < n; ++j) cfg.lines.push_back({id++, LineOrbit::LM, j, ngon::diagonal(g, {j, p.m})});
  for (int j = 0; j < n; ++j) cfg.lines.push_back({id++, LineOrbit::LC, j, ngon::common_line(g, p.l, p.m, j)});

  const Sweep s = sweep(cfg.points, cfg.lines, tol);
  cfg.incidence = s.incidence;
  cfg.flags = diagnose(p, s);
  return cfg;
}

std::string CelestialSymbol::text() const {
  std::ostringstream os;
  os << n << "#(";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ';';
    os << pairs[i].first << ',' << pairs[i].second;
  }
  os << ')';
  return os.str();
}

CelestialSymbol celestial_symbol(const KParams& params) {
  const KParams p = validate_params(params.n, params.l, params.m);
  CelestialSymbol s{p.n, {{1, p.l}, {p.m, 1}, {p.l, p.m}}, 0, {}, {}};
  int sum_p = 0, sum_q = 0;
  for (const auto& [a, b] : s.pairs) {
    s.P.push_back(a);
    s.Q.push_back(b);
    sum_p += a;
    sum_q += b;
  }
  std::sort(s.P.begin(), s.P.end());
  std::sort(s.Q.begin(), s.Q.end());
  s.t = (sum_p - sum_q) / 2;
  return s;
}

Connectivity connectivity(const KConfig& config) {
  const std::size_t np = config.points.size();
  std::vector<std::size_t> parent(np + config.lines.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = parent.size();
  for (const auto& [p, l] : config.incidence) {
    const auto a = find(static_cast<std::size_t>(p));
    const auto b = find(np + static_cast<std::size_t>(l));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  const auto sym = celestial_symbol(config.params);
  int g = sym.n;
  for (int v : sym.P) g = std::gcd(g, v);
  for (int v : sym.Q) g = std::gcd(g, v);
  return {components <= 1, g};
}

}  // namespace karteszi::config
