#include "karteszi/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "karteszi/error.hpp"
#include "karteszi/ngon.hpp"

namespace karteszi::analyze {

std::vector<int> IncidenceReport::overfull_lines() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < line_degrees.size(); ++i) {
    if (line_degrees[i] > 4) out.push_back(static_cast<int>(i));
  }
  return out;
}

IncidenceReport scan(const KConfig& config) {
  const auto s = config::sweep(config.points, config.lines, config.tolerance);
  const auto d = config::diagnose(config.params, s);
  IncidenceReport rep{std::vector<int>(config.lines.size(), 0),
                      std::vector<int>(config.points.size(), 0), d.extras, d.min_margin, d.verdict};
  for (const auto& [p, l] : s.incidence) {
    ++rep.point_degrees[static_cast<std::size_t>(p)];
    ++rep.line_degrees[static_cast<std::size_t>(l)];
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Concurrency of three diagonals
// ---------------------------------------------------------------------------

namespace {

double sin_pi(const Fraction& f) { return std::sin(geom::Angle(f).radians()); }

}  // namespace

PREvaluation pr_equation(const PRArcs& a) {
  const Fraction zero(0);
  for (const auto* f : {&a.U, &a.V, &a.W, &a.X, &a.Y, &a.Z}) {
    if (!(zero < *f)) throw Error(Errc::NonPositiveArc, "arcs must be positive");
  }
  if (a.U + a.V + a.W + a.X + a.Y + a.Z != Fraction(1)) {
    throw Error(Errc::ArcSumMismatch, "arcs must sum to the full turn");
  }
  const double lhs = sin_pi(a.U) * sin_pi(a.V) * sin_pi(a.W);
  const double rhs = sin_pi(a.X) * sin_pi(a.Y) * sin_pi(a.Z);
  return {lhs, rhs, std::abs(lhs - rhs) <= 1e-12};
}

PRArcs pr_family(int row, const Fraction& t) {
  const Fraction sixth(1, 6), third(1, 3), half(1, 2), two(2), three(3), four(4);
  switch (row) {
    case 1: return {sixth, t, third - two * t, third + t, t, sixth - t};
    case 2: return {sixth, half - three * t, t, sixth - t, two * t, sixth + t};
    case 3: return {sixth, sixth - two * t, two * t, sixth - two * t, t, half + t};
    case 4: return {third - four * t, t, third + t, sixth - two * t, three * t, sixth + t};
    default: throw std::out_of_range("family rows are numbered 1..4");
  }
}

Fraction pr_family_bound(int row) {
  if (row == 1 || row == 2) return Fraction(1, 6);
  if (row == 3 || row == 4) return Fraction(1, 12);
  throw std::out_of_range("family rows are numbered 1..4");
}

Point derived_vertex(int n, int k, int i) {
  const ngon::RegularNGon g(n);
  return geom::intersect(ngon::diagonal(g, {i, k}), ngon::diagonal(g, {i + 1, k}));
}

std::vector<ConcurrencyTriple> concurrent_triples(int n, const geom::TolerancePolicy& tol) {
  if (n < 7) throw Error(Errc::BadN, "concurrent_triples needs n >= 7");
  const ngon::RegularNGon g(n);
  const int hi = g.max_class();

  // diagonals[r][j] = A_jA_{j+r}
  std::vector<std::vector<geom::Line>> diagonals(static_cast<std::size_t>(hi + 1));
  for (int r = 1; r <= hi; ++r) {
    for (int j = 0; j < n; ++j) diagonals[r].push_back(ngon::diagonal(g, {j, r}));
  }

  std::map<std::array<int, 3>, ConcurrencyTriple> found;
  for (int k = 2; k <= hi; ++k) {
    for (int i = 0; i < n; ++i) {
      const Point b = geom::intersect(diagonals[k][i], diagonals[k][g.wrap(i + 1)]);
      for (int r = 1; r <= hi; ++r) {
        for (int j = 0; j < n; ++j) {
          if (r == k && (j == i || j == g.wrap(i + 1))) continue;
          if (!geom::incident(b, diagonals[r][j], tol)) continue;
          // Rotate so the crossing diagonal is A_0A_r.
          const int rel = g.wrap(i - j);
          const int mirror = g.wrap(r - rel - k - 1);
          if (mirror == rel) continue;  // B sits at the chord's midpoint; no second vertex
          const int partner = g.chord_class(mirror - rel);
          const std::array<int, 3> key{r, std::min(k, partner), std::max(k, partner)};
          auto it = found.find(key);
          const bool better = it == found.end() || k < it->second.witness_class ||
                              (k == it->second.witness_class && rel < it->second.witness_index);
          if (better) {
            found[key] = ConcurrencyTriple{key[0], key[1], key[2], k, rel, derived_vertex(n, k, rel)};
          }
        }
      }
    }
  }
  std::vector<ConcurrencyTriple> out;
  out.reserve(found.size());
  for (auto& [key, t] : found) out.push_back(t);
  return out;
}

SecondVertex second_vertex(int n, int r, int k, int i, const geom::TolerancePolicy& tol) {
  const ngon::RegularNGon g(n);
  ngon::check_class(g, r);
  ngon::check_class(g, k);
  const int idx = g.wrap(i);
  const int mirror = g.wrap(r - idx - k - 1);
  if (mirror == idx) throw Error(Errc::MidpointCase, "reflection fixes B_i");
  if (!geom::incident(derived_vertex(n, k, idx), ngon::diagonal(g, {0, r}), tol)) {
    throw Error(Errc::NotIncident, "B_i does not lie on A_0A_r");
  }
  const int cls = 2 * idx - r + k + 1;
  const bool side = 2 * r < n && r < 2 * idx && 2 * cls < n;
  return {mirror, g.chord_class(mirror - idx), side};
}

// ---------------------------------------------------------------------------
// Closed-form classification
// ---------------------------------------------------------------------------

std::string FamilyTag::text() const {
  switch (kind) {
    case FamilyKind::F1: return "F1(k=" + std::to_string(k) + ")";
    case FamilyKind::F2: return "F2(k=" + std::to_string(k) + ")";
    case FamilyKind::S30a: return "S30a";
    case FamilyKind::S30b: return "S30b";
    case FamilyKind::S30c: return "S30c";
    case FamilyKind::S42: return "S42";
  }
  return "?";
}

std::vector<ExceptionalTriple> exceptional_triples(int n) {
  std::vector<ExceptionalTriple> out;
  if (n % 6 == 0 && n / 6 >= 2) {
    const int k = n / 6;
    out.push_back({FamilyKind::F1, k, 3 * k - 1, 2 * k, 3 * k - 2});
  }
  if (n % 12 == 6 && (n - 6) / 12 >= 1) {
    const int k = (n - 6) / 12;
    out.push_back({FamilyKind::F2, k, 4 * k + 2, 3 * k + 1, 3 * k + 2});
  }
  if (n == 30) {
    out.push_back({FamilyKind::S30a, 0, 7, 4, 6});
    out.push_back({FamilyKind::S30b, 0, 11, 6, 10});
    out.push_back({FamilyKind::S30c, 0, 13, 8, 12});
  }
  if (n == 42) out.push_back({FamilyKind::S42, 0, 13, 6, 12});
  return out;
}

std::optional<FamilyTag> is_exceptional(const KParams& params) {
  const KParams p = config::validate_params(params.n, params.l, params.m);
  for (const auto& t : exceptional_triples(p.n)) {
    const std::array<std::pair<PairRole, std::pair<int, int>>, 3> pairs{{
        {PairRole::L1L2, {t.l1, t.l2}},
        {PairRole::L1R, {t.l1, t.r}},
        {PairRole::L2R, {t.l2, t.r}},
    }};
    for (const auto& [role, pr] : pairs) {
      if (pr.first == pr.second) continue;
      if (std::min(pr.first, pr.second) == p.l && std::max(pr.first, pr.second) == p.m) {
        return FamilyTag{t.kind, t.k, role};
      }
    }
  }
  return std::nullopt;
}

std::optional<int> astral_obstruction(const KParams& params) {
  const KParams p = config::validate_params(params.n, params.l, params.m);
  for (const auto& t : concurrent_triples(p.n)) {
    std::vector<int> classes{t.r, t.l1, t.l2};
    auto take = [&classes](int v) {
      auto it = std::find(classes.begin(), classes.end(), v);
      if (it == classes.end()) return false;
      classes.erase(it);
      return true;
    };
    if (take(p.l) && take(p.m)) return classes.front();
  }
  return std::nullopt;
}

std::vector<KParams> all_params(int n_max) {
  std::vector<KParams> out;
  for (int n = 7; n <= n_max; ++n) {
    const int hi = (n - 1) / 2;
    for (int l = 2; l <= hi; ++l) {
      for (int m = l + 1; m <= hi; ++m) out.push_back({n, l, m});
    }
  }
  return out;
}

CrossValidation cross_validate(int n_max, const geom::TolerancePolicy& tol, unsigned threads) {
  if (n_max < 7) throw Error(Errc::BadN, "cross_validate needs n_max >= 7");
  const auto params = all_params(n_max);
  std::vector<CrossCase> results(params.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      const auto cfg = config::build(params[i], tol);
      const auto rep = scan(cfg);
      results[i] = CrossCase{params[i], rep.verdict, is_exceptional(params[i]), rep.min_margin};
    }
  };
  const unsigned count = std::max(1u, threads);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  CrossValidation out;
  out.cases = static_cast<int>(results.size());
  out.min_clean_margin = std::numeric_limits<double>::infinity();
  for (const auto& c : results) {
    if (c.verdict == Verdict::Ambiguous) {
      out.ambiguous.push_back(c);
      continue;
    }
    const bool scan_says = c.verdict == Verdict::ExtraIncidences;
    if (scan_says || c.tag) out.exceptional.push_back(c);
    if (scan_says != c.tag.has_value()) out.disagreements.push_back(c);
    if (c.verdict == Verdict::Clean) out.min_clean_margin = std::min(out.min_clean_margin, c.min_margin);
  }
  return out;
}

}  // namespace karteszi::analyze
