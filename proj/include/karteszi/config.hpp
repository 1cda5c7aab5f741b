#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "karteszi/geom.hpp"
#include "karteszi/ngon.hpp"

namespace karteszi::config {

using geom::Line;
using geom::Point;
using geom::TolerancePolicy;

/// K(n; l, m) parameters, stored with 2 ≤ l < m ≤ ⌊(n−1)/2⌋.
struct KParams {
  int n = 0;
  int l = 0;
  int m = 0;

  friend bool operator==(const KParams&, const KParams&) = default;
  friend auto operator<=>(const KParams&, const KParams&) = default;
};

KParams validate_params(int n, int l, int m);

/// Point orbits: vertices of A_1, of the l-th n-gon, of the m-th n-gon.
enum class PointOrbit { P1, PL, PM };
/// Line orbits: l-th diagonals, m-th diagonals, common lines.
enum class LineOrbit { LL, LM, LC };

std::string_view orbit_tag(PointOrbit o);
std::string_view orbit_tag(LineOrbit o);
PointOrbit point_orbit_from_tag(std::string_view tag);
LineOrbit line_orbit_from_tag(std::string_view tag);

struct ConfigPoint {
  int id;
  PointOrbit orbit;
  int index;
  Point pos;
  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

struct ConfigLine {
  int id;
  LineOrbit orbit;
  int index;
  Line line;
  friend bool operator==(const ConfigLine&, const ConfigLine&) = default;
};

/// (point id, line id)
using Flag = std::pair<int, int>;

enum class Verdict { Clean, ExtraIncidences, Ambiguous };
std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

/// Result of an exhaustive point/line sweep.
struct Sweep {
  std::vector<Flag> incidence;  // sorted
  double min_margin;            // smallest |distance| among non-incident pairs
  int ambiguous_pairs;          // non-incident pairs within sep_factor·eps_inc
};

Sweep sweep(const std::vector<ConfigPoint>& points, const std::vector<ConfigLine>& lines,
            const TolerancePolicy& tol);

/// The 12n flags the construction guarantees, sorted.
std::vector<Flag> designated_incidence(const KParams& p);

struct Diagnostics {
  Verdict verdict = Verdict::Clean;
  std::vector<Flag> extras;   // recorded flags outside the designated structure, sorted
  std::vector<Flag> missing;  // designated flags the scan did not confirm, sorted
  double min_margin = 0.0;
  int max_line_degree = 0;
  int max_point_degree = 0;
  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Compares a sweep against the designated structure and assigns the verdict:
/// ambiguous if any non-incident pair sits within sep_factor·eps_inc or a
/// designated flag is missing, otherwise extra_incidences iff extras exist.
Diagnostics diagnose(const KParams& p, const Sweep& s);

struct KConfig {
  KParams params;
  std::vector<ConfigPoint> points;  // ids 0..3n−1, orbit-major
  std::vector<ConfigLine> lines;    // ids 0..3n−1, orbit-major
  std::vector<Flag> incidence;      // sorted (point id, line id)
  TolerancePolicy tolerance;
  Diagnostics flags;

  int n() const noexcept { return params.n; }
  bool has_extra_incidences() const noexcept { return !flags.extras.empty(); }
  std::vector<int> line_degrees() const;
  std::vector<int> point_degrees() const;
};

/// Builds K(n; l, m) and records incidences by a full point/line scan.
/// Exceptional parameters build fine; the diagnostics say what went wrong.
KConfig build(const KParams& params, const TolerancePolicy& tol = {});

/// m#(p1,q1;...;pd,qd) with multisets P, Q and t = (ΣP − ΣQ)/2.
struct CelestialSymbol {
  int n;
  std::vector<std::pair<int, int>> pairs;
  int t;
  std::vector<int> P;  // sorted
  std::vector<int> Q;  // sorted

  bool is_trivial() const { return P == Q; }
  std::string text() const;
};

CelestialSymbol celestial_symbol(const KParams& params);

struct Connectivity {
  bool connected;
  int gcd;  // gcd(P, Q, n)
};

Connectivity connectivity(const KConfig& config);

}  // namespace karteszi::config
