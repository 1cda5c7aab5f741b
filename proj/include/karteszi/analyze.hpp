#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "karteszi/config.hpp"
#include "karteszi/geom.hpp"

namespace karteszi::analyze {

using config::KConfig;
using config::KParams;
using config::Verdict;
using geom::Fraction;
using geom::Point;

struct IncidenceReport {
  std::vector<int> line_degrees;
  std::vector<int> point_degrees;
  std::vector<config::Flag> extras;  // sorted (point id, line id)
  double min_margin;
  Verdict verdict;

  /// Ids of lines carrying more than four points.
  std::vector<int> overfull_lines() const;
};

/// Full point/line sweep of a built configuration, independent of its stored incidence.
IncidenceReport scan(const KConfig& config);

/// Six arcs, as fractions of the full turn, cut by vertices A..F in order
/// (X = AB, V = BC, Y = CD, W = DE, Z = EF, U = FA).
struct PRArcs {
  Fraction U, V, W, X, Y, Z;
};

struct PREvaluation {
  double lhs;  // sin πU · sin πV · sin πW
  double rhs;  // sin πX · sin πY · sin πZ
  bool equal;  // |lhs − rhs| ≤ 1e−12
};

/// Diagonals AD, BE, CF are concurrent iff lhs == rhs.
/// Throws NonPositiveArc / ArcSumMismatch on malformed arcs.
PREvaluation pr_equation(const PRArcs& arcs);

/// The four one-parameter solution families ({U,V,W}, {X,Y,Z}), rows 1..4.
PRArcs pr_family(int row, const Fraction& t);
/// Open upper bound on t for a family row (1/6 or 1/12).
Fraction pr_family_bound(int row);

struct ConcurrencyTriple {
  int r;   // class of the crossing diagonal
  int l1;  // smaller class of the two consecutive diagonals' partners
  int l2;
  int witness_class;  // class k of the derived n-gon whose vertex witnesses the triple
  int witness_index;  // i with B_i = A_iA_{i+k} ∩ A_{i+1}A_{i+1+k} lying on A_0A_r
  Point witness;

  friend bool operator==(const ConcurrencyTriple& a, const ConcurrencyTriple& b) {
    return a.r == b.r && a.l1 == b.l1 && a.l2 == b.l2;
  }
};

/// Brute force: every vertex of every derived n-gon against every diagonal of A_1.
/// One record per (r, l1, l2), sorted by r then l1 then l2.
std::vector<ConcurrencyTriple> concurrent_triples(int n, const geom::TolerancePolicy& tol = {});

/// Vertex B_i of the class-k derived n-gon, indexed as A_iA_{i+k} ∩ A_{i+1}A_{i+1+k}.
Point derived_vertex(int n, int k, int i);

struct SecondVertex {
  int index;           // r − i − k − 1 mod n
  int partner_class;   // chord class of B_i B_index inside the k-th n-gon
  bool side_conditions;  // r < n/2, r/2 < i and 2i − r + k + 1 < n/2 all hold
};

/// Reflection of B_i in the perpendicular bisector of A_0A_r.
/// Throws MidpointCase if the reflection fixes B_i, NotIncident if B_i is off A_0A_r.
SecondVertex second_vertex(int n, int r, int k, int i, const geom::TolerancePolicy& tol = {});

enum class FamilyKind { F1, F2, S30a, S30b, S30c, S42 };
enum class PairRole { L1L2, L1R, L2R };

struct FamilyTag {
  FamilyKind kind;
  int k;  // family parameter for F1/F2, 0 for sporadic rows
  PairRole role;

  std::string text() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// One row of the exceptional-triple table instantiated at n.
struct ExceptionalTriple {
  FamilyKind kind;
  int k;
  int r, l1, l2;
};

/// Closed-form exceptional triples at n (no geometry involved).
std::vector<ExceptionalTriple> exceptional_triples(int n);

/// Closed-form verdict: which exceptional family K(n; l, m) falls into, if any.
std::optional<FamilyTag> is_exceptional(const KParams& params);

/// Third class x of a concurrent triple containing both l and m, if one exists.
std::optional<int> astral_obstruction(const KParams& params);

struct CrossCase {
  KParams params;
  Verdict verdict;
  std::optional<FamilyTag> tag;
  double min_margin;
};

struct CrossValidation {
  int cases = 0;
  std::vector<CrossCase> exceptional;   // scan or classifier says exceptional
  std::vector<CrossCase> disagreements;
  std::vector<CrossCase> ambiguous;
  double min_clean_margin;

  bool ok() const { return disagreements.empty() && ambiguous.empty(); }
};

/// Geometric scan vs closed-form classifier for every valid (n, l, m), 7 ≤ n ≤ n_max.
/// Cases are farmed out to `threads` workers; the report is in (n, l, m) order.
CrossValidation cross_validate(int n_max, const geom::TolerancePolicy& tol = {}, unsigned threads = 1);

/// All valid parameter triples with 7 ≤ n ≤ n_max in lexicographic order.
std::vector<KParams> all_params(int n_max);

}  // namespace karteszi::analyze
