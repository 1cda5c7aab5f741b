#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "karteszi/config.hpp"

namespace karteszi::combin {

/// Points 0..num_points−1, lines 0..num_lines−1, flags sorted and unique.
struct IncidenceStructure {
  int num_points = 0;
  int num_lines = 0;
  std::vector<std::pair<int, int>> flags;

  static IncidenceStructure make(int num_points, int num_lines,
                                 std::vector<std::pair<int, int>> flags);
  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

/// Forgets coordinates. Throws RefuseAmbiguous for ambiguous scans.
IncidenceStructure from_geometry(const config::KConfig& config);

/// Point/line transpose.
IncidenceStructure dual(const IncidenceStructure& s);

/// Every point and every line has degree k and two points share at most one line.
bool is_configuration(const IncidenceStructure& s, int k);

/// Bipartite incidence graph: vertices 0..P−1 are points, P..P+L−1 are lines.
class LeviGraph {
 public:
  explicit LeviGraph(const IncidenceStructure& s);

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
  int num_edges() const noexcept { return edges_; }
  int num_points() const noexcept { return points_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// Common degree of all vertices, if the graph is regular.
  std::optional<int> regular_degree() const;
  bool is_bipartite() const;
  /// Length of a shortest cycle; nullopt for forests.
  std::optional<int> girth() const;

 private:
  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
  int points_ = 0;
};

LeviGraph levi(const IncidenceStructure& s);
bool connected(const LeviGraph& g);

inline constexpr std::uint8_t kCertificateVersion = 1;

/// Certificate layout: version byte, u32le num_points, u32le num_lines, u32le flag
/// count, then the relabeled flags as (u32le point, u32le line) in lexicographic order.
struct CanonicalForm {
  std::vector<std::uint8_t> certificate;
  std::vector<int> point_label;  // original point -> canonical point
  std::vector<int> line_label;   // original line -> canonical line
};

std::vector<std::uint8_t> serialize_certificate(const IncidenceStructure& s);
IncidenceStructure relabel(const IncidenceStructure& s, const std::vector<int>& point_map,
                           const std::vector<int>& line_map);

CanonicalForm canonical_form(const IncidenceStructure& s);

struct Isomorphism {
  std::vector<int> point_map;  // s1 point -> s2 point
  std::vector<int> line_map;   // s1 line -> s2 line
};

/// Checks that the maps are bijections carrying the flags of s1 onto those of s2.
bool verify_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2,
                        const Isomorphism& iso);

/// Explicit flag-preserving bijection (points to points, lines to lines), verified.
std::optional<Isomorphism> are_isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2);

}  // namespace karteszi::combin
