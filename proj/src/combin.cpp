#include "karteszi/combin.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "karteszi/error.hpp"

namespace karteszi::combin {

IncidenceStructure IncidenceStructure::make(int num_points, int num_lines,
                                            std::vector<std::pair<int, int>> flags) {
  if (num_points < 0 || num_lines < 0) throw std::invalid_argument("negative structure size");
  for (const auto& [p, l] : flags) {
    if (p < 0 || p >= num_points || l < 0 || l >= num_lines) {
      throw std::invalid_argument("flag (" + std::to_string(p) + ", " + std::to_string(l) +
                                  ") out of range");
    }
  }
  std::sort(flags.begin(), flags.end());
  flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
  return IncidenceStructure{num_points, num_lines, std::move(flags)};
}

IncidenceStructure from_geometry(const config::KConfig& config) {
  if (config.flags.verdict == config::Verdict::Ambiguous) {
    throw Error(Errc::RefuseAmbiguous, "incidence scan was ambiguous at the configured tolerance");
  }
  return IncidenceStructure::make(static_cast<int>(config.points.size()),
                                  static_cast<int>(config.lines.size()), config.incidence);
}

IncidenceStructure dual(const IncidenceStructure& s) {
  std::vector<std::pair<int, int>> flags;
  flags.reserve(s.flags.size());
  for (const auto& [p, l] : s.flags) flags.emplace_back(l, p);
  return IncidenceStructure::make(s.num_lines, s.num_points, std::move(flags));
}

bool is_configuration(const IncidenceStructure& s, int k) {
  std::vector<int> pdeg(static_cast<std::size_t>(s.num_points), 0);
  std::vector<std::vector<int>> on_line(static_cast<std::size_t>(s.num_lines));
  for (const auto& [p, l] : s.flags) {
    ++pdeg[static_cast<std::size_t>(p)];
    on_line[static_cast<std::size_t>(l)].push_back(p);
  }
  if (std::any_of(pdeg.begin(), pdeg.end(), [k](int d) { return d != k; })) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& pts : on_line) {
    if (static_cast<int>(pts.size()) != k) return false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (!seen.emplace(std::min(pts[i], pts[j]), std::max(pts[i], pts[j])).second) return false;
      }
    }
  }
  return true;
}

LeviGraph::LeviGraph(const IncidenceStructure& s)
    : adj_(static_cast<std::size_t>(s.num_points + s.num_lines)),
      edges_(static_cast<int>(s.flags.size())),
      points_(s.num_points) {
  for (const auto& [p, l] : s.flags) {
    adj_[static_cast<std::size_t>(p)].push_back(s.num_points + l);
    adj_[static_cast<std::size_t>(s.num_points + l)].push_back(p);
  }
}

std::optional<int> LeviGraph::regular_degree() const {
  if (adj_.empty()) return 0;
  const int d = degree(0);
  for (int v = 1; v < num_vertices(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool LeviGraph::is_bipartite() const {
  std::vector<int> side(adj_.size(), -1);
  for (int s = 0; s < num_vertices(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> LeviGraph::girth() const {
  int best = -1;
  const auto nv = adj_.size();
  for (int s = 0; s < num_vertices(); ++s) {
    std::vector<int> dist(nv, -1), parent(nv, -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : neighbors(v)) {
        const auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
          parent[wi] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          const int cycle = dist[static_cast<std::size_t>(v)] + dist[wi] + 1;
          if (best < 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

LeviGraph levi(const IncidenceStructure& s) { return LeviGraph(s); }

bool connected(const LeviGraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == g.num_vertices();
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::vector<std::uint8_t> certificate_bytes(int num_points, int num_lines,
                                            const std::vector<std::pair<int, int>>& sorted_flags) {
  std::vector<std::uint8_t> out;
  out.reserve(13 + 8 * sorted_flags.size());
  out.push_back(kCertificateVersion);
  put_u32(out, static_cast<std::uint32_t>(num_points));
  put_u32(out, static_cast<std::uint32_t>(num_lines));
  put_u32(out, static_cast<std::uint32_t>(sorted_flags.size()));
  for (const auto& [p, l] : sorted_flags) {
    put_u32(out, static_cast<std::uint32_t>(p));
    put_u32(out, static_cast<std::uint32_t>(l));
  }
  return out;
}

// Individualization-refinement search for the lexicographically least relabeled
// flag list. Colors are ranks; a discrete coloring is a labeling.
class Canonizer {
 public:
  explicit Canonizer(const IncidenceStructure& s) : s_(s), g_(s) {
    nv_ = g_.num_vertices();
    sig_offset_.resize(static_cast<std::size_t>(nv_) + 1, 0);
    for (int v = 0; v < nv_; ++v) {
      sig_offset_[static_cast<std::size_t>(v) + 1] = sig_offset_[static_cast<std::size_t>(v)] + g_.degree(v);
    }
  }

  void run() {
    std::vector<int> colors(static_cast<std::size_t>(nv_));
    // Seed with (side, degree); points precede lines.
    std::vector<std::pair<int, int>> key(static_cast<std::size_t>(nv_));
    for (int v = 0; v < nv_; ++v) key[static_cast<std::size_t>(v)] = {v < s_.num_points ? 0 : 1, g_.degree(v)};
    rank_by(colors, [&](int a, int b) { return key[a] < key[b]; }, [&](int a, int b) { return key[a] == key[b]; });
    refine(colors);
    std::vector<int> path;
    search(colors, path);
  }

  std::vector<std::pair<int, int>> best_flags;
  std::vector<int> best_labeling;

 private:
  template <class Less, class Equal>
  int rank_by(std::vector<int>& colors, Less less, Equal equal) {
    std::vector<int> order(static_cast<std::size_t>(nv_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), less);
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && !equal(order[i - 1], order[i])) rank = static_cast<int>(i);
      colors[static_cast<std::size_t>(order[i])] = rank;
    }
    // Ranks are "number of vertices strictly smaller", so the cell count is
    // the number of distinct values.
    int cells = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || !equal(order[i - 1], order[i])) ++cells;
    }
    return cells;
  }

  static int count_cells(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void refine(std::vector<int>& colors) {
    int cells = count_cells(colors);
    std::vector<int> sig(static_cast<std::size_t>(sig_offset_.back()));
    while (true) {
      for (int v = 0; v < nv_; ++v) {
        auto* begin = sig.data() + sig_offset_[static_cast<std::size_t>(v)];
        std::size_t i = 0;
        for (int w : g_.neighbors(v)) begin[i++] = colors[static_cast<std::size_t>(w)];
        std::sort(begin, begin + i);
      }
      const std::vector<int> old = colors;
      auto sig_less = [&](int a, int b) {
        if (old[a] != old[b]) return old[a] < old[b];
        return std::lexicographical_compare(
            sig.begin() + sig_offset_[a], sig.begin() + sig_offset_[a + 1],
            sig.begin() + sig_offset_[b], sig.begin() + sig_offset_[b + 1]);
      };
      auto sig_equal = [&](int a, int b) {
        return old[a] == old[b] &&
               std::equal(sig.begin() + sig_offset_[a], sig.begin() + sig_offset_[a + 1],
                          sig.begin() + sig_offset_[b], sig.begin() + sig_offset_[b + 1]);
      };
      const int next = rank_by(colors, sig_less, sig_equal);
      if (next == cells) return;
      cells = next;
    }
  }

  std::vector<int> orbits_fixing(const std::vector<int>& path) const {
    std::vector<int> parent(static_cast<std::size_t>(nv_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < nv_; ++v) {
        const int a = find(v);
        const int b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < nv_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<std::pair<int, int>> flags;
    flags.reserve(s_.flags.size());
    const int np = s_.num_points;
    for (const auto& [p, l] : s_.flags) {
      flags.emplace_back(colors[static_cast<std::size_t>(p)], colors[static_cast<std::size_t>(np + l)] - np);
    }
    std::sort(flags.begin(), flags.end());
    if (best_labeling.empty() || flags < best_flags) {
      best_flags = std::move(flags);
      best_labeling = colors;
      return;
    }
    if (flags == best_flags) {
      // Same certificate: best⁻¹ ∘ this is an automorphism.
      std::vector<int> inverse(static_cast<std::size_t>(nv_));
      for (int v = 0; v < nv_; ++v) inverse[static_cast<std::size_t>(best_labeling[static_cast<std::size_t>(v)])] = v;
      std::vector<int> gamma(static_cast<std::size_t>(nv_));
      for (int v = 0; v < nv_; ++v) gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  void search(const std::vector<int>& colors, std::vector<int>& path) {
    // First smallest non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(nv_), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < nv_; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) {
        target = c;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < nv_; ++v) {
      if (colors[static_cast<std::size_t>(v)] == target) cell.push_back(v);
    }
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty()) {
        const auto orbit = orbits_fixing(path);
        const bool covered = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (covered) continue;
      }
      std::vector<int> child = colors;
      // v keeps rank `target`, the rest of its cell moves to target + 1.
      for (int u : cell) {
        if (u != v) child[static_cast<std::size_t>(u)] = target + 1;
      }
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  const IncidenceStructure& s_;
  LeviGraph g_;
  int nv_ = 0;
  std::vector<int> sig_offset_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<std::uint8_t> serialize_certificate(const IncidenceStructure& s) {
  return certificate_bytes(s.num_points, s.num_lines, s.flags);
}

IncidenceStructure relabel(const IncidenceStructure& s, const std::vector<int>& point_map,
                           const std::vector<int>& line_map) {
  std::vector<std::pair<int, int>> flags;
  flags.reserve(s.flags.size());
  for (const auto& [p, l] : s.flags) {
    flags.emplace_back(point_map.at(static_cast<std::size_t>(p)), line_map.at(static_cast<std::size_t>(l)));
  }
  return IncidenceStructure::make(s.num_points, s.num_lines, std::move(flags));
}

CanonicalForm canonical_form(const IncidenceStructure& s) {
  CanonicalForm out;
  if (s.num_points + s.num_lines == 0) {
    out.certificate = certificate_bytes(0, 0, {});
    return out;
  }
  Canonizer c(s);
  c.run();
  out.point_label.assign(c.best_labeling.begin(), c.best_labeling.begin() + s.num_points);
  for (int l = 0; l < s.num_lines; ++l) {
    out.line_label.push_back(c.best_labeling[static_cast<std::size_t>(s.num_points + l)] - s.num_points);
  }
  out.certificate = certificate_bytes(s.num_points, s.num_lines, c.best_flags);
  return out;
}

bool verify_isomorphism(const IncidenceStructure& s1, const IncidenceStructure& s2,
                        const Isomorphism& iso) {
  if (s1.num_points != s2.num_points || s1.num_lines != s2.num_lines) return false;
  auto is_perm = [](const std::vector<int>& m, int size) {
    if (static_cast<int>(m.size()) != size) return false;
    std::vector<char> hit(static_cast<std::size_t>(size), 0);
    for (int v : m) {
      if (v < 0 || v >= size || hit[static_cast<std::size_t>(v)]) return false;
      hit[static_cast<std::size_t>(v)] = 1;
    }
    return true;
  };
  if (!is_perm(iso.point_map, s1.num_points) || !is_perm(iso.line_map, s1.num_lines)) return false;
  return relabel(s1, iso.point_map, iso.line_map).flags == s2.flags;
}

std::optional<Isomorphism> are_isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  if (s1.num_points != s2.num_points || s1.num_lines != s2.num_lines ||
      s1.flags.size() != s2.flags.size()) {
    return std::nullopt;
  }
  const auto c1 = canonical_form(s1);
  const auto c2 = canonical_form(s2);
  if (c1.certificate != c2.certificate) return std::nullopt;
  Isomorphism iso;
  std::vector<int> inv_p(static_cast<std::size_t>(s2.num_points)), inv_l(static_cast<std::size_t>(s2.num_lines));
  for (int p = 0; p < s2.num_points; ++p) inv_p[static_cast<std::size_t>(c2.point_label[static_cast<std::size_t>(p)])] = p;
  for (int l = 0; l < s2.num_lines; ++l) inv_l[static_cast<std::size_t>(c2.line_label[static_cast<std::size_t>(l)])] = l;
  for (int p = 0; p < s1.num_points; ++p) iso.point_map.push_back(inv_p[static_cast<std::size_t>(c1.point_label[static_cast<std::size_t>(p)])]);
  for (int l = 0; l < s1.num_lines; ++l) iso.line_map.push_back(inv_l[static_cast<std::size_t>(c1.line_label[static_cast<std::size_t>(l)])]);
  if (!verify_isomorphism(s1, s2, iso)) return std::nullopt;
  return iso;
}

}  // namespace karteszi::combin
