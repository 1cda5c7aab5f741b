#pragma once

#include <vector>

#include "karteszi/geom.hpp"

namespace karteszi::ngon {

using geom::Angle;
using geom::Line;
using geom::Point;
using geom::Similarity;

/// Convex regular n-gon. Vertex j sits at angle phase + 2πj/n.
class RegularNGon {
 public:
  explicit RegularNGon(int n, double circumradius = 1.0, Angle phase = {}, Point center = {});

  int n() const noexcept { return n_; }
  double circumradius() const noexcept { return circumradius_; }
  const Angle& phase() const noexcept { return phase_; }
  Point center() const noexcept { return center_; }

  /// Largest legal diagonal class, ⌊(n−1)/2⌋.
  int max_class() const noexcept { return (n_ - 1) / 2; }
  /// Reduces an arbitrary index into [0, n).
  int wrap(long long j) const noexcept;
  /// Chord class of the index difference j (min(j mod n, n − j mod n)).
  int chord_class(long long j) const noexcept;

 private:
  int n_;
  double circumradius_;
  Angle phase_;
  Point center_;
};

/// Chord A_j A_{j+k}.
struct DiagonalRef {
  int j = 0;
  int k = 1;
};

/// The n-gon cut out by consecutive class-k diagonals: vertex j is
/// A_{j−1}A_{j−1+k} ∩ A_jA_{j+k}.
struct DerivedNGon {
  RegularNGon parent;
  int k;
  std::vector<Point> vertices;

  /// Expected circumradius: R·cos(kπ/n)/cos(π/n).
  double expected_radius() const;
};

/// Throws ClassOutOfRange unless 1 ≤ k ≤ ⌊(n−1)/2⌋.
void check_class(const RegularNGon& g, int k);

Point vertex(const RegularNGon& g, long long j);
Line diagonal(const RegularNGon& g, DiagonalRef d);

/// Rotational similarity about the center: angle (k−1)π/n, ratio cos(kπ/n)/cos(π/n).
/// Maps vertex j of g onto vertex j of the k-th derived n-gon.
Similarity phi(const RegularNGon& g, int k);

DerivedNGon kth_ngon(const RegularNGon& g, int k);

/// φ_k sends the midpoint of A_0A_1 to the midpoint of A_0A_k (within 1e−10).
bool midpoint_map_check(const RegularNGon& g, int k);

/// φ_m(φ_ℓ(A_jA_{j+1})), the line carrying both D_jD_{j+m} of the ℓ-th n-gon
/// and B_jB_{j+ℓ} of the m-th n-gon.
Line common_line(const RegularNGon& g, int l, int m, long long j);

}  // namespace karteszi::ngon
