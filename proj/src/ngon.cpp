#include "karteszi/ngon.hpp"

#include <cmath>
#include <string>

#include "karteszi/error.hpp"

namespace karteszi::ngon {

RegularNGon::RegularNGon(int n, double circumradius, Angle phase, Point center)
    : n_(n), circumradius_(circumradius), phase_(phase), center_(center) {
  if (n < 3) throw Error(Errc::BadN, "a regular n-gon needs n >= 3, got " + std::to_string(n));
  if (!(circumradius > 0.0)) throw std::invalid_argument("circumradius must be positive");
}

int RegularNGon::wrap(long long j) const noexcept {
  long long r = j % n_;
  if (r < 0) r += n_;
  return static_cast<int>(r);
}

int RegularNGon::chord_class(long long j) const noexcept {
  const int r = wrap(j);
  return r <= n_ - r ? r : n_ - r;
}

double DerivedNGon::expected_radius() const {
  const int n = parent.n();
  return parent.circumradius() * std::cos(Angle(k, n).radians()) / std::cos(Angle(1, n).radians());
}

void check_class(const RegularNGon& g, int k) {
  if (k < 1 || k > g.max_class()) {
    throw Error(Errc::ClassOutOfRange, "class " + std::to_string(k) + " outside [1, " +
                                           std::to_string(g.max_class()) + "] for n = " +
                                           std::to_string(g.n()));
  }
}

Point vertex(const RegularNGon& g, long long j) {
  const double t = (g.phase() + Angle(2 * g.wrap(j), g.n())).radians();
  const double r = g.circumradius();
  return g.center() + Point{r * std::cos(t), r * std::sin(t)};
}

Line diagonal(const RegularNGon& g, DiagonalRef d) {
  check_class(g, d.k);
  return geom::line_through(vertex(g, d.j), vertex(g, static_cast<long long>(d.j) + d.k));
}

Similarity phi(const RegularNGon& g, int k) {
  check_class(g, k);
  const int n = g.n();
  const double ratio = std::cos(Angle(k, n).radians()) / std::cos(Angle(1, n).radians());
  return Similarity(g.center(), Angle(k - 1, n).radians(), ratio);
}

DerivedNGon kth_ngon(const RegularNGon& g, int k) {
  check_class(g, k);
  DerivedNGon out{g, k, {}};
  out.vertices.reserve(static_cast<std::size_t>(g.n()));
  if (k == 1) {
    for (int j = 0; j < g.n(); ++j) out.vertices.push_back(vertex(g, j));
    return out;
  }
  for (int j = 0; j < g.n(); ++j) {
    out.vertices.push_back(geom::intersect(diagonal(g, {j - 1, k}), diagonal(g, {j, k})));
  }
  return out;
}

bool midpoint_map_check(const RegularNGon& g, int k) {
  const Point f = geom::midpoint(vertex(g, 0), vertex(g, 1));
  const Point want = geom::midpoint(vertex(g, 0), vertex(g, k));
  return geom::distance(geom::apply(phi(g, k), f), want) < 1e-10;
}

Line common_line(const RegularNGon& g, int l, int m, long long j) {
  const Similarity s_l = phi(g, l);
  const Similarity s_m = phi(g, m);
  const Point p = geom::apply(s_m, geom::apply(s_l, vertex(g, j)));
  const Point q = geom::apply(s_m, geom::apply(s_l, vertex(g, j + 1)));
  return geom::line_through(p, q);
}

}  // namespace karteszi::ngon
