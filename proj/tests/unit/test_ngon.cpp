#include <cmath>
#include <numbers>

#include "doctest.h"
#include "karteszi/error.hpp"
#include "karteszi/ngon.hpp"
#include "oracle.hpp"

using namespace karteszi;
using namespace karteszi::ngon;
using geom::distance;

TEST_SUITE("ngon") {

TEST_CASE("vertex coordinates") {
  const RegularNGon sq(4);
  CHECK(vertex(sq, 0).x == doctest::Approx(1.0));
  CHECK(std::abs(vertex(sq, 0).y) < 1e-15);
  CHECK(std::abs(vertex(sq, 1).x) < 1e-15);
  CHECK(vertex(sq, 1).y == doctest::Approx(1.0));
  const RegularNGon hex(6);
  CHECK(vertex(hex, 3).x == doctest::Approx(-1.0));
  CHECK(std::abs(vertex(hex, 3).y) < 1e-15);
  CHECK(distance(vertex(hex, -1), vertex(hex, 5)) == 0.0);
  CHECK(distance(vertex(hex, 13), vertex(hex, 1)) == 0.0);
}

TEST_CASE("diagonal class range") {
  const RegularNGon hex(6);
  CHECK_THROWS_AS(diagonal(hex, {0, 3}), Error);
  try {
    diagonal(hex, {0, 3});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ClassOutOfRange);
  }
  const auto d = diagonal(RegularNGon(4), {0, 1});
  CHECK(geom::incident({1, 0}, d));
  CHECK(geom::incident({0, 1}, d));

  const RegularNGon pent(5);
  const auto d5 = diagonal(pent, {0, 2});
  CHECK(std::abs(d5.signed_distance(vertex(pent, 0))) < 1e-12);
  CHECK(std::abs(d5.signed_distance(vertex(pent, 2))) < 1e-12);
}

TEST_CASE("phi parameters") {
  SUBCASE("k = 1 is the identity") {
    for (int n : {5, 7, 12}) {
      const auto s = phi(RegularNGon(n), 1);
      CHECK(s.angle() == 0.0);
      CHECK(s.ratio() == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("pentagon, k = 2") {
    const auto s = phi(RegularNGon(5), 2);
    CHECK(s.angle() == doctest::Approx(std::numbers::pi / 5).epsilon(1e-15));
    CHECK(s.ratio() == doctest::Approx(0.3819660112501051).epsilon(1e-13));
  }
  SUBCASE("heptagon, k = 2") {
    const auto s = phi(RegularNGon(7), 2);
    CHECK(s.angle() == doctest::Approx(0.4487989505128276).epsilon(1e-13));
    CHECK(s.ratio() == doctest::Approx(0.6920214716300959).epsilon(1e-13));
  }
  CHECK_THROWS_AS(phi(RegularNGon(8), 4), Error);
}

TEST_CASE("kth_ngon") {
  SUBCASE("k = 1 reproduces the polygon") {
    const RegularNGon g(9);
    const auto d = kth_ngon(g, 1);
    for (int j = 0; j < 9; ++j) CHECK(distance(d.vertices[j], vertex(g, j)) < 1e-15);
  }
  SUBCASE("pentagram core") {
    const RegularNGon g(5);
    const auto d = kth_ngon(g, 2);
    for (int j = 0; j < 5; ++j) {
      CHECK(geom::norm(d.vertices[j]) == doctest::Approx(0.3819660112501051).epsilon(1e-12));
      // Rotated by π/5 relative to A_j.
      const double ang = std::atan2(d.vertices[j].y, d.vertices[j].x);
      const double want = std::remainder(2 * std::numbers::pi * j / 5 + std::numbers::pi / 5, 2 * std::numbers::pi);
      CHECK(std::remainder(ang - want, 2 * std::numbers::pi) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("13-gon, k = 3") {
    const auto d = kth_ngon(RegularNGon(13), 3);
    CHECK(d.vertices.size() == 13);
    CHECK(d.expected_radius() == doctest::Approx(0.7709120513064198).epsilon(1e-13));
    for (const auto& v : d.vertices) CHECK(geom::norm(v) == doctest::Approx(0.7709120513064198).epsilon(1e-12));
  }
  SUBCASE("vertices agree with an independent Cramer intersection") {
    for (int n : {7, 11, 30}) {
      const RegularNGon g(n);
      for (int k = 2; k <= g.max_class(); ++k) {
        const auto d = kth_ngon(g, k);
        for (int j = 0; j < n; ++j) {
          using oracle::unit_vertex;
          const auto o = oracle::cross(unit_vertex(n, j - 1), unit_vertex(n, j - 1 + k), unit_vertex(n, j),
                                       unit_vertex(n, j + k));
          CHECK(std::hypot(o.x - d.vertices[j].x, o.y - d.vertices[j].y) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("midpoint map") {
  CHECK(midpoint_map_check(RegularNGon(7), 2));
  CHECK(midpoint_map_check(RegularNGon(13), 5));
  CHECK(midpoint_map_check(RegularNGon(10), 1));
}

TEST_CASE("common line") {
  SUBCASE("heptagon (2, 3)") {
    const RegularNGon g(7);
    const auto dl = kth_ngon(g, 2), dm = kth_ngon(g, 3);
    const auto line = common_line(g, 2, 3, 0);
    CHECK(geom::line_discrepancy(line, geom::line_through(dm.vertices[0], dm.vertices[2])) < 1e-10);
    CHECK(geom::line_discrepancy(line, geom::line_through(dl.vertices[0], dl.vertices[3])) < 1e-10);
  }
  SUBCASE("13-gon (3, 5), every index") {
    const RegularNGon g(13);
    const auto dl = kth_ngon(g, 3), dm = kth_ngon(g, 5);
    for (int j = 0; j < 13; ++j) {
      const auto line = common_line(g, 3, 5, j);
      CHECK(geom::line_discrepancy(line, geom::line_through(dl.vertices[j], dl.vertices[(j + 5) % 13])) < 1e-10);
      CHECK(geom::line_discrepancy(line, geom::line_through(dm.vertices[j], dm.vertices[(j + 3) % 13])) < 1e-10);
    }
  }
  SUBCASE("l = 1 gives the m-th diagonal") {
    const RegularNGon g(11);
    for (int j = 0; j < 11; ++j) {
      CHECK(geom::line_discrepancy(common_line(g, 1, 4, j), diagonal(g, {j, 4})) < 1e-12);
    }
  }
}

TEST_CASE("property: derived polygons are concyclic and match the similarity image") {
  for (int n = 5; n <= 100; ++n) {
    const RegularNGon g(n);
    for (int k = 1; k <= g.max_class(); ++k) {
      const auto d = kth_ngon(g, k);
      const auto s = phi(g, k);
      double worst = 0.0, mean = 0.0, sq = 0.0;
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, distance(geom::apply(s, vertex(g, j)), d.vertices[j]));
        mean += geom::norm(d.vertices[j]);
      }
      mean /= n;
      for (const auto& v : d.vertices) sq += (geom::norm(v) - mean) * (geom::norm(v) - mean);
      const double sd = std::sqrt(sq / n);
      CHECK(worst < 1e-10);
      CHECK(sd < 1e-11);
      CHECK(mean == doctest::Approx(d.expected_radius()).epsilon(1e-10));
    }
  }
}

TEST_CASE("property: common line commutation φ_m∘φ_l = φ_l∘φ_m") {
  for (int n = 5; n <= 100; n += 7) {
    const RegularNGon g(n);
    for (int l = 1; l <= g.max_class(); ++l) {
      for (int m = l + 1; m <= g.max_class(); ++m) {
        CHECK(geom::line_discrepancy(common_line(g, l, m, 0), common_line(g, m, l, 0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("property: rotational covariance") {
  for (int n : {7, 12, 19}) {
    const geom::Angle theta(3, 17);
    const RegularNGon rotated(n, 1.0, theta);
    const RegularNGon plain(n);
    const geom::Similarity back({0, 0}, -theta.radians(), 1.0);
    for (int k = 1; k <= plain.max_class(); ++k) {
      const auto a = kth_ngon(rotated, k), b = kth_ngon(plain, k);
      for (int j = 0; j < n; ++j) CHECK(distance(geom::apply(back, a.vertices[j]), b.vertices[j]) < 1e-12);
    }
  }
}

TEST_CASE("scaled and shifted polygon") {
  const RegularNGon g(9, 2.5, geom::Angle(1, 9), {3.0, -1.0});
  CHECK(midpoint_map_check(g, 4));
  const auto d = kth_ngon(g, 4);
  for (const auto& v : d.vertices) {
    CHECK(distance(v, g.center()) == doctest::Approx(d.expected_radius()).epsilon(1e-12));
  }
}

}  // TEST_SUITE
