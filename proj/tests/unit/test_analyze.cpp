#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "doctest.h"
#include "karteszi/analyze.hpp"
#include "karteszi/error.hpp"
#include "oracle.hpp"

using namespace karteszi;
using namespace karteszi::analyze;
using geom::Fraction;

namespace {

std::set<std::array<int, 3>> triple_set(int n) {
  std::set<std::array<int, 3>> out;
  for (const auto& t : concurrent_triples(n)) out.insert({t.r, t.l1, t.l2});
  return out;
}

std::set<std::array<int, 3>> closed_form_set(int n) {
  std::set<std::array<int, 3>> out;
  for (const auto& t : exceptional_triples(n)) out.insert({t.r, t.l1, t.l2});
  return out;
}

std::array<double, 6> ceva_order(const PRArcs& a) {
  return {a.X.value(), a.V.value(), a.Y.value(), a.W.value(), a.Z.value(), a.U.value()};
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::IoError;
}

}  // namespace

TEST_SUITE("analyze") {

TEST_CASE("scan examples") {
  const auto clean = scan(config::build({7, 2, 3}));
  CHECK(clean.verdict == Verdict::Clean);
  CHECK(clean.extras.empty());
  CHECK(clean.overfull_lines().empty());
  for (int d : clean.line_degrees) CHECK(d == 4);
  CHECK(clean.min_margin > 1e-5);

  const auto ex = scan(config::build({12, 4, 5}));
  CHECK(ex.verdict == Verdict::ExtraIncidences);
  const auto over = ex.overfull_lines();
  CHECK(over.size() == 12);
  for (int id : over) {
    CHECK(ex.line_degrees[id] == 6);
    CHECK(id / 12 == 1);  // one orbit
  }

  CHECK(scan(config::build({13, 3, 5})).verdict == Verdict::Clean);
}

TEST_CASE("scan agrees with the stored diagnostics") {
  const auto cfg = config::build({18, 4, 6});
  const auto rep = scan(cfg);
  CHECK(rep.verdict == cfg.flags.verdict);
  CHECK(rep.extras == cfg.flags.extras);
  CHECK(rep.line_degrees == cfg.line_degrees());
}

TEST_CASE("tight tolerance makes a near-miss ambiguous") {
  // A huge separation band swallows genuine non-incidences.
  geom::TolerancePolicy tol{1e-3, 1000.0};
  CHECK(config::build({30, 2, 9}, tol).flags.verdict == Verdict::Ambiguous);
}

TEST_CASE("pr_equation examples") {
  const Fraction a(1, 12), b(1, 6), c(1, 4);
  const std::array<Fraction, 3> uvw{a, b, c};
  std::array<int, 3> perm{0, 1, 2};
  do {
    const PRArcs arcs{a, b, c, uvw[perm[0]], uvw[perm[1]], uvw[perm[2]]};
    CHECK(pr_equation(arcs).equal);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto row1 = pr_family(1, Fraction(1, 30));
  CHECK(row1.U == Fraction(1, 6));
  CHECK(row1.V == Fraction(1, 30));
  CHECK(row1.W == Fraction(4, 15));
  CHECK(row1.X == Fraction(11, 30));
  CHECK(row1.Y == Fraction(1, 30));
  CHECK(row1.Z == Fraction(2, 15));
  CHECK(pr_equation(row1).equal);

  const PRArcs generic{Fraction(1, 6), Fraction(1, 6), Fraction(1, 6),
                       Fraction(1, 6), Fraction(1, 12), Fraction(3, 12)};
  const auto ev = pr_equation(generic);
  CHECK_FALSE(ev.equal);
  CHECK(ev.lhs == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(ev.rhs == doctest::Approx(0.0915063509461097).epsilon(1e-12));
}

TEST_CASE("pr_equation errors") {
  const Fraction s(1, 6);
  CHECK(code_of([&] { pr_equation({s, s, s, s, s, Fraction(1, 7)}); }) == Errc::ArcSumMismatch);
  CHECK(code_of([&] { pr_equation({s, s, s, s, Fraction(1, 3), Fraction(0)}); }) == Errc::NonPositiveArc);
}

TEST_CASE("pr_equation matches the geometric concurrency test") {
  for (int row = 1; row <= 4; ++row) {
    for (int s = 1; Fraction(s, 60) < pr_family_bound(row); ++s) {
      const auto arcs = pr_family(row, Fraction(s, 60));
      CHECK(pr_equation(arcs).equal);
      CHECK(oracle::concurrency_residual(ceva_order(arcs)) < 1e-12);
    }
  }
  const PRArcs generic{Fraction(1, 6), Fraction(1, 6), Fraction(1, 6),
                       Fraction(1, 6), Fraction(1, 12), Fraction(3, 12)};
  CHECK(oracle::concurrency_residual(ceva_order(generic)) > 1e-3);
}

TEST_CASE("property: family rows hold for every t = s/n, n <= 200") {
  for (int row = 1; row <= 4; ++row) {
    const Fraction bound = pr_family_bound(row);
    for (int n = 2; n <= 200; ++n) {
      for (int s = 1; Fraction(s, n) < bound; ++s) {
        const auto ev = pr_equation(pr_family(row, Fraction(s, n)));
        REQUIRE(ev.equal);
      }
    }
  }
}

TEST_CASE("concurrent_triples examples") {
  CHECK(concurrent_triples(7).empty());
  CHECK(triple_set(12) == std::set<std::array<int, 3>>{{5, 4, 4}});
  CHECK(triple_set(18) == std::set<std::array<int, 3>>{{6, 4, 5}, {8, 6, 7}});
  const auto t30 = triple_set(30);
  for (auto t : {std::array<int, 3>{7, 4, 6}, {11, 6, 10}, {13, 8, 12}}) CHECK(t30.count(t) == 1);
  CHECK(triple_set(42).count({13, 6, 12}) == 1);
  CHECK(code_of([] { concurrent_triples(6); }) == Errc::BadN);
}

TEST_CASE("concurrent_triples witnesses lie on their diagonal") {
  for (int n : {12, 18, 30, 42}) {
    for (const auto& t : concurrent_triples(n)) {
      const auto w = derived_vertex(n, t.witness_class, t.witness_index);
      CHECK(geom::distance(w, t.witness) < 1e-12);
      CHECK(oracle::dist({w.x, w.y}, oracle::unit_vertex(n, 0), oracle::unit_vertex(n, t.r)) < 1e-9);
      CHECK(geom::norm(w) > 1e-6);
      CHECK(t.l1 <= t.l2);
    }
  }
}

TEST_CASE("concurrent_triples agrees with the direct-search oracle") {
  for (int n = 7; n <= 36; ++n) {
    CAPTURE(n);
    CHECK(triple_set(n) == oracle::consecutive_concurrencies(n));
  }
}

TEST_CASE("family-formula reproduction") {
  for (int k = 2; k <= 10; ++k) {
    const std::array<int, 3> t{3 * k - 1, std::min(2 * k, 3 * k - 2), std::max(2 * k, 3 * k - 2)};
    CHECK(triple_set(6 * k).count(t) == 1);
  }
  for (int k = 1; k <= 7; ++k) CHECK(triple_set(12 * k + 6).count({4 * k + 2, 3 * k + 1, 3 * k + 2}) == 1);
}

TEST_CASE("closed-form triples match the oracle for n <= 60") {
  for (int n = 7; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(closed_form_set(n) == triple_set(n));
  }
}

TEST_CASE("second_vertex") {
  const auto sv = second_vertex(30, 7, 4, 4);
  CHECK(sv.index == 28);
  CHECK(sv.partner_class == 6);
  CHECK(sv.side_conditions);

  const auto small = second_vertex(12, 5, 4, 2);
  CHECK(small.index == 10);
  CHECK(small.partner_class == 4);
  CHECK_FALSE(small.side_conditions);

  // 2i + k + 1 = r puts B_i on the axis of the chord.
  CHECK(code_of([] { second_vertex(9, 4, 3, 0); }) == Errc::MidpointCase);
  CHECK(code_of([] { second_vertex(7, 3, 2, 1); }) == Errc::NotIncident);
}

TEST_CASE("property: triple consistency") {
  for (int n = 7; n <= 60; ++n) {
    for (const auto& t : concurrent_triples(n)) {
      CAPTURE(n);
      CAPTURE(t.r);
      const auto sv = second_vertex(n, t.r, t.witness_class, t.witness_index);
      std::array<int, 3> got{t.r, std::min(t.witness_class, sv.partner_class),
                             std::max(t.witness_class, sv.partner_class)};
      CHECK(got == std::array<int, 3>{t.r, t.l1, t.l2});
      const auto other = derived_vertex(n, t.witness_class, sv.index);
      CHECK(oracle::dist({other.x, other.y}, oracle::unit_vertex(n, 0), oracle::unit_vertex(n, t.r)) < 1e-9);
    }
  }
}

TEST_CASE("is_exceptional examples") {
  const auto f1 = is_exceptional({12, 4, 5});
  REQUIRE(f1);
  CHECK(f1->kind == FamilyKind::F1);
  CHECK(f1->k == 2);
  CHECK(f1->text() == "F1(k=2)");
  const auto s = is_exceptional({30, 6, 10});
  REQUIRE(s);
  CHECK(s->kind == FamilyKind::S30b);
  CHECK(s->text() == "S30b");
  CHECK_FALSE(is_exceptional({7, 2, 3}));
  CHECK(is_exceptional({42, 6, 13})->kind == FamilyKind::S42);
  CHECK(is_exceptional({18, 7, 8})->kind == FamilyKind::F1);
  CHECK(is_exceptional({18, 4, 6})->kind == FamilyKind::F2);
}

TEST_CASE("astral_obstruction examples") {
  CHECK(astral_obstruction({30, 4, 6}) == 7);
  CHECK(astral_obstruction({12, 4, 5}) == 4);
  CHECK_FALSE(astral_obstruction({7, 2, 3}));
}

TEST_CASE("property: astral obstruction iff exceptional") {
  for (const auto& p : all_params(48)) {
    CAPTURE(p.n);
    CAPTURE(p.l);
    CAPTURE(p.m);
    CHECK(astral_obstruction(p).has_value() == is_exceptional(p).has_value());
  }
}

TEST_CASE("cross_validate examples") {
  const auto r13 = cross_validate(13);
  CHECK(r13.ok());
  REQUIRE(r13.exceptional.size() == 1);
  CHECK(r13.exceptional[0].params == config::KParams{12, 4, 5});

  const auto r7 = cross_validate(7);
  CHECK(r7.cases == 1);
  CHECK(r7.exceptional.empty());
  CHECK(r7.ok());

  const auto r42 = cross_validate(42, {}, 4);
  CHECK(r42.ok());
  CHECK(r42.exceptional.size() == 37);
  CHECK(r42.min_clean_margin > 1e-5);
  CHECK(r42.cases == static_cast<int>(all_params(42).size()));
  CHECK(std::is_sorted(r42.exceptional.begin(), r42.exceptional.end(),
                       [](const CrossCase& a, const CrossCase& b) { return a.params < b.params; }));
}

}  // TEST_SUITE
