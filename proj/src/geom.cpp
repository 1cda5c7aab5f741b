#include "karteszi/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "karteszi/error.hpp"

namespace karteszi::geom {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Fraction(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Fraction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

bool operator<(const Fraction& a, const Fraction& b) {
  __extension__ using wide = __int128;
  return static_cast<wide>(a.num_) * b.den_ < static_cast<wide>(b.num_) * a.den_;
}

Angle Angle::wrapped() const {
  const std::int64_t period = 2 * coef_.den();
  std::int64_t r = coef_.num() % period;
  if (r < 0) r += period;
  return Angle(r, coef_.den());
}

double Angle::radians() const {
  const Angle w = wrapped();
  return static_cast<double>(w.num()) * std::numbers::pi / static_cast<double>(w.den());
}

double norm(Point p) { return std::hypot(p.x, p.y); }
double distance(Point p, Point q) { return norm(p - q); }
Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

Line Line::from_coefficients(double a, double b, double c) {
  const double s = std::hypot(a, b);
  if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("Line: degenerate normal");
  // Already-unit normals are left untouched so normalization is idempotent.
  if (std::abs(s - 1.0) > 4 * std::numeric_limits<double>::epsilon()) {
    a /= s;
    b /= s;
    c /= s;
  }
  constexpr double kSignCutoff = 1e-12;
  const double lead = std::abs(a) > kSignCutoff ? a : (std::abs(b) > kSignCutoff ? b : c);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line(a + 0.0, b + 0.0, c + 0.0);  // + 0.0 folds -0.0
}

void TolerancePolicy::validate() const {
  if (!(eps_inc > 0.0)) throw Error(Errc::InvalidTolerance, "eps_inc must be positive");
  if (!(sep_factor > 1.0)) throw Error(Errc::InvalidTolerance, "sep_factor must exceed 1");
}

Similarity::Similarity(Point center, double angle, double ratio)
    : center_(center), angle_(angle), ratio_(ratio) {
  if (!(ratio > 1e-12)) {
    throw Error(Errc::DegenerateSimilarity, "ratio " + std::to_string(ratio) + " is not positive");
  }
}

Line line_through(Point p, Point q, const TolerancePolicy& tol) {
  const Point d = q - p;
  const double len = norm(d);
  if (!(len > tol.eps_inc)) throw Error(Errc::CoincidentPoints, "points closer than eps_inc");
  const double a = -d.y / len;
  const double b = d.x / len;
  const Point mid = midpoint(p, q);
  return Line::from_coefficients(a, b, -(a * mid.x + b * mid.y));
}

Point intersect(const Line& l1, const Line& l2) {
  const double det = l1.a() * l2.b() - l2.a() * l1.b();
  if (std::abs(det) <= 1e-12) throw Error(Errc::ParallelLines, "determinant below 1e-12");
  return {(l1.b() * l2.c() - l2.b() * l1.c()) / det, (l2.a() * l1.c() - l1.a() * l2.c()) / det};
}

bool incident(Point p, const Line& l, const TolerancePolicy& tol) {
  return std::abs(l.signed_distance(p)) <= tol.eps_inc;
}

Point apply(const Similarity& s, Point p) {
  const Point v = p - s.center();
  const double cs = std::cos(s.angle());
  const double sn = std::sin(s.angle());
  const double r = s.ratio();
  return s.center() + Point{r * (cs * v.x - sn * v.y), r * (sn * v.x + cs * v.y)};
}

Line apply(const Similarity& s, const Line& l) {
  // Foot of the perpendicular from the center plus one unit along the line.
  const double off = l.signed_distance(s.center());
  const Point foot = s.center() - off * Point{l.a(), l.b()};
  const Point along = foot + Point{-l.b(), l.a()};
  const Point p = apply(s, foot);
  const Point q = apply(s, along);
  const Point d = q - p;
  const double len = norm(d);
  const double a = -d.y / len;
  const double b = d.x / len;
  const Point mid = midpoint(p, q);
  return Line::from_coefficients(a, b, -(a * mid.x + b * mid.y));
}

Similarity compose(const Similarity& s1, const Similarity& s2, const TolerancePolicy& tol) {
  if (distance(s1.center(), s2.center()) > tol.eps_inc) {
    throw Error(Errc::CenterMismatch, "similarities have different centers");
  }
  return Similarity(s1.center(), s1.angle() + s2.angle(), s1.ratio() * s2.ratio());
}

double line_discrepancy(const Line& l1, const Line& l2) {
  const double same = std::max({std::abs(l1.a() - l2.a()), std::abs(l1.b() - l2.b()),
                                std::abs(l1.c() - l2.c())});
  const double flipped = std::max({std::abs(l1.a() + l2.a()), std::abs(l1.b() + l2.b()),
                                   std::abs(l1.c() + l2.c())});
  return std::min(same, flipped);
}

bool lines_equal(const Line& l1, const Line& l2, const TolerancePolicy& tol) {
  return line_discrepancy(l1, l2) <= tol.eps_inc;
}

}  // namespace karteszi::geom
