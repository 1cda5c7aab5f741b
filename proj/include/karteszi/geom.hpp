#pragma once

#include <cstdint>
#include <numbers>

namespace karteszi::geom {

/// Reduced rational number with positive denominator.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a) { return Fraction(-a.num_, a.den_); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// An angle of (num/den)·π radians, kept exact until a trig function needs it.
class Angle {
 public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::int64_t den) : coef_(num, den) {}
  explicit Angle(Fraction coef) : coef_(coef) {}

  std::int64_t num() const noexcept { return coef_.num(); }
  std::int64_t den() const noexcept { return coef_.den(); }
  const Fraction& pi_multiple() const noexcept { return coef_; }

  /// Equivalent angle with coefficient reduced into [0, 2).
  Angle wrapped() const;
  double radians() const;

  friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.coef_ + b.coef_); }
  friend Angle operator-(const Angle& a, const Angle& b) { return Angle(a.coef_ - b.coef_); }
  friend Angle operator-(const Angle& a) { return Angle(-a.coef_); }
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  Fraction coef_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

double norm(Point p);
double distance(Point p, Point q);
Point midpoint(Point p, Point q);

/// Line a·x + b·y + c = 0 with a² + b² = 1 and the first coefficient of
/// magnitude above 1e-12 positive.
class Line {
 public:
  /// Normalizes an arbitrary coefficient triple. Idempotent bit-for-bit.
  static Line from_coefficients(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  double signed_distance(Point p) const noexcept { return a_ * p.x + b_ * p.y + c_; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_;
  double b_;
  double c_;
};

struct TolerancePolicy {
  double eps_inc = 1e-9;
  double sep_factor = 100.0;

  /// Throws InvalidTolerance unless eps_inc > 0 and sep_factor > 1.
  void validate() const;
  double separation() const noexcept { return eps_inc * sep_factor; }
};

/// Rotation about `center` by `angle` radians combined with scaling by `ratio`.
class Similarity {
 public:
  Similarity(Point center, double angle, double ratio);
  static Similarity identity(Point center = {}) { return Similarity(center, 0.0, 1.0); }

  Point center() const noexcept { return center_; }
  double angle() const noexcept { return angle_; }
  double ratio() const noexcept { return ratio_; }

 private:
  Point center_;
  double angle_;
  double ratio_;
};

Line line_through(Point p, Point q, const TolerancePolicy& tol = {});
Point intersect(const Line& l1, const Line& l2);
bool incident(Point p, const Line& l, const TolerancePolicy& tol = {});

Point apply(const Similarity& s, Point p);
/// Image of a line: the line through the images of two of its points.
Line apply(const Similarity& s, const Line& l);
/// s1 ∘ s2 (s2 first). Centers must agree within tol.eps_inc.
Similarity compose(const Similarity& s1, const Similarity& s2, const TolerancePolicy& tol = {});

/// Max coefficient difference, minimized over the global sign.
double line_discrepancy(const Line& l1, const Line& l2);
bool lines_equal(const Line& l1, const Line& l2, const TolerancePolicy& tol = {});

}  // namespace karteszi::geom
