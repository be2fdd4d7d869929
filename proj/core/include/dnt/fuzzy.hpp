#pragma once

#include <span>
#include <vector>

namespace dnt {

/// Triangular fuzzy number (a, b, c) with a <= b <= c. Membership is 0
/// outside [a, c], 1 at b and piecewise linear in between. Degenerate edges
/// (a == b or b == c) are allowed and behave as a jump at the endpoint,
/// e.g. (0, 0, 1) has membership 1 at x = 0.
class TriangularFuzzyNumber {
 public:
  TriangularFuzzyNumber(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  /// Exact evaluation of the four-branch membership formula.
  double membership(double x) const;

  /// Area under the membership function: (c - a) / 2.
  double area() const { return (c_ - a_) / 2.0; }

  bool operator==(const TriangularFuzzyNumber&) const = default;

 private:
  double a_, b_, c_;
};

/// Component-wise arithmetic mean. The list must be nonempty.
TriangularFuzzyNumber mean_tfn(std::span<const TriangularFuzzyNumber> ts);

/// (w*a, w*b, w*c) for w >= 0.
TriangularFuzzyNumber scale_tfn(const TriangularFuzzyNumber& t, double w);

/// Graded mean integration defuzzification: (a + 4b + c) / 6.
double graded_mean(const TriangularFuzzyNumber& t);

/// Centroid defuzzification: (a + b + c) / 3.
double centroid(const TriangularFuzzyNumber& t);

/// Piecewise-linear membership curve: y is interpolated linearly between
/// breakpoints with strictly increasing x, and is 0 outside the breakpoint
/// range. The closed-form carrier for exact intersection/union areas.
class PiecewiseLinearCurve {
 public:
  struct Point {
    double x;
    double y;
  };

  /// Validates: x strictly increasing, y within [0, 1].
  static PiecewiseLinearCurve from_points(std::vector<Point> points);
  static PiecewiseLinearCurve of(const TriangularFuzzyNumber& t);

  double value(double x) const;
  std::span<const Point> points() const { return points_; }

 private:
  PiecewiseLinearCurve() = default;
  std::vector<Point> points_;
};

/// Exact area under one curve.
double area_under(const PiecewiseLinearCurve& curve);

/// Exact area under the pointwise minimum of all curves, via
/// segment-intersection geometry (no sampling). List must be nonempty.
double min_area(std::span<const PiecewiseLinearCurve> curves);
double min_area(std::span<const TriangularFuzzyNumber> ts);
double min_area(const TriangularFuzzyNumber& s, const TriangularFuzzyNumber& t);

/// Exact area under the pointwise maximum of both memberships, by
/// inclusion-exclusion: area(s) + area(t) - min_area(s, t).
double union_area(const TriangularFuzzyNumber& s, const TriangularFuzzyNumber& t);

}  // namespace dnt
