#include "dnt/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dnt {

namespace {

// Relative tolerance for merging curve crossings with grid points.
constexpr double kCrossingTolerance = 1e-12;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

TriangularFuzzyNumber::TriangularFuzzyNumber(double a, double b, double c)
    : a_(a), b_(b), c_(c) {
  if (!finite(a) || !finite(b) || !finite(c)) {
    throw std::invalid_argument("triangular number components must be finite");
  }
  if (!(a <= b && b <= c)) {
    throw std::invalid_argument("triangular number requires a <= b <= c");
  }
}

double TriangularFuzzyNumber::membership(double x) const {
  if (x < a_ || x > c_) {
    return 0.0;
  }
  if (x == b_) {
    return 1.0;
  }
  if (x < b_) {
    return (x - a_) / (b_ - a_);  // a_ < b_ here, no division by zero
  }
  return (c_ - x) / (c_ - b_);
}

TriangularFuzzyNumber mean_tfn(std::span<const TriangularFuzzyNumber> ts) {
  if (ts.empty()) {
    throw std::invalid_argument("mean_tfn requires a nonempty list");
  }
  double a = 0.0, b = 0.0, c = 0.0;
  for (const auto& t : ts) {
    a += t.a();
    b += t.b();
    c += t.c();
  }
  const auto n = static_cast<double>(ts.size());
  return {a / n, b / n, c / n};
}

TriangularFuzzyNumber scale_tfn(const TriangularFuzzyNumber& t, double w) {
  if (!(w >= 0.0)) {
    throw std::invalid_argument("scale_tfn requires a nonnegative factor");
  }
  return {w * t.a(), w * t.b(), w * t.c()};
}

double graded_mean(const TriangularFuzzyNumber& t) {
  return (t.a() + 4.0 * t.b() + t.c()) / 6.0;
}

double centroid(const TriangularFuzzyNumber& t) {
  return (t.a() + t.b() + t.c()) / 3.0;
}

PiecewiseLinearCurve PiecewiseLinearCurve::from_points(std::vector<Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!finite(points[i].x) || !finite(points[i].y)) {
      throw std::invalid_argument("curve breakpoints must be finite");
    }
    if (points[i].y < 0.0 || points[i].y > 1.0) {
      throw std::invalid_argument("curve breakpoint y must be within [0, 1]");
    }
    if (i > 0 && !(points[i - 1].x < points[i].x)) {
      throw std::invalid_argument("curve breakpoint x must be strictly increasing");
    }
  }
  PiecewiseLinearCurve c;
  c.points_ = std::move(points);
  return c;
}

PiecewiseLinearCurve PiecewiseLinearCurve::of(const TriangularFuzzyNumber& t) {
  std::vector<Point> pts;
  if (t.a() == t.b() && t.b() == t.c()) {
    pts = {{t.b(), 1.0}};  // point triangle: zero-measure spike
  } else if (t.a() == t.b()) {
    pts = {{t.a(), 1.0}, {t.c(), 0.0}};  // jump up at a
  } else if (t.b() == t.c()) {
    pts = {{t.a(), 0.0}, {t.c(), 1.0}};  // jump down after c
  } else {
    pts = {{t.a(), 0.0}, {t.b(), 1.0}, {t.c(), 0.0}};
  }
  PiecewiseLinearCurve c;
  c.points_ = std::move(pts);
  return c;
}

double PiecewiseLinearCurve::value(double x) const {
  if (points_.empty() || x < points_.front().x || x > points_.back().x) {
    return 0.0;
  }
  auto it = std::lower_bound(
      points_.begin(), points_.end(), x,
      [](const Point& p, double v) { return p.x < v; });
  if (it != points_.end() && it->x == x) {
    return it->y;
  }
  const Point& hi = *it;
  const Point& lo = *std::prev(it);
  const double s = (hi.y - lo.y) / (hi.x - lo.x);
  return lo.y + s * (x - lo.x);
}

namespace {

struct AffinePiece {
  double slope = 0.0;
  double offset = 0.0;

  double at(double x) const { return slope * x + offset; }
};

// Affine restriction of a curve to the open interval (x0, x1). The interval
// must not straddle a breakpoint; callers guarantee that by cutting the
// sweep grid at every breakpoint.
AffinePiece restrict_to(const PiecewiseLinearCurve& curve, double x0, double x1) {
  const auto pts = curve.points();
  if (pts.size() < 2 || x1 <= pts.front().x || x0 >= pts.back().x) {
    return {};
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x <= x0 && x1 <= pts[i + 1].x) {
      const double s = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
      return {s, pts[i].y - s * pts[i].x};
    }
  }
  return {};
}

// Exact integral of combine(f_1(x), ..., f_k(x)) over the line, where each
// f_i is piecewise linear and combine is any min/max composition (so the
// composite is affine between pairwise crossings of the pieces).
template <typename Combine>
double swept_area(std::span<const PiecewiseLinearCurve> curves, Combine combine) {
  std::vector<double> grid;
  for (const auto& c : curves) {
    for (const auto& p : c.points()) {
      grid.push_back(p.x);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 2) {
    return 0.0;
  }

  std::vector<AffinePiece> pieces(curves.size());
  std::vector<double> values(curves.size());
  std::vector<double> cuts;
  double total = 0.0;

  for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
    const double x0 = grid[g];
    const double x1 = grid[g + 1];
    for (std::size_t i = 0; i < curves.size(); ++i) {
      pieces[i] = restrict_to(curves[i], x0, x1);
    }

    cuts.clear();
    cuts.push_back(x0);
    cuts.push_back(x1);
    const double tol = kCrossingTolerance * std::max({1.0, std::abs(x0), std::abs(x1)});
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        const double ds = pieces[i].slope - pieces[j].slope;
        if (ds == 0.0) {
          continue;  // parallel; no crossing inside the interval
        }
        const double xc = (pieces[j].offset - pieces[i].offset) / ds;
        if (xc > x0 + tol && xc < x1 - tol) {
          cuts.push_back(xc);
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());

    auto combined_at = [&](double x) {
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        values[i] = pieces[i].at(x);
      }
      return combine(std::span<const double>(values));
    };

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const double u = cuts[s];
      const double v = cuts[s + 1];
      if (v - u <= tol) {
        continue;
      }
      total += 0.5 * (combined_at(u) + combined_at(v)) * (v - u);
    }
  }
  return total;
}

double pointwise_min(std::span<const double> values) {
  double m = values[0];
  for (double v : values.subspan(1)) {
    m = std::min(m, v);
  }
  return m;
}

}  // namespace

double area_under(const PiecewiseLinearCurve& curve) {
  const auto pts = curve.points();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += 0.5 * (pts[i].y + pts[i + 1].y) * (pts[i + 1].x - pts[i].x);
  }
  return total;
}

double min_area(std::span<const PiecewiseLinearCurve> curves) {
  if (curves.empty()) {
    throw std::invalid_argument("min_area requires at least one curve");
  }
  if (curves.size() == 1) {
    return area_under(curves[0]);
  }
  return swept_area(curves, pointwise_min);
}

double min_area(std::span<const TriangularFuzzyNumber> ts) {
  std::vector<PiecewiseLinearCurve> curves;
  curves.reserve(ts.size());
  for (const auto& t : ts) {
    curves.push_back(PiecewiseLinearCurve::of(t));
  }
  return min_area(curves);
}

double min_area(const TriangularFuzzyNumber& s, const TriangularFuzzyNumber& t) {
  const TriangularFuzzyNumber ts[] = {s, t};
  return min_area(std::span<const TriangularFuzzyNumber>(ts));
}

double union_area(const TriangularFuzzyNumber& s, const TriangularFuzzyNumber& t) {
  return s.area() + t.area() - min_area(s, t);
}

namespace detail {

// Shared with linguistic_scale.cpp: area under min(f, max(g_1, ..., g_k)).
double covered_area(const PiecewiseLinearCurve& f,
                    std::span<const PiecewiseLinearCurve> envelope_terms) {
  std::vector<PiecewiseLinearCurve> curves;
  curves.reserve(envelope_terms.size() + 1);
  curves.push_back(f);
  for (const auto& c : envelope_terms) {
    curves.push_back(c);
  }
  return swept_area(std::span<const PiecewiseLinearCurve>(curves),
                    [](std::span<const double> values) {
                      double env = values[1];
                      for (double v : values.subspan(2)) {
                        env = std::max(env, v);
                      }
                      return std::min(values[0], env);
                    });
}

}  // namespace detail

}  // namespace dnt
