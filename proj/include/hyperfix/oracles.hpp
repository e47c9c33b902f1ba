#ifndef HYPERFIX_ORACLES_HPP
#define HYPERFIX_ORACLES_HPP

// Brute-force grid references for the closed-form geometry. These never call
// the closed forms they check. Under the sup norm both the Hausdorff and the
// Chebyshev objectives decouple coordinatewise over boxes and finite sets
// (max and inf commute across independent coordinates), so the grids are
// one-dimensional and a step of 1e-3 stays affordable in dimension 6; a full
// product-grid variant for d <= 2 validates the decoupling itself.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hyperfix/box_space.hpp"
#include "hyperfix/circle_space.hpp"

namespace hyperfix {

namespace oracle {

struct Grid1d {
  double lo = 0.0;
  double step = 0.0;
  std::size_t count = 1;  // number of grid points (>= 1)

  double at(std::size_t i) const { return count == 1 ? lo : lo + step * static_cast<double>(i); }

  // Exact min over the grid of |v - grid point|: the uniform spacing makes
  // the nearest index directly computable.
  double dist_to(double v) const {
    if (count == 1) return std::abs(v - lo);
    double k = std::round((v - lo) / step);
    k = std::min(std::max(k, 0.0), static_cast<double>(count - 1));
    double best = std::abs(v - (lo + k * step));
    if (k > 0.0) best = std::min(best, std::abs(v - (lo + (k - 1.0) * step)));
    if (k < static_cast<double>(count - 1)) {
      best = std::min(best, std::abs(v - (lo + (k + 1.0) * step)));
    }
    return best;
  }
};

inline Grid1d make_grid(double lo, double hi, double h) {
  Grid1d g;
  g.lo = lo;
  if (hi <= lo) {
    g.step = 0.0;
    g.count = 1;
    return g;
  }
  const std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / h));
  g.count = n + 1;
  g.step = (hi - lo) / static_cast<double>(n);
  return g;
}

}  // namespace oracle

// sup over grid(A) of min over grid(B), symmetrized, per coordinate; the
// outer max over coordinates realizes the sup-inf over the product grids.
inline double grid_box_hausdorff(const Box& a, const Box& b, double h = kDefaultGridStep) {
  if (a.is_empty() || b.is_empty()) throw std::invalid_argument("grid_box_hausdorff: empty input");
  if (a.dim() != b.dim()) throw std::invalid_argument("grid_box_hausdorff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto ga = oracle::make_grid(a.lo()[i], a.hi()[i], h);
    const auto gb = oracle::make_grid(b.lo()[i], b.hi()[i], h);
    double dir_ab = 0.0, dir_ba = 0.0;
    for (std::size_t k = 0; k < ga.count; ++k) dir_ab = std::max(dir_ab, gb.dist_to(ga.at(k)));
    for (std::size_t k = 0; k < gb.count; ++k) dir_ba = std::max(dir_ba, ga.dist_to(gb.at(k)));
    worst = std::max(worst, std::max(dir_ab, dir_ba));
  }
  return worst;
}

// Full product-grid sup-inf for d <= 2; cross-checks the coordinatewise
// decomposition on small cases.
inline double grid_box_hausdorff_full(const Box& a, const Box& b, double h) {
  if (a.dim() > 2) throw std::invalid_argument("grid_box_hausdorff_full: d <= 2 only");
  auto points_of = [&](const Box& box) {
    std::vector<Point> pts;
    std::vector<oracle::Grid1d> grids;
    for (std::size_t i = 0; i < box.dim(); ++i) {
      grids.push_back(oracle::make_grid(box.lo()[i], box.hi()[i], h));
    }
    if (box.dim() == 1) {
      for (std::size_t i = 0; i < grids[0].count; ++i) pts.push_back({grids[0].at(i)});
    } else {
      for (std::size_t i = 0; i < grids[0].count; ++i) {
        for (std::size_t j = 0; j < grids[1].count; ++j) {
          pts.push_back({grids[0].at(i), grids[1].at(j)});
        }
      }
    }
    return pts;
  };
  const auto pa = points_of(a), pb = points_of(b);
  auto directed = [](const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (const Point& p : from) {
      double best = linf_dist(p, to.front());
      for (const Point& q : to) best = std::min(best, linf_dist(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(pa, pb), directed(pb, pa));
}

struct GridChebyshev {
  double radius = 0.0;
  Box center;  // per-coordinate interval of grid minimizers (to grid accuracy)
};

// Minimizes max_{x in K} |y_i - x_i| per coordinate over a grid on the
// bounding interval inflated by the candidate radius.
inline GridChebyshev grid_chebyshev(const PointSet& k, double h = kDefaultGridStep) {
  if (k.empty()) throw std::invalid_argument("grid_chebyshev: empty set");
  const std::size_t d = k.front().size();
  const Box bb = bounding_box(k);
  const double inflate = bb.max_width() / 2.0 + h;
  std::vector<double> best(d, 0.0);
  GridChebyshev out;
  double radius = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto g = oracle::make_grid(bb.lo()[i] - inflate, bb.hi()[i] + inflate, h);
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < g.count; ++t) {
      const double y = g.at(t);
      double farthest = 0.0;
      for (const Point& p : k) farthest = std::max(farthest, std::abs(y - p[i]));
      mn = std::min(mn, farthest);
    }
    best[i] = mn;
    radius = std::max(radius, mn);
  }
  out.radius = radius;
  Point lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto g = oracle::make_grid(bb.lo()[i] - inflate, bb.hi()[i] + inflate, h);
    double mnv = std::numeric_limits<double>::infinity();
    double mxv = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < g.count; ++t) {
      const double y = g.at(t);
      double farthest = 0.0;
      for (const Point& p : k) farthest = std::max(farthest, std::abs(y - p[i]));
      if (farthest <= radius + h) {
        mnv = std::min(mnv, y);
        mxv = std::max(mxv, y);
      }
    }
    lo[i] = mnv;
    hi[i] = mxv;
  }
  out.center = Box(std::move(lo), std::move(hi));
  return out;
}

// Dense angular scan of the farthest-point objective on the circle.
struct GridCircleChebyshev {
  double radius = 0.0;
  std::vector<double> argmin;  // grid angles within one step of the grid minimum
};

inline GridCircleChebyshev grid_circle_chebyshev(const std::vector<CirclePoint>& k,
                                                 double h = kCircleGridStep) {
  if (k.empty()) throw std::invalid_argument("grid_circle_chebyshev: empty set");
  const std::size_t n = static_cast<std::size_t>(std::ceil(kTau / h));
  GridCircleChebyshev out;
  out.radius = std::numeric_limits<double>::infinity();
  std::vector<double> values(n);
  for (std::size_t t = 0; t < n; ++t) {
    const CirclePoint y{static_cast<double>(t) * (kTau / static_cast<double>(n))};
    values[t] = circle_radius_at(y, k);
    out.radius = std::min(out.radius, values[t]);
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (values[t] <= out.radius + h) {
      out.argmin.push_back(static_cast<double>(t) * (kTau / static_cast<double>(n)));
    }
  }
  return out;
}

// Grid check of a co-ball: max over grid samples of the set of the distance
// to the candidate point.
inline double grid_max_dist_to_arcset(const ArcSet& s, double angle, double h = kCircleGridStep) {
  if (s.is_empty()) throw std::invalid_argument("grid_max_dist_to_arcset: empty set");
  const CirclePoint p{normalize_angle(angle)};
  double worst = 0.0;
  for (const Arc& arc : s.arcs()) {
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(arc.length / h));
    for (std::size_t t = 0; t <= n; ++t) {
      const double y = arc.start + arc.length * static_cast<double>(t) / static_cast<double>(n);
      worst = std::max(worst, circle_dist(p, circle_point(y)));
    }
  }
  return worst;
}

}  // namespace hyperfix

#endif
