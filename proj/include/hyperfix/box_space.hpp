#ifndef HYPERFIX_BOX_SPACE_HPP
#define HYPERFIX_BOX_SPACE_HPP

// Exact geometry of the sup-norm model (R^d, linf): balls, boxes, Hausdorff
// distance, Chebyshev radius and center. Every admissible set of this model
// is an axis-aligned box, so the center calculus is closed-form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hyperfix/common.hpp"

namespace hyperfix {

using Point = std::vector<double>;
using PointSet = std::vector<Point>;

inline void require_same_dim(const Point& p, const Point& q, const char* what) {
  if (p.size() != q.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

inline double linf_dist(const Point& p, const Point& q) {
  require_same_dim(p, q, "linf_dist");
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

// Axis-aligned product of closed intervals. The empty box is a distinguished
// value, not an error: intersections are allowed to come out empty and the
// iteration logic branches on it. A box whose bounds are inverted by at most
// kGeomTol (floating-point noise on mathematically degenerate boxes) still
// counts as nonempty.
class Box {
 public:
  Box() = default;

  Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.size() != hi_.size()) throw std::invalid_argument("Box: dimension mismatch");
    empty_ = lo_.empty();
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      if (lo_[i] > hi_[i] + kGeomTol) empty_ = true;
    }
  }

  static Box empty(std::size_t dim) {
    Box b;
    b.lo_.assign(dim, 0.0);
    b.hi_.assign(dim, 0.0);
    b.empty_ = true;
    return b;
  }

  static Box point(const Point& p) { return Box(p, p); }

  bool is_empty() const { return empty_; }
  std::size_t dim() const { return lo_.size(); }
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }

  double width(std::size_t i) const { return std::max(0.0, hi_[i] - lo_[i]); }

  double max_width() const {
    double w = 0.0;
    for (std::size_t i = 0; i < lo_.size(); ++i) w = std::max(w, width(i));
    return w;
  }

  bool contains(const Point& p, double tol = kGeomTol) const {
    if (empty_ || p.size() != lo_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < lo_[i] - tol || p[i] > hi_[i] + tol) return false;
    }
    return true;
  }

  bool same_extent(const Box& other, double tol = kGeomTol) const {
    if (empty_ != other.empty_) return false;
    if (empty_) return true;
    if (dim() != other.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (std::abs(lo_[i] - other.lo_[i]) > tol) return false;
      if (std::abs(hi_[i] - other.hi_[i]) > tol) return false;
    }
    return true;
  }

 private:
  Point lo_, hi_;
  bool empty_ = true;
};

// Closed ball of the sup norm: the box [c - r, c + r].
inline Box ball(const Point& c, double r) {
  if (r < 0.0) throw std::invalid_argument("ball: negative radius");
  Point lo(c), hi(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    lo[i] -= r;
    hi[i] += r;
  }
  return Box(std::move(lo), std::move(hi));
}

inline Box intersect(const std::vector<Box>& boxes) {
  if (boxes.empty()) throw std::invalid_argument("intersect: empty list");
  const std::size_t d = boxes.front().dim();
  for (const Box& b : boxes) {
    if (b.dim() != d) throw std::invalid_argument("intersect: dimension mismatch");
    if (b.is_empty()) return Box::empty(d);
  }
  Point lo = boxes.front().lo(), hi = boxes.front().hi();
  for (std::size_t k = 1; k < boxes.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::max(lo[i], boxes[k].lo()[i]);
      hi[i] = std::min(hi[i], boxes[k].hi()[i]);
    }
  }
  return Box(std::move(lo), std::move(hi));
}

// Hausdorff distance of two nonempty boxes. For sup-norm boxes the sup-inf
// definition collapses to the corner formula below; the grid oracle in
// oracles.hpp cross-checks this.
inline double box_hausdorff(const Box& a, const Box& b) {
  if (a.is_empty() || b.is_empty()) throw std::invalid_argument("box_hausdorff: empty input");
  if (a.dim() != b.dim()) throw std::invalid_argument("box_hausdorff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a.lo()[i] - b.lo()[i]));
    m = std::max(m, std::abs(a.hi()[i] - b.hi()[i]));
  }
  return m;
}

// Exact bidirectional max-min Hausdorff distance of finite point sets.
inline double set_hausdorff(const PointSet& k, const PointSet& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("set_hausdorff: empty input");
  auto directed = [](const PointSet& from, const PointSet& to) {
    double h = 0.0;
    for (const Point& p : from) {
      double nearest = linf_dist(p, to.front());
      for (std::size_t j = 1; j < to.size(); ++j) nearest = std::min(nearest, linf_dist(p, to[j]));
      h = std::max(h, nearest);
    }
    return h;
  };
  return std::max(directed(k, l), directed(l, k));
}

inline Box bounding_box(const PointSet& k) {
  if (k.empty()) throw std::invalid_argument("bounding_box: empty set");
  Point lo = k.front(), hi = k.front();
  for (const Point& p : k) {
    require_same_dim(p, lo, "bounding_box");
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return Box(std::move(lo), std::move(hi));
}

// Diameter of a finite set under the sup norm; equals the widest side of the
// bounding box because coordinates decouple.
inline double set_diameter(const PointSet& k) { return bounding_box(k).max_width(); }

struct ChebyshevResult {
  double radius = 0.0;
  Box center;
};

// Chebyshev radius and full center set of a finite point set. With [lo, hi]
// the bounding box and r = max_i (hi_i - lo_i)/2, the center is the box
// [hi_i - r, lo_i + r]; every point of it sees the set at sup-distance
// exactly r.
inline ChebyshevResult chebyshev(const PointSet& k) {
  const Box bb = bounding_box(k);
  const double r = bb.max_width() / 2.0;
  Point lo(bb.dim()), hi(bb.dim());
  for (std::size_t i = 0; i < bb.dim(); ++i) {
    lo[i] = bb.hi()[i] - r;
    hi[i] = bb.lo()[i] + r;
  }
  return ChebyshevResult{r, Box(std::move(lo), std::move(hi))};
}

// Points within r of *every* point of the box c: the intersection of all
// balls centered in c. Empty iff some side of c is wider than 2r.
inline Box shrink_hull(const Box& c, double r) {
  if (c.is_empty()) throw std::invalid_argument("shrink_hull: empty input");
  if (r < 0.0) throw std::invalid_argument("shrink_hull: negative radius");
  Point lo(c.dim()), hi(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    lo[i] = c.hi()[i] - r;
    hi[i] = c.lo()[i] + r;
  }
  return Box(std::move(lo), std::move(hi));
}

// Componentwise midpoint. As a map (boxes, Hausdorff) -> (points, linf) this
// is 1-Lipschitz, which the selection machinery relies on.
inline Point midpoint(const Box& b) {
  if (b.is_empty()) throw std::invalid_argument("midpoint: empty box");
  Point m(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) m[i] = (b.lo()[i] + b.hi()[i]) * 0.5;
  return m;
}

// Sup-distance from y to the farthest point of a finite set.
inline double radius_at(const Point& y, const PointSet& k) {
  if (k.empty()) throw std::invalid_argument("radius_at: empty set");
  double m = 0.0;
  for (const Point& p : k) m = std::max(m, linf_dist(y, p));
  return m;
}

inline PointSet dedupe_points(const PointSet& pts, double tol = kDedupeTol) {
  PointSet out;
  for (const Point& p : pts) {
    bool seen = false;
    for (const Point& q : out) {
      if (linf_dist(p, q) <= tol) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace hyperfix

#endif
