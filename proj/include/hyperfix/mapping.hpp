#ifndef HYPERFIX_MAPPING_HPP
#define HYPERFIX_MAPPING_HPP

// Evaluable self-maps of the two space models. Affine and coordinatewise
// piecewise-linear maps act on the box model, rotations and reflections on
// the circle. Exact Lipschitz constants come from slope analysis where the
// representation permits; sampling (group_action.hpp) only ever certifies
// lower bounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hyperfix/box_space.hpp"
#include "hyperfix/circle_space.hpp"

namespace hyperfix {

// Scalar piecewise-linear function through strictly increasing breakpoints,
// extended linearly with the boundary slopes outside the breakpoint range.
struct PwlFunction {
  std::vector<double> xs;
  std::vector<double> ys;

  void validate() const {
    if (xs.size() < 2 || xs.size() != ys.size()) {
      throw std::invalid_argument("PwlFunction: need matching lists of >= 2 breakpoints");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i] > xs[i - 1])) {
        throw std::invalid_argument("PwlFunction: breakpoints must be strictly increasing");
      }
    }
  }

  double slope(std::size_t seg) const {
    return (ys[seg + 1] - ys[seg]) / (xs[seg + 1] - xs[seg]);
  }

  double operator()(double t) const {
    if (t <= xs.front()) return ys.front() + slope(0) * (t - xs.front());
    if (t >= xs.back()) return ys.back() + slope(xs.size() - 2) * (t - xs.back());
    const auto it = std::upper_bound(xs.begin(), xs.end(), t);
    const std::size_t seg = static_cast<std::size_t>(it - xs.begin()) - 1;
    return ys[seg] + slope(seg) * (t - xs[seg]);
  }

  double max_abs_slope() const {
    double m = 0.0;
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) m = std::max(m, std::abs(slope(s)));
    return m;
  }

  // All t with f(t) = t, solved segment by segment (extensions included).
  std::vector<double> fixed_values(double tol = kGeomTol) const {
    std::vector<double> out;
    auto push = [&](double v) {
      for (double w : out) {
        if (std::abs(v - w) <= tol) return;
      }
      out.push_back(v);
    };
    auto solve_line = [&](double x0, double y0, double s, double lo, double hi) {
      if (std::abs(s - 1.0) <= tol) {
        if (std::abs(y0 - x0) <= tol) {  // identity segment: whole range fixed
          push(lo);
          push(hi);
        }
        return;
      }
      const double t = (y0 - s * x0) / (1.0 - s);
      if (t >= lo - tol && t <= hi + tol) push(t);
    };
    const double inf = std::numeric_limits<double>::infinity();
    solve_line(xs.front(), ys.front(), slope(0), -inf, xs.front());
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
      solve_line(xs[s], ys[s], slope(s), xs[s], xs[s + 1]);
    }
    solve_line(xs.back(), ys.back(), slope(xs.size() - 2), xs.back(), inf);
    std::sort(out.begin(), out.end());
    return out;
  }

  PwlFunction inverse() const {
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      if (!(ys[i] > ys[i - 1])) inc = false;
      if (!(ys[i] < ys[i - 1])) dec = false;
    }
    if (!inc && !dec) throw std::invalid_argument("PwlFunction::inverse: not strictly monotone");
    PwlFunction g;
    if (inc) {
      g.xs = ys;
      g.ys = xs;
    } else {
      g.xs.assign(ys.rbegin(), ys.rend());
      g.ys.assign(xs.rbegin(), xs.rend());
    }
    return g;
  }
};

struct AffineMap {
  std::size_t dim = 0;
  std::vector<double> a;  // row-major dim x dim
  std::vector<double> b;  // translation

  Point apply(const Point& x) const {
    if (x.size() != dim) throw std::invalid_argument("AffineMap: dimension mismatch");
    Point y(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = b[i];
      for (std::size_t j = 0; j < dim; ++j) acc += a[i * dim + j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  // Operator norm for the sup norm: the largest absolute row sum.
  double linf_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < dim; ++j) row += std::abs(a[i * dim + j]);
      m = std::max(m, row);
    }
    return m;
  }
};

inline AffineMap affine_identity(std::size_t dim) {
  AffineMap m;
  m.dim = dim;
  m.a.assign(dim * dim, 0.0);
  m.b.assign(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m.a[i * dim + i] = 1.0;
  return m;
}

// Gauss-Jordan with partial pivoting; fine for the small dimensions here.
inline AffineMap affine_inverse(const AffineMap& m) {
  const std::size_t d = m.dim;
  std::vector<double> a = m.a;
  AffineMap inv = affine_identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r) {
      if (std::abs(a[r * d + col]) > std::abs(a[piv * d + col])) piv = r;
    }
    if (std::abs(a[piv * d + col]) < 1e-12) {
      throw std::invalid_argument("affine_inverse: singular matrix");
    }
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(a[col * d + j], a[piv * d + j]);
      std::swap(inv.a[col * d + j], inv.a[piv * d + j]);
    }
    const double p = a[col * d + col];
    for (std::size_t j = 0; j < d; ++j) {
      a[col * d + j] /= p;
      inv.a[col * d + j] /= p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a[r * d + col];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        a[r * d + j] -= f * a[col * d + j];
        inv.a[r * d + j] -= f * inv.a[col * d + j];
      }
    }
  }
  // inverse translation: -A^{-1} b
  Point bt(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += inv.a[i * d + j] * m.b[j];
    bt[i] = -acc;
  }
  inv.b = bt;
  return inv;
}

// Coordinatewise piecewise-linear map; a single function broadcasts to every
// coordinate.
struct CoordPwlMap {
  std::vector<PwlFunction> fs;

  const PwlFunction& at(std::size_t i) const { return fs.size() == 1 ? fs.front() : fs[i]; }

  Point apply(const Point& x) const {
    if (fs.size() != 1 && fs.size() != x.size()) {
      throw std::invalid_argument("CoordPwlMap: dimension mismatch");
    }
    Point y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = at(i)(x[i]);
    return y;
  }

  double max_abs_slope() const {
    double m = 0.0;
    for (const PwlFunction& f : fs) m = std::max(m, f.max_abs_slope());
    return m;
  }
};

struct CircleRotation {
  double angle = 0.0;
};

struct CircleReflection {
  double axis = 0.0;  // theta -> 2*axis - theta
};

struct Mapping;

struct CompositeMap {
  std::vector<Mapping> parts;  // applied left to right
};

struct Mapping {
  std::variant<AffineMap, CoordPwlMap, CircleRotation, CircleReflection, CompositeMap> node;
  std::optional<double> declared_lipschitz;
};

inline Mapping make_affine(AffineMap m, std::optional<double> declared = std::nullopt) {
  return Mapping{std::move(m), declared};
}
inline Mapping make_pwl(PwlFunction f, std::optional<double> declared = std::nullopt) {
  f.validate();
  CoordPwlMap m;
  m.fs.push_back(std::move(f));
  return Mapping{std::move(m), declared};
}
inline Mapping make_rotation(double angle) { return Mapping{CircleRotation{angle}, 1.0}; }
inline Mapping make_reflection(double axis) { return Mapping{CircleReflection{axis}, 1.0}; }
inline Mapping make_composite(std::vector<Mapping> parts) {
  return Mapping{CompositeMap{std::move(parts)}, std::nullopt};
}

// Planar rotation about a center. Quarter turns get exact {0, +-1} entries.
inline Mapping make_rotation2d(double angle, const Point& center) {
  if (center.size() != 2) throw std::invalid_argument("make_rotation2d: center must be 2-d");
  AffineMap m;
  m.dim = 2;
  double c = std::cos(angle), s = std::sin(angle);
  const double quarter = std::round(angle / (kTau / 4.0));
  if (std::abs(angle - quarter * (kTau / 4.0)) < 1e-15) {
    const int q = static_cast<int>(quarter) & 3;
    static const double cs[4] = {1.0, 0.0, -1.0, 0.0};
    static const double sn[4] = {0.0, 1.0, 0.0, -1.0};
    c = cs[q];
    s = sn[q];
  }
  m.a = {c, -s, s, c};
  m.b = {center[0] - (c * center[0] - s * center[1]),
         center[1] - (s * center[0] + c * center[1])};
  for (double& v : m.a) v += 0.0;  // no negative zeros in rendered configs
  for (double& v : m.b) v += 0.0;
  return make_affine(std::move(m));
}

inline Point apply_box(const Mapping& m, const Point& x) {
  if (const auto* aff = std::get_if<AffineMap>(&m.node)) return aff->apply(x);
  if (const auto* pwl = std::get_if<CoordPwlMap>(&m.node)) return pwl->apply(x);
  if (const auto* comp = std::get_if<CompositeMap>(&m.node)) {
    Point y = x;
    for (const Mapping& part : comp->parts) y = apply_box(part, y);
    return y;
  }
  throw std::invalid_argument("apply_box: circle mapping applied to a box point");
}

inline CirclePoint apply_circle(const Mapping& m, CirclePoint x) {
  if (const auto* rot = std::get_if<CircleRotation>(&m.node)) {
    return circle_point(x.angle + rot->angle);
  }
  if (const auto* ref = std::get_if<CircleReflection>(&m.node)) {
    return circle_point(2.0 * ref->axis - x.angle);
  }
  if (const auto* comp = std::get_if<CompositeMap>(&m.node)) {
    CirclePoint y = x;
    for (const Mapping& part : comp->parts) y = apply_circle(part, y);
    return y;
  }
  throw std::invalid_argument("apply_circle: box mapping applied to a circle point");
}

// Certified Lipschitz upper bound from the representation, when one exists.
// Exact for affine, piecewise-linear and circle isometries; for composites
// the product of the parts' constants (an upper bound).
inline std::optional<double> exact_lipschitz(const Mapping& m) {
  if (const auto* aff = std::get_if<AffineMap>(&m.node)) return aff->linf_norm();
  if (const auto* pwl = std::get_if<CoordPwlMap>(&m.node)) return pwl->max_abs_slope();
  if (std::holds_alternative<CircleRotation>(m.node)) return 1.0;
  if (std::holds_alternative<CircleReflection>(m.node)) return 1.0;
  const auto& comp = std::get<CompositeMap>(m.node);
  double prod = 1.0;
  for (const Mapping& part : comp.parts) {
    const auto l = exact_lipschitz(part);
    if (!l) return std::nullopt;
    prod *= *l;
  }
  return prod;
}

inline Mapping inverse(const Mapping& m) {
  if (const auto* aff = std::get_if<AffineMap>(&m.node)) {
    return make_affine(affine_inverse(*aff));
  }
  if (const auto* pwl = std::get_if<CoordPwlMap>(&m.node)) {
    CoordPwlMap inv;
    for (const PwlFunction& f : pwl->fs) inv.fs.push_back(f.inverse());
    return Mapping{std::move(inv), std::nullopt};
  }
  if (const auto* rot = std::get_if<CircleRotation>(&m.node)) {
    return make_rotation(-rot->angle);
  }
  if (const auto* ref = std::get_if<CircleReflection>(&m.node)) {
    return make_reflection(ref->axis);
  }
  const auto& comp = std::get<CompositeMap>(m.node);
  std::vector<Mapping> parts;
  for (auto it = comp.parts.rbegin(); it != comp.parts.rend(); ++it) parts.push_back(inverse(*it));
  return make_composite(std::move(parts));
}

}  // namespace hyperfix

#endif
