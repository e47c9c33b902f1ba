#ifndef HYPERFIX_GROUP_ACTION_HPP
#define HYPERFIX_GROUP_ACTION_HPP

// Finite groups as explicit Cayley tables, actions {T_a : a in G} on the two
// space models, orbit statistics, the sup-over-elements metric d_G, and
// Lipschitz estimation. Finite groups keep every supremum exact; infinite
// groups appear only through word-ball exploration.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperfix/mapping.hpp"

namespace hyperfix {

struct FiniteGroup {
  std::size_t order = 0;
  std::vector<int> table;  // order x order, table[a * order + b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverse[a]; }
};

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.order = n;
  g.table.resize(n * n);
  g.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inverse[a] = static_cast<int>((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) g.table[a * n + b] = static_cast<int>((a + b) % n);
  }
  g.identity = 0;
  return g;
}

// Derives identity and inverses from a raw table; throws if they do not
// exist. Full axiom checking lives in verify_group.
inline FiniteGroup group_from_table(std::size_t n, std::vector<int> table) {
  if (table.size() != n * n) throw std::invalid_argument("group_from_table: bad table size");
  for (int v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("group_from_table: index out of range");
    }
  }
  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  int id = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (g.table[e * n + a] != static_cast<int>(a) || g.table[a * n + e] != static_cast<int>(a)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      id = static_cast<int>(e);
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("group_from_table: no identity element");
  g.identity = id;
  g.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table[a * n + b] == id && g.table[b * n + a] == id) {
        g.inverse[a] = static_cast<int>(b);
        break;
      }
    }
    if (g.inverse[a] < 0) throw std::invalid_argument("group_from_table: missing inverse");
  }
  return g;
}

struct GroupCheck {
  bool table_well_formed = false;
  std::vector<std::array<int, 3>> associativity_violations;
  std::vector<int> identity_violations;
  std::vector<int> inverse_violations;

  bool valid() const {
    return table_well_formed && associativity_violations.empty() &&
           identity_violations.empty() && inverse_violations.empty();
  }
};

// Exhaustive group-axiom check; lists every violating triple.
inline GroupCheck verify_group(const FiniteGroup& g) {
  GroupCheck c;
  const std::size_t n = g.order;
  if (n == 0 || g.table.size() != n * n || g.inverse.size() != n) return c;
  for (int v : g.table) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) return c;
  }
  c.table_well_formed = true;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    for (int b = 0; b < static_cast<int>(n); ++b) {
      for (int d = 0; d < static_cast<int>(n); ++d) {
        if (g.mul(g.mul(a, b), d) != g.mul(a, g.mul(b, d))) {
          c.associativity_violations.push_back({a, b, d});
        }
      }
    }
  }
  for (int a = 0; a < static_cast<int>(n); ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) c.identity_violations.push_back(a);
    if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity) {
      c.inverse_violations.push_back(a);
    }
  }
  return c;
}

enum class SpaceKind { box, circle };

// Trait bundle for the sup-norm box model.
struct BoxSpace {
  static constexpr SpaceKind kind = SpaceKind::box;
  using Point = hyperfix::Point;
  using Set = Box;
  struct Domain {
    Box bounds;
  };

  static double dist(const Point& a, const Point& b) { return linf_dist(a, b); }
  static Point apply(const Mapping& m, const Point& x) { return apply_box(m, x); }
  static Set ball_at(const Point& c, double r) { return ball(c, r); }
  static Set intersect_all(const std::vector<Set>& sets) { return intersect(sets); }
  static Set meet(const Set& a, const Set& b) { return intersect({a, b}); }
  static Set co_ball(const Set& s, double r) { return shrink_hull(s, r); }
  static bool set_empty(const Set& s) { return s.is_empty(); }
  static bool member(const Set& s, const Point& p, double tol = kGeomTol) {
    return s.contains(p, tol);
  }
  static Point select(const Set& s, const Point& /*preference*/) { return midpoint(s); }
  static std::vector<double> coords(const Point& p) { return p; }
  static Point from_coords(const std::vector<double>& c) { return c; }
  static Point sample(const Domain& d, Rng& rng) {
    Point p(d.bounds.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = rng.uniform(d.bounds.lo()[i], d.bounds.hi()[i]);
    }
    return p;
  }
  static std::vector<Point> dedupe(const std::vector<Point>& pts) { return dedupe_points(pts); }
  static double diameter(const std::vector<Point>& pts) { return set_diameter(pts); }
  static double orbit_radius(const std::vector<Point>& pts) { return set_diameter(pts) / 2.0; }
};

// Trait bundle for the geodesic circle model.
struct CircleSpace {
  static constexpr SpaceKind kind = SpaceKind::circle;
  using Point = CirclePoint;
  using Set = ArcSet;
  struct Domain {};

  static double dist(Point a, Point b) { return circle_dist(a, b); }
  static Point apply(const Mapping& m, Point x) { return apply_circle(m, x); }
  static Set ball_at(Point c, double r) { return circle_ball(c, r); }
  static Set intersect_all(const std::vector<Set>& sets) { return arcset_intersect(sets); }
  static Set meet(const Set& a, const Set& b) { return a.intersect(b); }
  static Set co_ball(const Set& s, double r) { return circle_co_ball(s, r); }
  static bool set_empty(const Set& s) { return s.is_empty(); }
  static bool member(const Set& s, Point p, double tol = kGeomTol) {
    return s.contains(p.angle, tol);
  }
  static Point select(const Set& s, Point preference) { return select_in(s, preference); }
  static std::vector<double> coords(Point p) { return {p.angle}; }
  static Point from_coords(const std::vector<double>& c) {
    if (c.size() != 1) throw std::invalid_argument("CircleSpace: expected a single angle");
    return circle_point(c[0]);
  }
  static Point sample(const Domain&, Rng& rng) { return circle_point(rng.uniform(0.0, kTau)); }
  static std::vector<Point> dedupe(const std::vector<Point>& pts) {
    std::vector<Point> out;
    for (Point p : pts) {
      bool seen = false;
      for (Point q : out) {
        if (circle_dist(p, q) <= kDedupeTol) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(p);
    }
    return out;
  }
  static double diameter(const std::vector<Point>& pts) {
    double m = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        m = std::max(m, circle_dist(pts[i], pts[j]));
      }
    }
    return m;
  }
  static double orbit_radius(const std::vector<Point>& pts) {
    return circle_chebyshev(pts).radius;
  }
};

// A finite group together with one evaluable mapping per element and the
// sampling domain of the model it acts on.
template <class S>
struct Action {
  FiniteGroup group;
  std::vector<Mapping> maps;  // maps[a] realizes element a
  typename S::Domain domain;
};

using BoxAction = Action<BoxSpace>;
using CircleAction = Action<CircleSpace>;

template <class S>
std::vector<typename S::Point> orbit(const Action<S>& act, const typename S::Point& x) {
  std::vector<typename S::Point> pts;
  pts.reserve(act.group.order);
  for (const Mapping& m : act.maps) pts.push_back(S::apply(m, x));
  return pts;
}

struct OrbitStats {
  double diameter = 0.0;  // delta(x)
  double radius = 0.0;    // r(x) via the model's Chebyshev calculus
};

template <class S>
OrbitStats orbit_stats(const Action<S>& act, const typename S::Point& x) {
  const auto pts = S::dedupe(orbit(act, x));
  return OrbitStats{S::diameter(pts), S::orbit_radius(pts)};
}

// r(y, x): sup-distance from y to the orbit of x.
template <class S>
double orbit_radius_at(const Action<S>& act, const typename S::Point& y,
                       const typename S::Point& x) {
  double m = 0.0;
  for (const Mapping& map : act.maps) m = std::max(m, S::dist(y, S::apply(map, x)));
  return m;
}

// d_G(x, y) = sup_a d(T_a x, T_a y). Satisfies d <= d_G <= L d, and every
// T_a is an isometry of d_G when G is a group.
template <class S>
double group_metric(const Action<S>& act, const typename S::Point& x,
                    const typename S::Point& y) {
  double m = 0.0;
  for (const Mapping& map : act.maps) m = std::max(m, S::dist(S::apply(map, x), S::apply(map, y)));
  return m;
}

// Sampled supremum of d(T_a x, T_a y) / d(x, y): a certified lower bound on
// the uniform Lipschitz constant.
template <class S>
double estimate_lipschitz(const Action<S>& act, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = S::sample(act.domain, rng);
    const auto y = S::sample(act.domain, rng);
    const double d = S::dist(x, y);
    if (d <= 0.0) continue;
    const Mapping& m = act.maps[rng.index(act.maps.size())];
    best = std::max(best, S::dist(S::apply(m, x), S::apply(m, y)) / d);
  }
  return best;
}

// Exact uniform constant by slope analysis, when every element's map admits
// it: the max over elements.
template <class S>
std::optional<double> exact_lipschitz(const Action<S>& act) {
  double m = 0.0;
  for (const Mapping& map : act.maps) {
    const auto l = exact_lipschitz(map);
    if (!l) return std::nullopt;
    m = std::max(m, *l);
  }
  return m;
}

struct ActionCheck {
  double max_homomorphism_deviation = 0.0;  // d(T_a T_b x, T_{ab} x)
  double max_identity_deviation = 0.0;      // d(T_e x, x)
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool pass(double tol = kAuditSlack) const {
    return max_homomorphism_deviation <= tol && max_identity_deviation <= tol;
  }
};

template <class S>
ActionCheck verify_action(const Action<S>& act, std::size_t samples, std::uint64_t seed) {
  ActionCheck c;
  c.samples = samples;
  c.seed = seed;
  Rng rng(seed);
  const std::size_t n = act.group.order;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = S::sample(act.domain, rng);
    const int a = static_cast<int>(rng.index(n));
    const int b = static_cast<int>(rng.index(n));
    const auto lhs = S::apply(act.maps[a], S::apply(act.maps[b], x));
    const auto rhs = S::apply(act.maps[act.group.mul(a, b)], x);
    c.max_homomorphism_deviation = std::max(c.max_homomorphism_deviation, S::dist(lhs, rhs));
    c.max_identity_deviation =
        std::max(c.max_identity_deviation, S::dist(S::apply(act.maps[act.group.identity], x), x));
  }
  return c;
}

struct DiameterTransfer {
  double lhs = 0.0;  // delta(y)
  double rhs = 0.0;  // 2 L d(x, y) + delta(x)

  bool ok(double slack = kAuditSlack) const { return lhs <= rhs + slack; }
};

// delta(y) <= 2 L d(x, y) + delta(x): orbits are simultaneously bounded.
template <class S>
DiameterTransfer diameter_transfer(const Action<S>& act, const typename S::Point& x,
                                   const typename S::Point& y, double lipschitz) {
  DiameterTransfer t;
  t.lhs = orbit_stats(act, y).diameter;
  t.rhs = 2.0 * lipschitz * S::dist(x, y) + orbit_stats(act, x).diameter;
  return t;
}

struct WordBallLevel {
  std::size_t word_length = 0;
  std::size_t point_count = 0;  // distinct points reached by words of length <= word_length
  double diameter = 0.0;
};

struct WordBallResult {
  std::vector<WordBallLevel> levels;                 // levels[k] = ball of radius k
  std::vector<std::vector<Point>> points_per_level;  // accumulated point sets
};

// Applies every word of length <= max_len over the generators and their
// inverses to x. Deduplication uses a fixed quantization so the exploration
// is deterministic; the cap guards the memory budget.
inline WordBallResult word_ball_orbit(const std::vector<Mapping>& generators,
                                      std::size_t max_len, const Point& x,
                                      std::size_t word_cap = 200000) {
  if (generators.empty()) throw std::invalid_argument("word_ball_orbit: no generators");
  std::vector<Mapping> gens = generators;
  for (const Mapping& g : generators) gens.push_back(inverse(g));

  const double quantum = 1e-9;
  auto key_of = [&](const Point& p) {
    std::vector<long long> key(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = std::llround(p[i] / quantum);
    return key;
  };

  WordBallResult out;
  std::map<std::vector<long long>, bool> seen;
  std::vector<Point> all{x}, frontier{x};
  seen[key_of(x)] = true;

  out.points_per_level.push_back(all);
  out.levels.push_back({0, all.size(), 0.0});

  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Point> next;
    for (const Point& p : frontier) {
      for (const Mapping& g : gens) {
        Point q = apply_box(g, p);
        auto key = key_of(q);
        if (!seen.count(key)) {
          seen[key] = true;
          next.push_back(q);
          all.push_back(std::move(q));
          if (all.size() > word_cap) {
            throw std::runtime_error("word_ball_orbit: word-count cap exceeded at length " +
                                     std::to_string(len));
          }
        }
      }
    }
    frontier = std::move(next);
    out.points_per_level.push_back(all);
    out.levels.push_back({len, all.size(), set_diameter(all)});
  }
  return out;
}

// Random cyclic group of sup-norm isometries: a signed permutation matrix
// conjugated by a translation, so T = tau_u S tau_u^{-1} has the same finite
// order as S and the whole cyclic group has exact uniform constant 1.
inline BoxAction make_random_isometry_action(Rng& rng, std::size_t dim, const Box& domain) {
  std::vector<int> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = dim; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  std::vector<double> sign(dim);
  for (std::size_t i = 0; i < dim; ++i) sign[i] = rng.uniform() < 0.5 ? 1.0 : -1.0;

  AffineMap s;
  s.dim = dim;
  s.a.assign(dim * dim, 0.0);
  s.b.assign(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) s.a[i * dim + perm[i]] = sign[i];

  // exact order of the signed permutation (at most 2 * lcm of cycle lengths)
  AffineMap power = s;
  std::size_t order = 1;
  auto is_identity = [&](const AffineMap& m) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double want = i == j ? 1.0 : 0.0;
        if (m.a[i * dim + j] != want) return false;
      }
    }
    return true;
  };
  while (!is_identity(power) && order < 128) {
    AffineMap nxt;
    nxt.dim = dim;
    nxt.a.assign(dim * dim, 0.0);
    nxt.b.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t < dim; ++t) acc += s.a[i * dim + t] * power.a[t * dim + j];
        nxt.a[i * dim + j] = acc;
      }
    }
    power = nxt;
    ++order;
  }

  Point u(dim);
  for (std::size_t i = 0; i < dim; ++i) u[i] = rng.uniform(domain.lo()[i], domain.hi()[i]) * 0.25;
  Point t(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double su = 0.0;
    for (std::size_t j = 0; j < dim; ++j) su += s.a[i * dim + j] * u[j];
    t[i] = u[i] - su;  // (I - S) u
  }

  BoxAction act;
  act.group = cyclic_group(order);
  act.domain.bounds = domain;
  AffineMap cur = affine_identity(dim);
  for (std::size_t k = 0; k < order; ++k) {
    act.maps.push_back(make_affine(cur));
    AffineMap nxt;
    nxt.dim = dim;
    nxt.a.assign(dim * dim, 0.0);
    nxt.b.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = t[i];
      for (std::size_t j = 0; j < dim; ++j) {
        acc += s.a[i * dim + j] * cur.b[j];
        double m = 0.0;
        for (std::size_t w = 0; w < dim; ++w) m += s.a[i * dim + w] * cur.a[w * dim + j];
        nxt.a[i * dim + j] = m;
      }
      nxt.b[i] = acc;
    }
    cur = nxt;
  }
  return act;
}

}  // namespace hyperfix

#endif
