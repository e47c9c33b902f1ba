#ifndef HYPERFIX_CIRCLE_SPACE_HPP
#define HYPERFIX_CIRCLE_SPACE_HPP

// Geodesic circle model: angles in [0, 2*pi) with arc-length metric, closed
// arcs as balls, and unions of disjoint arcs as admissible sets. Ball
// intersections here can be disconnected, which is exactly why this model is
// interesting: centers of two-point sets split into antipodal pairs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperfix/common.hpp"

namespace hyperfix {

struct CirclePoint {
  double angle = 0.0;  // normalized to [0, kTau)
};

inline double normalize_angle(double raw) {
  double a = std::fmod(raw, kTau);
  if (a < 0.0) a += kTau;
  if (a >= kTau) a = 0.0;  // fmod rounding can land exactly on kTau
  return a;
}

inline CirclePoint circle_point(double raw) { return CirclePoint{normalize_angle(raw)}; }

inline double circle_dist(CirclePoint a, CirclePoint b) {
  const double dd = std::abs(a.angle - b.angle);
  return std::min(dd, kTau - dd);
}

// Closed arc traversed counterclockwise from start; length kTau denotes the
// full circle, length 0 a single point.
struct Arc {
  double start = 0.0;   // in [0, kTau)
  double length = 0.0;  // in [0, kTau]

  bool operator==(const Arc&) const = default;
};

// Sorted union of pairwise-disjoint closed arcs in canonical form: arcs are
// ordered by start angle, never touch, and the full circle is the single arc
// {0, kTau}.
class ArcSet {
 public:
  using Interval = std::pair<double, double>;  // closed [a, b] within [0, kTau]

  static ArcSet empty() { return ArcSet(); }

  static ArcSet full() {
    ArcSet s;
    s.arcs_.push_back(Arc{0.0, kTau});
    return s;
  }

  static ArcSet from_arcs(const std::vector<Arc>& raw) {
    std::vector<Interval> iv;
    for (const Arc& a : raw) {
      if (a.length < 0.0) throw std::invalid_argument("ArcSet: negative arc length");
      if (a.length >= kTau) return full();
      append_split(iv, normalize_angle(a.start), a.length);
    }
    return from_intervals(std::move(iv));
  }

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const { return arcs_.size() == 1 && arcs_.front().length >= kTau; }

  bool contains(double angle, double tol = 0.0) const {
    if (is_full()) return true;
    const double a = normalize_angle(angle);
    for (const Arc& arc : arcs_) {
      double rel = a - arc.start;
      if (rel < 0.0) rel += kTau;
      if (rel <= arc.length + tol) return true;
      // a point just clockwise of start is within tol of the arc
      if (kTau - rel <= tol) return true;
    }
    return false;
  }

  ArcSet intersect(const ArcSet& other) const {
    if (is_full()) return other;
    if (other.is_full()) return *this;
    std::vector<Interval> mine = to_intervals(), theirs = other.to_intervals(), out;
    for (const Interval& p : mine) {
      for (const Interval& q : theirs) {
        const double lo = std::max(p.first, q.first);
        const double hi = std::min(p.second, q.second);
        if (lo <= hi) out.emplace_back(lo, hi);
      }
    }
    return from_intervals(std::move(out));
  }

  // Closure of the complement. The open/closed distinction at gap endpoints
  // is irrelevant for the co-ball computation, the only consumer.
  ArcSet closed_complement() const {
    if (is_empty()) return full();
    if (is_full()) return empty();
    std::vector<Arc> gaps;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const double end = normalize_angle(arcs_[i].start + arcs_[i].length);
      const double next = arcs_[(i + 1) % arcs_.size()].start;
      double len = next - end;
      if (arcs_.size() == 1) {
        len = kTau - arcs_[i].length;
      } else if (len < 0.0) {
        len += kTau;
      }
      gaps.push_back(Arc{end, len});
    }
    return from_arcs(gaps);
  }

  // Midpoints of the complementary gaps; the farthest-point candidates used
  // by the Hausdorff computation. A single point's unique gap midpoint is its
  // antipode.
  std::vector<double> gap_midpoints() const {
    std::vector<double> mids;
    if (is_empty() || is_full()) return mids;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const double end = normalize_angle(arcs_[i].start + arcs_[i].length);
      double len;
      if (arcs_.size() == 1) {
        len = kTau - arcs_[i].length;
      } else {
        len = arcs_[(i + 1) % arcs_.size()].start - end;
        if (len < 0.0) len += kTau;
      }
      mids.push_back(normalize_angle(end + len / 2.0));
    }
    return mids;
  }

  // Distance from an angle to the set (0 if inside; else nearest endpoint).
  double min_dist(double angle) const {
    if (is_empty()) throw std::invalid_argument("ArcSet::min_dist: empty set");
    if (contains(angle)) return 0.0;
    const CirclePoint p{normalize_angle(angle)};
    double best = kTau;
    for (const Arc& arc : arcs_) {
      best = std::min(best, circle_dist(p, CirclePoint{arc.start}));
      best = std::min(best, circle_dist(p, circle_point(arc.start + arc.length)));
    }
    return best;
  }

  // Distance from an angle to the farthest point of the set.
  double max_dist(double angle) const {
    if (is_empty()) throw std::invalid_argument("ArcSet::max_dist: empty set");
    const CirclePoint p{normalize_angle(angle)};
    const double antipode = normalize_angle(p.angle + kTau / 2.0);
    double worst = 0.0;
    for (const Arc& arc : arcs_) {
      double rel = antipode - arc.start;
      if (rel < 0.0) rel += kTau;
      if (rel <= arc.length) {
        worst = kTau / 2.0;  // the antipode lies inside this arc
      } else {
        worst = std::max(worst, circle_dist(p, CirclePoint{arc.start}));
        worst = std::max(worst, circle_dist(p, circle_point(arc.start + arc.length)));
      }
    }
    return worst;
  }

  // Nearest point of the set; exact ties resolved toward the smaller angle.
  CirclePoint nearest(double angle) const {
    if (is_empty()) throw std::invalid_argument("ArcSet::nearest: empty set");
    const double a = normalize_angle(angle);
    if (contains(a)) return CirclePoint{a};
    double best_dist = kTau;
    double best_angle = 0.0;
    auto consider = [&](double cand) {
      cand = normalize_angle(cand);
      const double d = circle_dist(CirclePoint{a}, CirclePoint{cand});
      if (d < best_dist || (d == best_dist && cand < best_angle)) {
        best_dist = d;
        best_angle = cand;
      }
    };
    for (const Arc& arc : arcs_) {
      consider(arc.start);
      consider(arc.start + arc.length);
    }
    return CirclePoint{best_angle};
  }

  std::vector<double> endpoints() const {
    std::vector<double> ends;
    for (const Arc& arc : arcs_) {
      ends.push_back(arc.start);
      ends.push_back(normalize_angle(arc.start + arc.length));
    }
    return ends;
  }

  // Split representation as closed intervals within [0, kTau]; an arc that
  // crosses 0 contributes two intervals.
  std::vector<Interval> to_intervals() const {
    std::vector<Interval> iv;
    for (const Arc& a : arcs_) append_split(iv, a.start, a.length);
    return iv;
  }

 private:
  static void append_split(std::vector<Interval>& iv, double start, double length) {
    const double end = start + length;
    if (end <= kTau) {
      iv.emplace_back(start, end);
    } else {
      iv.emplace_back(start, kTau);
      iv.emplace_back(0.0, end - kTau);
    }
  }

  static ArcSet from_intervals(std::vector<Interval> iv) {
    ArcSet s;
    if (iv.empty()) return s;
    std::sort(iv.begin(), iv.end());
    std::vector<Interval> merged;
    merged.push_back(iv.front());
    for (std::size_t i = 1; i < iv.size(); ++i) {
      if (iv[i].first <= merged.back().second) {
        merged.back().second = std::max(merged.back().second, iv[i].second);
      } else {
        merged.push_back(iv[i]);
      }
    }
    if (merged.size() == 1 && merged.front().first <= 0.0 && merged.front().second >= kTau) {
      return full();
    }
    // rejoin across the cut at 0
    bool wrap = merged.size() >= 2 && merged.front().first <= 0.0 && merged.back().second >= kTau;
    if (wrap) {
      const Interval head = merged.front();
      const Interval tail = merged.back();
      merged.erase(merged.begin());
      merged.pop_back();
      merged.push_back({tail.first, tail.first + (kTau - tail.first) + head.second});
      // length recorded below via second - first
    }
    for (const Interval& m : merged) {
      s.arcs_.push_back(Arc{normalize_angle(m.first), std::min(kTau, m.second - m.first)});
    }
    std::sort(s.arcs_.begin(), s.arcs_.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    return s;
  }

  std::vector<Arc> arcs_;
};

// Closed ball of the circle metric: an arc of length 2r for r < pi, the full
// circle once r reaches the diameter pi.
inline ArcSet circle_ball(CirclePoint c, double r) {
  if (r < 0.0) throw std::invalid_argument("circle_ball: negative radius");
  if (r >= kTau / 2.0) return ArcSet::full();
  return ArcSet::from_arcs({Arc{normalize_angle(c.angle - r), 2.0 * r}});
}

inline ArcSet arcset_intersect(const std::vector<ArcSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("arcset_intersect: empty list");
  ArcSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = acc.intersect(sets[i]);
  return acc;
}

// Points within r of *every* point of the set: the intersection over y in s
// of B(y, r). Per arc this is B(start, r) n B(end, r) minus the antipodal
// arc; the minus is realized with the closed complement, whose two boundary
// points are at distance exactly pi and therefore already excluded by the
// ball constraints whenever r < pi.
inline ArcSet circle_co_ball(const ArcSet& s, double r) {
  if (r < 0.0) throw std::invalid_argument("circle_co_ball: negative radius");
  if (s.is_empty()) return ArcSet::full();
  if (r >= kTau / 2.0) return ArcSet::full();
  ArcSet acc = ArcSet::full();
  for (const Arc& arc : s.arcs()) {
    const CirclePoint a{arc.start};
    const CirclePoint b = circle_point(arc.start + arc.length);
    ArcSet piece = circle_ball(a, r).intersect(circle_ball(b, r));
    const ArcSet antipodal =
        ArcSet::from_arcs({Arc{normalize_angle(arc.start + kTau / 2.0), arc.length}});
    piece = piece.intersect(antipodal.closed_complement());
    acc = acc.intersect(piece);
    if (acc.is_empty()) break;
  }
  return acc;
}

struct CircleChebyshev {
  double radius = 0.0;
  ArcSet center;
};

// Farthest-point distance from y to a finite set of circle points.
inline double circle_radius_at(CirclePoint y, const std::vector<CirclePoint>& k) {
  if (k.empty()) throw std::invalid_argument("circle_radius_at: empty set");
  double m = 0.0;
  for (const CirclePoint& p : k) m = std::max(m, circle_dist(y, p));
  return m;
}

// Exact Chebyshev radius and full (possibly disconnected) center set of a
// finite set of circle points. The farthest-point function is piecewise
// linear with slopes +-1, so its minimizers are isolated and lie among the
// sample points and the pairwise equidistant points (both determinations:
// the arithmetic mean of two angles and its antipode). Consecutive-gap
// midpoints alone are not enough: for K = {0, 0.2, pi + 0.1} the minimizer
// sits inside the gap behind the two extreme points but away from that gap's
// midpoint, at the antipodal mean of a non-consecutive pair.
inline CircleChebyshev circle_chebyshev(const std::vector<CirclePoint>& k) {
  if (k.empty()) throw std::invalid_argument("circle_chebyshev: empty set");
  std::vector<double> cand;
  for (const CirclePoint& p : k) cand.push_back(p.angle);
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const double mean = (k[i].angle + k[j].angle) / 2.0;
      cand.push_back(normalize_angle(mean));
      cand.push_back(normalize_angle(mean + kTau / 2.0));
    }
  }
  double best = kTau;
  for (double c : cand) best = std::min(best, circle_radius_at(CirclePoint{c}, k));
  std::vector<double> mins;
  for (double c : cand) {
    if (circle_radius_at(CirclePoint{c}, k) <= best + kGeomTol) mins.push_back(c);
  }
  std::sort(mins.begin(), mins.end());
  std::vector<double> uniq;
  for (double m : mins) {
    if (uniq.empty() || circle_dist(CirclePoint{uniq.back()}, CirclePoint{m}) > kGeomTol) {
      uniq.push_back(m);
    }
  }
  if (uniq.size() >= 2 &&
      circle_dist(CirclePoint{uniq.front()}, CirclePoint{uniq.back()}) <= kGeomTol) {
    uniq.pop_back();
  }
  std::vector<Arc> arcs;
  for (double m : uniq) arcs.push_back(Arc{m, 0.0});
  return CircleChebyshev{best, ArcSet::from_arcs(arcs)};
}

// Hausdorff distance between nonempty arc sets. The directed distance from A
// to B is attained either at an endpoint of an arc of A or at a gap midpoint
// of B that happens to lie in A; both candidate families are finite.
inline double arcset_hausdorff(const ArcSet& a, const ArcSet& b) {
  if (a.is_empty() || b.is_empty()) throw std::invalid_argument("arcset_hausdorff: empty input");
  auto directed = [](const ArcSet& from, const ArcSet& to) {
    double h = 0.0;
    for (double e : from.endpoints()) h = std::max(h, to.min_dist(e));
    for (double m : to.gap_midpoints()) {
      if (from.contains(m)) h = std::max(h, to.min_dist(m));
    }
    return h;
  };
  return std::max(directed(a, b), directed(b, a));
}

inline double circle_set_hausdorff(const std::vector<CirclePoint>& k,
                                   const std::vector<CirclePoint>& l) {
  if (k.empty() || l.empty()) throw std::invalid_argument("circle_set_hausdorff: empty input");
  auto directed = [](const std::vector<CirclePoint>& from, const std::vector<CirclePoint>& to) {
    double h = 0.0;
    for (const CirclePoint& p : from) {
      double nearest = circle_dist(p, to.front());
      for (std::size_t j = 1; j < to.size(); ++j) nearest = std::min(nearest, circle_dist(p, to[j]));
      h = std::max(h, nearest);
    }
    return h;
  };
  return std::max(directed(k, l), directed(l, k));
}

// Nearest point of a nonempty arc set to the given preference; exact ties go
// to the smaller angle.
inline CirclePoint select_in(const ArcSet& s, CirclePoint preference) {
  if (s.is_empty()) throw std::invalid_argument("select_in: empty set");
  return s.nearest(preference.angle);
}

// One family for the scaled-ball intersection check: balls centered inside
// an admissible set with pairwise-compatible radii.
struct BallFamily {
  ArcSet domain;  // nonempty admissible set D
  std::vector<CirclePoint> centers;
  std::vector<double> radii;
};

struct LambdaHyperconvexReport {
  double lambda = 0.0;
  std::size_t families = 0;
  std::size_t violations = 0;   // families whose scaled intersection is empty
  std::size_t malformed = 0;    // families violating the precondition
  std::vector<std::string> notes;
};

// Verifies D n (n_a B(x_a, lambda r_a)) != 0 for each family. Malformed
// families (center outside D, or pairwise condition broken) are reported
// rather than skipped.
inline LambdaHyperconvexReport check_lambda_hyperconvex(const std::vector<BallFamily>& families,
                                                        double lambda) {
  LambdaHyperconvexReport rep;
  rep.lambda = lambda;
  rep.families = families.size();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const BallFamily& fam = families[f];
    bool ok = !fam.domain.is_empty() && fam.centers.size() == fam.radii.size() &&
              !fam.centers.empty();
    if (ok) {
      for (std::size_t i = 0; i < fam.centers.size() && ok; ++i) {
        if (!fam.domain.contains(fam.centers[i].angle, kGeomTol)) ok = false;
        if (fam.radii[i] < 0.0) ok = false;
      }
      for (std::size_t i = 0; i < fam.centers.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < fam.centers.size(); ++j) {
          if (circle_dist(fam.centers[i], fam.centers[j]) >
              fam.radii[i] + fam.radii[j] + kGeomTol) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) {
      ++rep.malformed;
      rep.notes.push_back("family " + std::to_string(f) + ": precondition violated");
      continue;
    }
    std::vector<ArcSet> pieces{fam.domain};
    for (std::size_t i = 0; i < fam.centers.size(); ++i) {
      pieces.push_back(circle_ball(fam.centers[i], lambda * fam.radii[i]));
    }
    if (arcset_intersect(pieces).is_empty()) {
      ++rep.violations;
      rep.notes.push_back("family " + std::to_string(f) + ": scaled intersection empty");
    }
  }
  return rep;
}

}  // namespace hyperfix

#endif
