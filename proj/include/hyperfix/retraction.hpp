#ifndef HYPERFIX_RETRACTION_HPP
#define HYPERFIX_RETRACTION_HPP

// The constructive selection f(x) = midpoint(CC(x)), its Lipschitz chain
//   D(O(x), O(y))  <= L   d(x, y)
//   D(C(x), C(y))  <= 2L  d(x, y)
//   D(CC(x), CC(y)) <= 4L d(x, y)
// and the limit retraction R(x) = lim f^n(x) onto the common fixed-point
// set, together with Holder-continuity monitoring. Box model only: the
// circle model carries no such guarantee.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperfix/fixpoint.hpp"

namespace hyperfix {

// The selection into the double center. The box midpoint is 1-Lipschitz from
// (boxes, Hausdorff) to (points, linf), so f inherits the 4L chain bound.
inline Point select_center(const BoxAction& act, const Point& x) {
  const Box cc = double_center_set(act, x);
  if (cc.is_empty()) throw std::invalid_argument("select_center: empty double center");
  return midpoint(cc);
}

struct RetractionResult {
  Point point;
  IterationTrace trace;
};

// Iterates the selection until the orbit diameter drops below tol. Runs with
// L >= sqrt(2) are still produced, labeled by the trace's hypothesis flag.
inline RetractionResult retract(const BoxAction& act, const Point& x,
                                double tol = kDefaultIterTol, int max_iter = kDefaultMaxIter) {
  IterationConfig cfg;
  cfg.start = x;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.lambda = 1.0;
  cfg.mode = IterationMode::center;
  IterationTrace trace = iterate_action(act, cfg);
  return RetractionResult{trace.final_point, std::move(trace)};
}

struct ChainCheck {
  std::size_t pairs = 0;
  std::uint64_t seed = 0;
  double max_orbit_ratio = 0.0;          // D(O(x),O(y)) / d(x,y)
  double max_center_ratio = 0.0;         // D(C(x),C(y)) / d(x,y)
  double max_double_center_ratio = 0.0;  // D(CC(x),CC(y)) / d(x,y)

  bool within(double lipschitz, double slack = kAuditSlack) const {
    return max_orbit_ratio <= lipschitz + slack && max_center_ratio <= 2.0 * lipschitz + slack &&
           max_double_center_ratio <= 4.0 * lipschitz + slack;
  }
};

// Samples pairs and reports the largest observed ratio for each link of the
// chain; exact orbit and center computations throughout.
inline ChainCheck chain_check(const BoxAction& act, std::size_t pairs, std::uint64_t seed) {
  ChainCheck c;
  c.pairs = pairs;
  c.seed = seed;
  Rng rng(seed);
  for (std::size_t s = 0; s < pairs; ++s) {
    const Point x = BoxSpace::sample(act.domain, rng);
    const Point y = BoxSpace::sample(act.domain, rng);
    const double d = linf_dist(x, y);
    if (d <= 0.0) continue;
    const PointSet ox = dedupe_points(orbit(act, x));
    const PointSet oy = dedupe_points(orbit(act, y));
    c.max_orbit_ratio = std::max(c.max_orbit_ratio, set_hausdorff(ox, oy) / d);
    c.max_center_ratio =
        std::max(c.max_center_ratio, box_hausdorff(center_set(act, x), center_set(act, y)) / d);
    c.max_double_center_ratio =
        std::max(c.max_double_center_ratio,
                 box_hausdorff(double_center_set(act, x), double_center_set(act, y)) / d);
  }
  return c;
}

// Holder exponent for the retraction, from the standard two-term split
// d(Rx, Ry) <= 2 c gamma^n / (1 - gamma) + k^n d(x, y) with k = 4L and
// gamma = L^2 / 2, optimized over n:
//   alpha = ln(1/gamma) / ln(k/gamma) = ln(2/L^2) / ln(8/L).
inline double holder_exponent(double lipschitz) {
  if (!(lipschitz >= 1.0) || !(lipschitz < std::sqrt(2.0))) {
    throw std::invalid_argument("holder_exponent: requires 1 <= L < sqrt(2)");
  }
  return std::log(2.0 / (lipschitz * lipschitz)) / std::log(8.0 / lipschitz);
}

struct HolderPair {
  double scale = 0.0;
  double d_xy = 0.0;
  double d_rxy = 0.0;
  double ratio = 0.0;  // d(Rx, Ry) / d(x, y)^alpha
};

struct HolderDecade {
  double scale = 0.0;     // pair distance 10^-k
  std::size_t pairs = 0;
  double max_ratio = 0.0;  // d(Rx, Ry) / d(x, y)^alpha
};

struct HolderScan {
  double alpha = 0.0;
  double lipschitz = 0.0;
  std::uint64_t seed = 0;
  std::vector<HolderDecade> decades;
  std::vector<HolderPair> pairs;

  // Converged retractions carry O(tol) numerical noise, so decades whose
  // ratios sit below the floor are treated as flat; a genuine Holder failure
  // produces O(1) ratios that the floor cannot mask.
  bool bounded(double noise_floor = 1e-6) const {
    if (decades.empty()) return false;
    const double first = decades.front().max_ratio;
    for (const HolderDecade& d : decades) {
      if (d.max_ratio > std::max(2.0 * first, noise_floor)) return false;
    }
    return true;
  }
};

// Samples pairs at distance scales 1, 1e-1, 1e-2, 1e-3 and reports the worst
// ratio d(Rx, Ry) / d(x, y)^alpha per decade.
inline HolderScan holder_scan(const BoxAction& act, std::size_t pairs_per_decade,
                              std::uint64_t seed, double tol = kDefaultIterTol,
                              int max_iter = kDefaultMaxIter) {
  HolderScan scan;
  scan.seed = seed;
  const auto exact = exact_lipschitz(act);
  scan.lipschitz = exact ? *exact
                         : estimate_lipschitz(act, detail::kLipschitzProbeSamples,
                                              detail::kLipschitzProbeSeed);
  scan.alpha = holder_exponent(scan.lipschitz);
  Rng rng(seed);
  const std::size_t dim = act.domain.bounds.dim();
  for (int decade = 0; decade < 4; ++decade) {
    HolderDecade row;
    row.scale = std::pow(10.0, -decade);
    row.pairs = pairs_per_decade;
    for (std::size_t s = 0; s < pairs_per_decade; ++s) {
      const Point x = BoxSpace::sample(act.domain, rng);
      Point dir(dim);
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        dir[i] = rng.uniform(-1.0, 1.0);
        norm = std::max(norm, std::abs(dir[i]));
      }
      if (norm <= 0.0) {
        dir[0] = 1.0;
        norm = 1.0;
      }
      Point y = x;
      for (std::size_t i = 0; i < dim; ++i) y[i] += dir[i] / norm * row.scale;
      const double d = linf_dist(x, y);
      if (d <= 0.0) continue;
      const Point rx = retract(act, x, tol, max_iter).point;
      const Point ry = retract(act, y, tol, max_iter).point;
      const double drr = linf_dist(rx, ry);
      const double ratio = drr / std::pow(d, scan.alpha);
      scan.pairs.push_back(HolderPair{row.scale, d, drr, ratio});
      row.max_ratio = std::max(row.max_ratio, ratio);
    }
    scan.decades.push_back(row);
  }
  return scan;
}

// Full retraction report: per-sample retractions, the observed chain
// constants, and the Holder decade data.
struct RetractionReport {
  struct Sample {
    Point x;
    Point rx;
    int iterations = 0;
    double residual = 0.0;
  };

  double tol = kDefaultIterTol;
  double lipschitz = 0.0;
  std::uint64_t seed = 0;
  std::vector<Sample> samples;
  ChainCheck chain;
  HolderScan holder;

  bool laws_hold() const {
    for (const Sample& s : samples) {
      if (s.residual > tol * 100.0) return false;
    }
    return true;
  }

  // One row per Holder pair: distance scale, input and image distances, and
  // the Holder ratio at the theoretical exponent.
  std::string to_csv() const {
    std::string out = "scale,d_xy,d_Rx_Ry,ratio\n";
    for (const HolderPair& p : holder.pairs) {
      out += fmt17(p.scale) + "," + fmt17(p.d_xy) + "," + fmt17(p.d_rxy) + "," +
             fmt17(p.ratio) + "\n";
    }
    return out;
  }

  std::string summary() const {
    std::string s;
    s += "samples = " + std::to_string(samples.size()) + "\n";
    s += "lipschitz = " + fmt17(lipschitz) + "\n";
    s += "tol = " + fmt17(tol) + "\n";
    s += "seed = " + std::to_string(seed) + "\n";
    s += "laws_hold = " + std::string(laws_hold() ? "yes" : "no") + "\n";
    s += "chain_orbit = " + fmt17(chain.max_orbit_ratio) + "\n";
    s += "chain_center = " + fmt17(chain.max_center_ratio) + "\n";
    s += "chain_double_center = " + fmt17(chain.max_double_center_ratio) + "\n";
    s += "holder_alpha = " + fmt17(holder.alpha) + "\n";
    for (const HolderDecade& d : holder.decades) {
      s += "holder_max_ratio_at_" + fmt17(d.scale) + " = " + fmt17(d.max_ratio) + "\n";
    }
    s += "holder_bounded = " + std::string(holder.bounded() ? "yes" : "no") + "\n";
    return s;
  }
};

inline RetractionReport retraction_report(const BoxAction& act, std::size_t samples,
                                          std::size_t chain_pairs,
                                          std::size_t holder_pairs_per_decade,
                                          std::uint64_t seed, double tol = kDefaultIterTol,
                                          int max_iter = kDefaultMaxIter) {
  RetractionReport rep;
  rep.tol = tol;
  rep.seed = seed;
  const auto exact = exact_lipschitz(act);
  rep.lipschitz = exact ? *exact
                        : estimate_lipschitz(act, detail::kLipschitzProbeSamples,
                                             detail::kLipschitzProbeSeed);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = BoxSpace::sample(act.domain, rng);
    const auto res = retract(act, x, tol, max_iter);
    rep.samples.push_back(RetractionReport::Sample{
        x, res.point, static_cast<int>(res.trace.steps.size()), res.trace.final_residual});
  }
  rep.chain = chain_check(act, chain_pairs, seed + 1);
  rep.holder = holder_scan(act, holder_pairs_per_decade, seed + 2, tol, max_iter);
  return rep;
}

}  // namespace hyperfix

#endif
