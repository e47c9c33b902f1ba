#ifndef HYPERFIX_VERIFY_HPP
#define HYPERFIX_VERIFY_HPP

// Property suites: every stability bound, contraction bound and counterexample at desk
// scale, behind a single aggregator. Failures are results, not errors; a
// suite passes iff its violation list is empty. All sampling is seeded and
// the suites run in a fixed order, so a verify run is reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperfix/catalog.hpp"
#include "hyperfix/oracles.hpp"
#include "hyperfix/retraction.hpp"

namespace hyperfix {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> violations;
  double max_slack = 0.0;  // max observed lhs - rhs over all <=-style checks
  std::uint64_t seed = 0;

  bool pass() const { return violations.empty(); }

  std::string line() const {
    return name + "," + std::to_string(cases) + "," + std::to_string(violations.size()) + "," +
           fmt17(max_slack) + "," + std::to_string(seed);
  }
};

struct VerifyOptions {
  std::uint64_t seed = 20250810ull;
  std::size_t samples = 10000;  // scales the documented per-suite counts
};

namespace suites {

inline std::size_t scaled(const VerifyOptions& o, std::size_t base) {
  const std::size_t n = base * o.samples / 10000;
  return n == 0 ? 1 : n;
}

inline void check(SuiteResult& r, bool ok, double slack, const std::string& inputs) {
  ++r.cases;
  r.max_slack = std::max(r.max_slack, slack);
  if (!ok) r.violations.push_back(inputs);
}

inline std::size_t rand_dim(Rng& rng) { return 1 + rng.index(6); }

inline Point rand_point(Rng& rng, std::size_t d, double lo = -3.0, double hi = 3.0) {
  Point p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = rng.uniform(lo, hi);
  return p;
}

inline PointSet rand_point_set(Rng& rng, std::size_t d, std::size_t max_n = 8) {
  PointSet k(1 + rng.index(max_n));
  for (Point& p : k) p = rand_point(rng, d);
  return k;
}

inline Box rand_box(Rng& rng, std::size_t d) {
  Point lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double a = rng.uniform(-3.0, 3.0);
    lo[i] = a;
    hi[i] = a + rng.uniform(0.0, 4.0);
  }
  return Box(std::move(lo), std::move(hi));
}

inline std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + fmt17(p[i]);
  return s + ")";
}

// --- box geometry -----------------------------------------------------------

inline SuiteResult box_metric_axioms(const VerifyOptions& o) {
  SuiteResult r{"box_metric_axioms"};
  r.seed = o.seed + 1;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const Point p = rand_point(rng, d), q = rand_point(rng, d), w = rand_point(rng, d);
    const double dpq = linf_dist(p, q);
    const double tri = linf_dist(p, w) - (dpq + linf_dist(q, w));
    const bool ok = dpq >= 0.0 && linf_dist(q, p) == dpq && linf_dist(p, p) == 0.0 &&
                    tri <= kGeomTol;
    check(r, ok, tri, "p=" + point_str(p) + " q=" + point_str(q) + " w=" + point_str(w));
  }
  return r;
}

inline SuiteResult box_hyperconvexity_witness(const VerifyOptions& o) {
  SuiteResult r{"box_hyperconvexity_witness"};
  r.seed = o.seed + 2;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const std::size_t k = 2 + rng.index(5);
    PointSet centers(k);
    std::vector<double> radii(k);
    for (std::size_t i = 0; i < k; ++i) {
      centers[i] = rand_point(rng, d);
      radii[i] = rng.uniform(0.0, 3.0);
    }
    double need = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        need = std::max(need, linf_dist(centers[i], centers[j]) - radii[i] - radii[j]);
      }
    }
    if (need > 0.0) {
      for (double& rad : radii) rad += need / 2.0 + 1e-9;
    }
    std::vector<Box> balls;
    for (std::size_t i = 0; i < k; ++i) balls.push_back(ball(centers[i], radii[i]));
    check(r, !intersect(balls).is_empty(), 0.0, "family of " + std::to_string(k) + " balls");
  }
  return r;
}

inline SuiteResult box_hausdorff_vs_grid(const VerifyOptions& o) {
  SuiteResult r{"box_hausdorff_vs_grid"};
  r.seed = o.seed + 3;
  Rng rng(r.seed);
  const double h = kDefaultGridStep;
  for (std::size_t s = 0, n = scaled(o, 1000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const Box a = rand_box(rng, d), b = rand_box(rng, d);
    const double closed = box_hausdorff(a, b);
    const double grid = grid_box_hausdorff(a, b, h);
    const double err = std::abs(closed - grid);
    check(r, err <= 2.0 * h, err - 2.0 * h, "pair " + std::to_string(s));
  }
  return r;
}

inline SuiteResult box_chebyshev_radius(const VerifyOptions& o) {
  SuiteResult r{"box_chebyshev_radius"};
  r.seed = o.seed + 4;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const PointSet k = rand_point_set(rng, rand_dim(rng));
    const auto cheb = chebyshev(k);
    const double err = std::abs(cheb.radius - set_diameter(k) / 2.0);
    bool ok = err <= kGeomTol && !cheb.center.is_empty();
    // every point of the center box, midpoint and corners included, sees K
    // at distance exactly r
    double att = std::abs(radius_at(midpoint(cheb.center), k) - cheb.radius);
    att = std::max(att, std::abs(radius_at(cheb.center.lo(), k) - cheb.radius));
    att = std::max(att, std::abs(radius_at(cheb.center.hi(), k) - cheb.radius));
    ok = ok && att <= kGeomTol;
    check(r, ok, std::max(err, att) - kGeomTol, "set of " + std::to_string(k.size()));
  }
  return r;
}

inline SuiteResult box_chebyshev_vs_grid(const VerifyOptions& o) {
  SuiteResult r{"box_chebyshev_vs_grid"};
  r.seed = o.seed + 5;
  Rng rng(r.seed);
  const double h = kDefaultGridStep;
  for (std::size_t s = 0, n = scaled(o, 100); s < n; ++s) {
    const std::size_t d = 1 + rng.index(6);
    const PointSet k = rand_point_set(rng, d);
    const auto cheb = chebyshev(k);
    const auto grid = grid_chebyshev(k, h);
    double err = std::abs(cheb.radius - grid.radius);
    for (std::size_t i = 0; i < d; ++i) {
      err = std::max(err, std::abs(cheb.center.lo()[i] - grid.center.lo()[i]));
      err = std::max(err, std::abs(cheb.center.hi()[i] - grid.center.hi()[i]));
    }
    check(r, err <= 2.0 * h, err - 2.0 * h, "set " + std::to_string(s));
  }
  return r;
}

inline SuiteResult box_radius_stability(const VerifyOptions& o) {
  SuiteResult r{"box_radius_stability"};
  r.seed = o.seed + 6;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const PointSet k = rand_point_set(rng, d), l = rand_point_set(rng, d);
    const double lhs = std::abs(chebyshev(k).radius - chebyshev(l).radius);
    const double rhs = set_hausdorff(k, l);
    check(r, lhs <= rhs + kAuditSlack, lhs - rhs, "pair " + std::to_string(s));
  }
  return r;
}

inline SuiteResult box_center_stability(const VerifyOptions& o) {
  SuiteResult r{"box_center_stability"};
  r.seed = o.seed + 7;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const PointSet k = rand_point_set(rng, d), l = rand_point_set(rng, d);
    const auto ck = chebyshev(k), cl = chebyshev(l);
    const double lhs = box_hausdorff(ck.center, cl.center);
    const double rhs = set_hausdorff(k, l) + std::abs(ck.radius - cl.radius);
    check(r, lhs <= rhs + kAuditSlack, lhs - rhs, "pair " + std::to_string(s));
  }
  return r;
}

inline SuiteResult box_center_doubling(const VerifyOptions& o) {
  SuiteResult r{"box_center_doubling"};
  r.seed = o.seed + 8;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const PointSet k = rand_point_set(rng, d), l = rand_point_set(rng, d);
    const double lhs = box_hausdorff(chebyshev(k).center, chebyshev(l).center);
    const double rhs = 2.0 * set_hausdorff(k, l);
    check(r, lhs <= rhs + kAuditSlack, lhs - rhs, "pair " + std::to_string(s));
  }
  // the doubling is attained: K = {(0,0)}, L = {(-1,1), (1,1)}
  const PointSet k{{0.0, 0.0}}, l{{-1.0, 1.0}, {1.0, 1.0}};
  const double dkl = set_hausdorff(k, l);
  const double dcc = box_hausdorff(chebyshev(k).center, chebyshev(l).center);
  check(r, std::abs(dkl - 1.0) <= kGeomTol && std::abs(dcc - 2.0) <= kGeomTol &&
               std::abs(dcc - 2.0 * dkl) <= kGeomTol,
        std::abs(dcc - 2.0 * dkl), "sharp pair");
  return r;
}

inline SuiteResult box_midpoint_lipschitz(const VerifyOptions& o) {
  SuiteResult r{"box_midpoint_lipschitz"};
  r.seed = o.seed + 9;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    const Box a = rand_box(rng, d), b = rand_box(rng, d);
    const double lhs = linf_dist(midpoint(a), midpoint(b));
    const double rhs = box_hausdorff(a, b);
    check(r, lhs <= rhs + kGeomTol, lhs - rhs, "pair " + std::to_string(s));
  }
  return r;
}

// --- circle geometry --------------------------------------------------------

inline SuiteResult circle_metric_axioms(const VerifyOptions& o) {
  SuiteResult r{"circle_metric_axioms"};
  r.seed = o.seed + 10;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 10000); s < n; ++s) {
    const CirclePoint p = circle_point(rng.uniform(0.0, kTau));
    const CirclePoint q = circle_point(rng.uniform(0.0, kTau));
    const CirclePoint w = circle_point(rng.uniform(0.0, kTau));
    const double dpq = circle_dist(p, q);
    const double tri = circle_dist(p, w) - (dpq + circle_dist(q, w));
    const bool ok = dpq >= 0.0 && dpq <= kTau / 2.0 && circle_dist(q, p) == dpq &&
                    circle_dist(p, p) == 0.0 && tri <= kGeomTol;
    check(r, ok, tri, "angles " + fmt17(p.angle) + "," + fmt17(q.angle) + "," + fmt17(w.angle));
  }
  return r;
}

inline std::vector<CirclePoint> rand_circle_set(Rng& rng, std::size_t max_n = 6) {
  std::vector<CirclePoint> k(1 + rng.index(max_n));
  for (CirclePoint& p : k) p = circle_point(rng.uniform(0.0, kTau));
  return k;
}

inline SuiteResult circle_radius_sandwich(const VerifyOptions& o) {
  SuiteResult r{"circle_radius_sandwich"};
  r.seed = o.seed + 11;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 1000); s < n; ++s) {
    const auto k = rand_circle_set(rng);
    const auto cheb = circle_chebyshev(k);
    double diam = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t j = i + 1; j < k.size(); ++j) diam = std::max(diam, circle_dist(k[i], k[j]));
    }
    // delta/2 <= r <= lambda * delta/2 with lambda = 2
    const double lo_gap = diam / 2.0 - cheb.radius;
    const double hi_gap = cheb.radius - diam;
    check(r, lo_gap <= kGeomTol && hi_gap <= kGeomTol, std::max(lo_gap, hi_gap),
          "set " + std::to_string(s));
  }
  return r;
}

inline SuiteResult circle_chebyshev_vs_grid(const VerifyOptions& o) {
  SuiteResult r{"circle_chebyshev_vs_grid"};
  r.seed = o.seed + 12;
  Rng rng(r.seed);
  const double h = kCircleGridStep;
  for (std::size_t s = 0, n = scaled(o, 100); s < n; ++s) {
    const auto k = rand_circle_set(rng);
    const auto cheb = circle_chebyshev(k);
    const auto grid = grid_circle_chebyshev(k, h);
    double err = std::abs(cheb.radius - grid.radius);
    // returned centers are genuine minimizers of the farthest-point function
    for (const Arc& a : cheb.center.arcs()) {
      err = std::max(err, circle_radius_at(CirclePoint{a.start}, k) - cheb.radius);
    }
    check(r, err <= 2.0 * h, err - 2.0 * h, "set " + std::to_string(s));
  }
  return r;
}

inline SuiteResult circle_radius_stability(const VerifyOptions& o) {
  SuiteResult r{"circle_radius_stability"};
  r.seed = o.seed + 13;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 1000); s < n; ++s) {
    const auto k = rand_circle_set(rng), l = rand_circle_set(rng);
    const double lhs = std::abs(circle_chebyshev(k).radius - circle_chebyshev(l).radius);
    const double rhs = circle_set_hausdorff(k, l);
    check(r, lhs <= rhs + kAuditSlack, lhs - rhs, "pair " + std::to_string(s));
  }
  return r;
}

// The two-point witness: centers jump by pi - eps/2 while the sets move by
// eps, so the hyperconvex center stability bound must fail on the circle.
inline SuiteResult circle_center_instability(const VerifyOptions& o) {
  SuiteResult r{"circle_center_instability"};
  r.seed = o.seed + 14;
  const double eps = 0.1;
  const std::vector<CirclePoint> k{circle_point(0.0), circle_point(kTau / 2.0)};
  const std::vector<CirclePoint> l{circle_point(kTau / 2.0 - eps), circle_point(0.0)};
  const auto ck = circle_chebyshev(k), cl = circle_chebyshev(l);
  const double dkl = circle_set_hausdorff(k, l);
  const double dcc = arcset_hausdorff(ck.center, cl.center);
  const double bound = dkl + std::abs(ck.radius - cl.radius);
  check(r, std::abs(dkl - eps) <= kGeomTol, std::abs(dkl - eps), "D(K,L)");
  check(r, std::abs(dcc - (kTau / 2.0 - eps / 2.0)) <= kAuditSlack,
        std::abs(dcc - (kTau / 2.0 - eps / 2.0)), "D(C(K),C(L))");
  check(r, std::abs(bound - 1.5 * eps) <= kAuditSlack, std::abs(bound - 1.5 * eps),
        "D(K,L)+|r(K)-r(L)|");
  check(r, dcc > bound + 1.0, bound - dcc, "violation present");
  return r;
}

inline std::vector<BallFamily> random_ball_families(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<BallFamily> fams;
  for (std::size_t f = 0; f < count; ++f) {
    BallFamily fam;
    if (rng.uniform() < 0.5) {
      fam.domain = ArcSet::full();
    } else {
      fam.domain = ArcSet::from_arcs({Arc{rng.uniform(0.0, kTau), rng.uniform(0.5, kTau - 0.01)}});
    }
    const std::size_t k = 2 + rng.index(3);
    for (std::size_t i = 0; i < k; ++i) {
      // a point of the domain: walk a random fraction into a random arc
      const Arc& a = fam.domain.arcs()[rng.index(fam.domain.arcs().size())];
      fam.centers.push_back(circle_point(a.start + rng.uniform() * a.length));
      fam.radii.push_back(rng.uniform(0.0, 1.5));
    }
    double need = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        need = std::max(need,
                        circle_dist(fam.centers[i], fam.centers[j]) - fam.radii[i] - fam.radii[j]);
      }
    }
    if (need > 0.0) {
      for (double& rad : fam.radii) rad += need / 2.0 + 1e-9;
    }
    fams.push_back(std::move(fam));
  }
  return fams;
}

// Three balls of radius tau/6 about equally spaced points: pairwise tangent,
// empty joint intersection. The circle is not hyperconvex.
inline BallFamily equilateral_family() {
  BallFamily fam;
  fam.domain = ArcSet::full();
  for (int i = 0; i < 3; ++i) {
    fam.centers.push_back(circle_point(i * (kTau / 3.0)));
    fam.radii.push_back(kTau / 6.0);
  }
  return fam;
}

inline SuiteResult circle_lambda2_hyperconvex(const VerifyOptions& o) {
  SuiteResult r{"circle_lambda2_hyperconvex"};
  r.seed = o.seed + 15;
  auto fams = random_ball_families(r.seed, scaled(o, 1000));
  fams.push_back(equilateral_family());
  const auto rep = check_lambda_hyperconvex(fams, 2.0);
  r.cases = rep.families;
  if (rep.malformed != 0) r.violations.push_back("malformed families: generator bug");
  for (const std::string& note : rep.notes) r.violations.push_back(note);
  return r;
}

inline SuiteResult circle_lambda1_fails(const VerifyOptions& o) {
  SuiteResult r{"circle_lambda1_fails"};
  r.seed = o.seed + 16;
  auto fams = random_ball_families(r.seed, scaled(o, 1000));
  const auto sampled = check_lambda_hyperconvex(fams, 1.0);
  const auto witness = check_lambda_hyperconvex({equilateral_family()}, 1.0);
  r.cases = sampled.families + witness.families;
  if (witness.violations != 1) {
    r.violations.push_back("equilateral witness unexpectedly has nonempty unscaled intersection");
  }
  if (sampled.violations + witness.violations == 0) {
    r.violations.push_back("no unscaled violation found: circle would look hyperconvex");
  }
  if (sampled.malformed + witness.malformed != 0) {
    r.violations.push_back("malformed families: generator bug");
  }
  return r;
}

// --- groups and actions -----------------------------------------------------

inline SuiteResult group_axioms(const VerifyOptions& o) {
  SuiteResult r{"group_axioms"};
  r.seed = o.seed + 17;
  Rng rng(r.seed);
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 6; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(cyclic_group(12));
  for (int i = 0; i < 5; ++i) {
    const std::size_t d = rand_dim(rng);
    Point lo(d, -5.0), hi(d, 5.0);
    groups.push_back(make_random_isometry_action(rng, d, Box(lo, hi)).group);
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto chk = verify_group(groups[g]);
    check(r, chk.valid(), 0.0, "group " + std::to_string(g) + " of order " +
                                  std::to_string(groups[g].order));
  }
  return r;
}

inline SuiteResult action_homomorphism(const VerifyOptions& o) {
  SuiteResult r{"action_homomorphism"};
  r.seed = o.seed + 18;
  Rng rng(r.seed);
  const std::size_t n = scaled(o, 1000);
  std::vector<std::pair<std::string, ActionCheck>> checks;
  checks.emplace_back("s1", verify_action(make_rotation4_action(), n, r.seed + 100));
  checks.emplace_back("s2", verify_action(make_skewed_rotation_action(), n, r.seed + 101));
  checks.emplace_back("s3", verify_action(make_involution_action(), n, r.seed + 102));
  checks.emplace_back("swap", verify_action(make_swap_action(), n, r.seed + 103));
  checks.emplace_back("mirror", verify_action(make_mirror_action(), n, r.seed + 104));
  checks.emplace_back("circle_rot", verify_action(make_circle_rotation_action(), n, r.seed + 105));
  checks.emplace_back("circle_anti", verify_action(make_circle_antipode_action(), n, r.seed + 106));
  for (int i = 0; i < 5; ++i) {
    const std::size_t d = rand_dim(rng);
    Point lo(d, -5.0), hi(d, 5.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    checks.emplace_back("random" + std::to_string(i), verify_action(act, n, r.seed + 200 + i));
  }
  for (const auto& [name, chk] : checks) {
    const double dev = std::max(chk.max_homomorphism_deviation, chk.max_identity_deviation);
    check(r, chk.pass(), dev - kAuditSlack, name);
  }
  return r;
}

inline SuiteResult action_dg_sandwich(const VerifyOptions& o) {
  SuiteResult r{"action_dg_sandwich"};
  r.seed = o.seed + 19;
  Rng rng(r.seed);
  const std::vector<BoxAction> acts{make_rotation4_action(), make_skewed_rotation_action(),
                                    make_involution_action(), make_swap_action()};
  const std::size_t per = scaled(o, 10000) / acts.size();
  for (std::size_t a = 0; a < acts.size(); ++a) {
    const double lip = *exact_lipschitz(acts[a]);
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(acts[a].domain, rng);
      const Point y = BoxSpace::sample(acts[a].domain, rng);
      const double d = linf_dist(x, y);
      const double dg = group_metric(acts[a], x, y);
      const double low = d - dg;                // d <= d_G
      const double high = dg - lip * d;         // d_G <= L d
      check(r, low <= kGeomTol && high <= kAuditSlack, std::max(low, high),
            "action " + std::to_string(a) + " pair " + std::to_string(s));
    }
  }
  return r;
}

inline SuiteResult action_dg_isometry(const VerifyOptions& o) {
  SuiteResult r{"action_dg_isometry"};
  r.seed = o.seed + 20;
  Rng rng(r.seed);
  const std::vector<BoxAction> acts{make_rotation4_action(), make_skewed_rotation_action(),
                                    make_swap_action()};
  const std::size_t per = scaled(o, 10000) / acts.size();
  for (std::size_t a = 0; a < acts.size(); ++a) {
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(acts[a].domain, rng);
      const Point y = BoxSpace::sample(acts[a].domain, rng);
      const double dg = group_metric(acts[a], x, y);
      const int e = static_cast<int>(rng.index(acts[a].group.order));
      const double moved = group_metric(acts[a], BoxSpace::apply(acts[a].maps[e], x),
                                        BoxSpace::apply(acts[a].maps[e], y));
      const double err = std::abs(moved - dg);
      check(r, err <= kAuditSlack, err - kAuditSlack,
            "action " + std::to_string(a) + " element " + std::to_string(e));
    }
  }
  return r;
}

inline SuiteResult orbit_stats_sandwich(const VerifyOptions& o) {
  SuiteResult r{"orbit_stats_sandwich"};
  r.seed = o.seed + 21;
  Rng rng(r.seed);
  // box actions: r = delta / 2 exactly
  const std::vector<BoxAction> acts{make_rotation4_action(), make_skewed_rotation_action(),
                                    make_involution_action(), make_swap_action()};
  const std::size_t per = scaled(o, 1000) / acts.size();
  for (const BoxAction& act : acts) {
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(act.domain, rng);
      const auto st = orbit_stats(act, x);
      const double err = std::abs(st.radius - st.diameter / 2.0);
      check(r, err <= kGeomTol, err - kGeomTol, "box orbit");
    }
  }
  // circle action: delta/2 <= r <= delta
  const CircleAction rot = make_circle_rotation_action();
  for (std::size_t s = 0; s < per; ++s) {
    const CirclePoint x = circle_point(rng.uniform(0.0, kTau));
    const auto st = orbit_stats(rot, x);
    const double lo_gap = st.diameter / 2.0 - st.radius;
    const double hi_gap = st.radius - st.diameter;
    check(r, lo_gap <= kGeomTol && hi_gap <= kGeomTol, std::max(lo_gap, hi_gap), "circle orbit");
  }
  return r;
}

inline SuiteResult orbit_diameter_transfer(const VerifyOptions& o) {
  SuiteResult r{"orbit_diameter_transfer"};
  r.seed = o.seed + 22;
  Rng rng(r.seed);
  for (std::size_t s = 0, n = scaled(o, 1000); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    Point lo(d, -5.0), hi(d, 5.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    const Point x = BoxSpace::sample(act.domain, rng);
    const Point y = BoxSpace::sample(act.domain, rng);
    const auto t = diameter_transfer(act, x, y, *exact_lipschitz(act));
    check(r, t.ok(), t.lhs - t.rhs, "pair " + std::to_string(s));
  }
  return r;
}

inline SuiteResult declared_lipschitz(const VerifyOptions& o) {
  SuiteResult r{"declared_lipschitz"};
  r.seed = o.seed + 23;
  Rng rng(r.seed);
  struct Item {
    std::string name;
    Mapping map;
    Box domain;
  };
  const std::vector<Item> items{
      {"involution_c0.4", make_breakpoint_involution(0.4), Box({0.0}, {1.0})},
      {"two_slope_a0.25", make_two_slope_map(0.25), Box({-1.0, -1.0}, {1.0, 1.0})},
      {"two_slope_a0.5", make_two_slope_map(0.5), Box({-1.0}, {1.0})},
  };
  const std::size_t per = scaled(o, 10000) / items.size();
  for (const Item& item : items) {
    const double declared = *item.map.declared_lipschitz;
    const auto exact = exact_lipschitz(item.map);
    double sampled = 0.0;
    BoxSpace::Domain dom{item.domain};
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(dom, rng);
      const Point y = BoxSpace::sample(dom, rng);
      const double d = linf_dist(x, y);
      if (d <= 0.0) continue;
      sampled = std::max(sampled, linf_dist(apply_box(item.map, x), apply_box(item.map, y)) / d);
    }
    const bool ok = sampled <= declared + 1e-6 && exact && *exact <= declared + kGeomTol;
    check(r, ok, sampled - declared, item.name);
  }
  return r;
}

inline SuiteResult word_ball_growth(const VerifyOptions& o) {
  SuiteResult r{"word_ball_growth"};
  r.seed = o.seed + 24;
  const auto res = word_ball_orbit(make_word_ball_generators(), 16, {0.0, 0.0});
  for (std::size_t i = 1; i < res.levels.size(); ++i) {
    check(r, res.levels[i].diameter >= res.levels[i - 1].diameter,
          res.levels[i - 1].diameter - res.levels[i].diameter, "monotone at length " +
                                                                   std::to_string(i));
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    const double diam = res.levels[2 * k].diameter;
    check(r, diam >= static_cast<double>(k), static_cast<double>(k) - diam,
          "growth at length " + std::to_string(2 * k));
  }
  return r;
}

// --- iteration audits -------------------------------------------------------

// Per-step inequalities of a finished trace: contraction ratio, Cauchy step
// bound, and the closing diameter-transfer estimate on the last iterates.
inline void audit_trace(SuiteResult& r, const BoxAction& act, const IterationTrace& t,
                        const std::string& label) {
  const double bound = t.ratio_bound();
  for (const TraceStep& s : t.steps) {
    if (s.has_ratio()) {
      check(r, s.ratio <= bound + kAuditSlack, s.ratio - bound, label + " ratio step " +
                                                                    std::to_string(s.n));
    }
    if (s.has_step_dist()) {
      const double cap = t.lambda * s.delta / 2.0;
      check(r, s.step_dist <= cap + kGeomTol, s.step_dist - cap, label + " step bound " +
                                                                     std::to_string(s.n));
    }
  }
  check(r, t.outcome == IterationOutcome::converged, 0.0, label + " outcome");
  check(r, t.final_residual <= 1e-8, t.final_residual - 1e-8, label + " residual");
  const Point fin = t.final_point;
  const double delta_fin = orbit_stats(act, fin).diameter;
  const std::size_t first = t.steps.size() > 3 ? t.steps.size() - 3 : 0;
  for (std::size_t i = first; i < t.steps.size(); ++i) {
    const double rhs =
        2.0 * t.lipschitz * linf_dist(fin, t.steps[i].x) + t.steps[i].delta;
    check(r, delta_fin <= rhs + kAuditSlack, delta_fin - rhs, label + " closing estimate");
  }
}

inline SuiteResult contraction_center(const VerifyOptions& o) {
  SuiteResult r{"contraction_center"};
  r.seed = o.seed + 25;
  Rng rng(r.seed);
  IterationConfig cfg;
  cfg.mode = IterationMode::center;

  cfg.start = {1.0, 0.0};
  audit_trace(r, make_rotation4_action(), iterate_action(make_rotation4_action(), cfg), "s1");
  cfg.start = {1.7, -2.3};
  audit_trace(r, make_skewed_rotation_action(), iterate_action(make_skewed_rotation_action(), cfg),
              "s2");

  for (std::size_t s = 0, n = scaled(o, 100); s < n; ++s) {
    const std::size_t d = rand_dim(rng);
    Point lo(d, -5.0), hi(d, 5.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    cfg.start = BoxSpace::sample(act.domain, rng);
    audit_trace(r, act, iterate_action(act, cfg), "random " + std::to_string(s));
  }
  return r;
}

inline SuiteResult contraction_inflated(const VerifyOptions& o) {
  SuiteResult r{"contraction_inflated"};
  r.seed = o.seed + 26;
  const BoxAction act = make_rotation4_action();

  IterationConfig loose;
  loose.mode = IterationMode::inflated_center;
  loose.lambda = 1.2;
  loose.start = {1.7, -2.2};
  const auto t = iterate_action(act, loose);
  const double bound = t.ratio_bound();  // L^2 lambda^2 / 2 = 0.72
  check(r, std::abs(bound - 0.72) <= kGeomTol, std::abs(bound - 0.72), "bound value");
  for (const TraceStep& s : t.steps) {
    if (s.has_ratio()) check(r, s.ratio <= bound + kAuditSlack, s.ratio - bound, "loose ratio");
    if (s.has_step_dist()) {
      const double cap = loose.lambda * s.delta / 2.0;
      check(r, s.step_dist <= cap + kGeomTol, s.step_dist - cap, "loose step");
    }
  }
  check(r, t.outcome == IterationOutcome::converged, 0.0, "loose outcome");

  // lambda = 1 reproduces the exact-center iterates bitwise
  IterationConfig a = loose, b = loose;
  a.lambda = 1.0;
  b.lambda = 1.0;
  b.mode = IterationMode::center;
  const auto ta = iterate_action(act, a), tb = iterate_action(act, b);
  bool same = ta.steps.size() == tb.steps.size();
  for (std::size_t i = 0; same && i < ta.steps.size(); ++i) {
    same = ta.steps[i].x == tb.steps[i].x && ta.steps[i].delta == tb.steps[i].delta;
  }
  check(r, same, 0.0, "lambda=1 reduction is bitwise");
  return r;
}

inline SuiteResult contraction_involution(const VerifyOptions& o) {
  SuiteResult r{"contraction_involution"};
  r.seed = o.seed + 27;
  IterationConfig cfg;
  cfg.start = {0.0};
  const auto t = iterate_involution<BoxSpace>(make_breakpoint_involution(0.4),
                                              BoxSpace::Domain{Box({0.0}, {1.0})}, cfg);
  check(r, t.outcome == IterationOutcome::converged, 0.0, "outcome");
  check(r, t.steps.size() >= 3, 0.0, "enough steps");
  if (t.steps.size() >= 3) {
    const double e2 = std::abs(t.steps[1].x[0] - 0.5);
    const double e3 = std::abs(t.steps[2].x[0] - 5.0 / 12.0);
    check(r, e2 <= kGeomTol, e2 - kGeomTol, "x2 = 1/2");
    check(r, e3 <= kGeomTol, e3 - kGeomTol, "x3 = 5/12");
  }
  const double bound = t.ratio_bound();  // L lambda^2 / 2 = 0.75
  check(r, std::abs(bound - 0.75) <= kGeomTol, std::abs(bound - 0.75), "bound value");
  for (const TraceStep& s : t.steps) {
    if (s.has_ratio()) check(r, s.ratio <= bound + kAuditSlack, s.ratio - bound, "ratio");
  }
  const double lim = std::abs(t.final_point[0] - 0.4);
  check(r, lim <= 1e-8, lim - 1e-8, "limit 0.4");

  // sign flip: symmetric involution fixes 0 in one step
  PwlFunction neg;
  neg.xs = {-1.0, 1.0};
  neg.ys = {1.0, -1.0};
  IterationConfig c2;
  c2.start = {0.8};
  const auto t2 =
      iterate_involution<BoxSpace>(make_pwl(neg, 1.0), BoxSpace::Domain{Box({-1.0}, {1.0})}, c2);
  check(r, t2.outcome == IterationOutcome::converged && std::abs(t2.final_point[0]) <= kGeomTol,
        std::abs(t2.final_point[0]), "t -> -t");
  return r;
}

inline SuiteResult circle_negative_runs(const VerifyOptions& o) {
  SuiteResult r{"circle_negative_runs"};
  r.seed = o.seed + 28;

  IterationConfig rot;
  rot.mode = IterationMode::inflated_center;
  rot.lambda = 2.0;
  rot.start = {0.3};
  const auto t1 = iterate_action(make_circle_rotation_action(), rot);
  check(r, t1.outcome == IterationOutcome::hypothesis_violated, 0.0, "rotation outcome");
  check(r, t1.final_residual >= 1.0, 1.0 - t1.final_residual, "rotation residual floor");

  IterationConfig anti;
  anti.lambda = 2.0;
  anti.start = {0.3};
  const auto t2 = iterate_involution<CircleSpace>(make_antipodal_map(), CircleSpace::Domain{}, anti);
  check(r, t2.outcome == IterationOutcome::hypothesis_violated, 0.0, "antipode outcome");
  check(r, t2.final_residual >= kTau / 2.0 - kAuditSlack,
        kTau / 2.0 - kAuditSlack - t2.final_residual, "antipode residual floor");

  // unscaled balls on the circle: the center construction must come up empty
  IterationConfig tight;
  tight.mode = IterationMode::inflated_center;
  tight.lambda = 1.0;
  tight.start = {0.3};
  const auto t3 = iterate_action(make_circle_rotation_action(), tight);
  check(r, t3.outcome == IterationOutcome::empty_center, 0.0, "unscaled centers empty");
  return r;
}

inline SuiteResult center_sets_vs_grid(const VerifyOptions& o) {
  SuiteResult r{"center_sets_vs_grid"};
  r.seed = o.seed + 29;
  Rng rng(r.seed);
  const double h = kDefaultGridStep;
  for (std::size_t s = 0, n = scaled(o, 100); s < n; ++s) {
    const std::size_t d = 1 + rng.index(3);
    Point lo(d, -4.0), hi(d, 4.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    const Point x = BoxSpace::sample(act.domain, rng);
    const PointSet pts = dedupe_points(orbit(act, x));
    const Box c = center_set(act, x);
    const auto grid = grid_chebyshev(pts, h);
    double err = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      err = std::max(err, std::abs(c.lo()[i] - grid.center.lo()[i]));
      err = std::max(err, std::abs(c.hi()[i] - grid.center.hi()[i]));
    }
    check(r, err <= 2.0 * h, err - 2.0 * h, "C vs grid, case " + std::to_string(s));

    // CC: points of C within r of every point of C, via 1-d scans over C
    const Box cc = double_center_set(act, x);
    const double rad = orbit_stats(act, x).radius;
    double cerr = 0.0;
    bool cc_grid_empty = false;
    for (std::size_t i = 0; i < d; ++i) {
      const auto gc = oracle::make_grid(c.lo()[i], std::max(c.lo()[i], c.hi()[i]), h);
      double mn = std::numeric_limits<double>::infinity();
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t < gc.count; ++t) {
        const double y = gc.at(t);
        double far = 0.0;
        for (std::size_t u = 0; u < gc.count; ++u) far = std::max(far, std::abs(y - gc.at(u)));
        if (far <= rad + h) {
          mn = std::min(mn, y);
          mx = std::max(mx, y);
        }
      }
      if (mn > mx) {
        cc_grid_empty = true;
        break;
      }
      cerr = std::max(cerr, std::abs(cc.lo()[i] - mn));
      cerr = std::max(cerr, std::abs(cc.hi()[i] - mx));
    }
    check(r, !cc.is_empty() && !cc_grid_empty && cerr <= 2.0 * h, cerr - 2.0 * h,
          "CC vs grid, case " + std::to_string(s));
  }
  return r;
}

// --- retraction -------------------------------------------------------------

inline SuiteResult selection_bounds(const VerifyOptions& o) {
  SuiteResult r{"selection_bounds"};
  r.seed = o.seed + 30;
  Rng rng(r.seed);
  const std::vector<BoxAction> acts{make_rotation4_action(), make_skewed_rotation_action(),
                                    make_involution_action(), make_swap_action(),
                                    make_mirror_action()};
  const std::size_t per = scaled(o, 10000) / acts.size();
  for (std::size_t a = 0; a < acts.size(); ++a) {
    const double lip = *exact_lipschitz(acts[a]);
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(acts[a].domain, rng);
      const Point y = BoxSpace::sample(acts[a].domain, rng);
      const Box ccx = double_center_set(acts[a], x), ccy = double_center_set(acts[a], y);
      const Point fx = select_center(acts[a], x), fy = select_center(acts[a], y);
      bool ok = ccx.contains(fx) && ccy.contains(fy);
      const double d = linf_dist(x, y);
      const double df = linf_dist(fx, fy);
      double slack = 0.0;
      if (d > 0.0) {
        slack = df - 4.0 * lip * d;
        ok = ok && slack <= kAuditSlack;
      }
      const double mid_gap = df - box_hausdorff(ccx, ccy);
      ok = ok && mid_gap <= kGeomTol;
      check(r, ok, std::max(slack, mid_gap), "action " + std::to_string(a));
    }
  }
  return r;
}

inline SuiteResult chain_bounds(const VerifyOptions& o) {
  SuiteResult r{"chain_bounds"};
  r.seed = o.seed + 31;
  const std::vector<BoxAction> acts{make_rotation4_action(), make_skewed_rotation_action(),
                                    make_involution_action(), make_swap_action(),
                                    make_mirror_action()};
  const std::size_t per = scaled(o, 10000) / acts.size();
  for (std::size_t a = 0; a < acts.size(); ++a) {
    const double lip = *exact_lipschitz(acts[a]);
    const auto c = chain_check(acts[a], per, r.seed + a);
    const double worst = std::max({c.max_orbit_ratio - lip, c.max_center_ratio - 2.0 * lip,
                                   c.max_double_center_ratio - 4.0 * lip});
    check(r, c.within(lip), worst, "action " + std::to_string(a));
  }
  // embedded sharp pair: orbits of the mirror action at (0,0) and (-1,1)
  const BoxAction mirror = make_mirror_action();
  const PointSet ox = dedupe_points(orbit(mirror, {0.0, 0.0}));
  const PointSet oy = dedupe_points(orbit(mirror, {-1.0, 1.0}));
  const double doo = set_hausdorff(ox, oy);
  const double dcc = box_hausdorff(center_set(mirror, {0.0, 0.0}), center_set(mirror, {-1.0, 1.0}));
  check(r, std::abs(doo - 1.0) <= kGeomTol && std::abs(dcc - 2.0 * doo) <= kGeomTol,
        std::abs(dcc - 2.0 * doo), "sharp orbit pair");
  return r;
}

inline SuiteResult retraction_laws(const VerifyOptions& o) {
  SuiteResult r{"retraction_laws"};
  r.seed = o.seed + 32;
  Rng rng(r.seed);
  struct Case {
    std::string name;
    BoxAction act;
    PointSet known_fixed;
  };
  const std::vector<Case> cases{
      {"s1", make_rotation4_action(), {{0.0, 0.0}}},
      {"s2", make_skewed_rotation_action(), {{0.6, -0.8}}},
      {"s3", make_involution_action(), {{0.4}}},
      {"swap", make_swap_action(), {{1.25, 1.25, -2.0}, {-0.5, -0.5, 3.0}}},
  };
  const std::size_t per = scaled(o, 100);
  for (const Case& c : cases) {
    const double lip = *exact_lipschitz(c.act);
    const double gamma = lip * lip / 2.0;
    for (std::size_t s = 0; s < per; ++s) {
      const Point x = BoxSpace::sample(c.act.domain, rng);
      const auto res = retract(c.act, x);
      const Point rx = res.point;
      bool ok = residual(c.act, rx) <= 1e-8;                       // T_a R = R
      ok = ok && linf_dist(retract(c.act, rx).point, rx) <= 1e-8;  // R o R = R
      for (const TraceStep& st : res.trace.steps) {
        if (st.has_ratio() && st.ratio > gamma + kAuditSlack) ok = false;
      }
      check(r, ok, residual(c.act, rx) - 1e-8, c.name + " sample " + std::to_string(s));
    }
    for (const Point& fx : c.known_fixed) {
      const double moved = linf_dist(retract(c.act, fx).point, fx);
      check(r, moved <= 1e-8, moved - 1e-8, c.name + " fixed point kept");
    }
  }
  return r;
}

inline SuiteResult holder_decades(const VerifyOptions& o) {
  SuiteResult r{"holder_decades"};
  r.seed = o.seed + 33;
  struct Case {
    std::string name;
    BoxAction act;
  };
  const std::vector<Case> cases{
      {"s1", make_rotation4_action()},
      {"s2", make_skewed_rotation_action()},
      {"swap", make_swap_action()},
  };
  const std::size_t per = std::max<std::size_t>(5, scaled(o, 100) / 4);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto scan = holder_scan(cases[i].act, per, r.seed + i);
    double worst = 0.0;
    for (const HolderDecade& d : scan.decades) worst = std::max(worst, d.max_ratio);
    check(r, scan.bounded(), worst, cases[i].name + " alpha=" + fmt17(scan.alpha));
  }
  return r;
}

}  // namespace suites

inline std::vector<SuiteResult> verify_all(const VerifyOptions& o = {}) {
  using namespace suites;
  std::vector<SuiteResult> out;
  out.push_back(box_metric_axioms(o));
  out.push_back(box_hyperconvexity_witness(o));
  out.push_back(box_hausdorff_vs_grid(o));
  out.push_back(box_chebyshev_radius(o));
  out.push_back(box_chebyshev_vs_grid(o));
  out.push_back(box_radius_stability(o));
  out.push_back(box_center_stability(o));
  out.push_back(box_center_doubling(o));
  out.push_back(box_midpoint_lipschitz(o));
  out.push_back(circle_metric_axioms(o));
  out.push_back(circle_radius_sandwich(o));
  out.push_back(circle_chebyshev_vs_grid(o));
  out.push_back(circle_radius_stability(o));
  out.push_back(circle_center_instability(o));
  out.push_back(circle_lambda2_hyperconvex(o));
  out.push_back(circle_lambda1_fails(o));
  out.push_back(group_axioms(o));
  out.push_back(action_homomorphism(o));
  out.push_back(action_dg_sandwich(o));
  out.push_back(action_dg_isometry(o));
  out.push_back(orbit_stats_sandwich(o));
  out.push_back(orbit_diameter_transfer(o));
  out.push_back(declared_lipschitz(o));
  out.push_back(word_ball_growth(o));
  out.push_back(contraction_center(o));
  out.push_back(contraction_inflated(o));
  out.push_back(contraction_involution(o));
  out.push_back(circle_negative_runs(o));
  out.push_back(center_sets_vs_grid(o));
  out.push_back(selection_bounds(o));
  out.push_back(chain_bounds(o));
  out.push_back(retraction_laws(o));
  out.push_back(holder_decades(o));
  return out;
}

}  // namespace hyperfix

#endif
