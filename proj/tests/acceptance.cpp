// Acceptance suite: one pass/fail line per criterion, full sample counts,
// wall-clock budgets checked in-process. Exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperfix/scenario.hpp"
#include "hyperfix/verify.hpp"

using namespace hyperfix;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string what;
  bool ok = true;
  std::string detail;
  double ms = 0.0;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    } else if (!cond) {
      detail += "; " + why;
    }
  }

  void finish() {
    std::printf("[%s] criterion %d: %s (%.2f ms)%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                ms, ok ? "" : " -- ", ok ? "" : detail.c_str());
    if (!ok) ++g_failures;
  }
};

template <class F>
void run_criterion(int id, const std::string& what, double budget_ms, F body) {
  Criterion c{id, what};
  const auto t0 = std::chrono::steady_clock::now();
  body(c);
  c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (budget_ms > 0.0) {
    c.require(c.ms < budget_ms, "runtime " + std::to_string(c.ms) + " ms over budget " +
                                    std::to_string(budget_ms) + " ms");
  }
  c.finish();
}

std::string scenario_path(const std::string& file) {
  return std::string(HYPERFIX_SCENARIO_DIR) + "/" + file;
}

}  // namespace

int main() {
  const auto wall0 = std::chrono::steady_clock::now();

  // 1. Sharp center-doubling pair in (R^2, linf), exact to 1e-12, < 1 ms.
  run_criterion(1, "sharp doubling pair: D(K,L) = 1 and D(C(K),C(L)) = 2 exactly", 1.0,
                [](Criterion& c) {
                  const PointSet k{{0.0, 0.0}}, l{{-1.0, 1.0}, {1.0, 1.0}};
                  const double dkl = set_hausdorff(k, l);
                  const double dcc =
                      box_hausdorff(chebyshev(k).center, chebyshev(l).center);
                  c.require(std::abs(dkl - 1.0) <= 1e-12, "D(K,L) = " + fmt17(dkl));
                  c.require(std::abs(dcc - 2.0) <= 1e-12, "D(C,C) = " + fmt17(dcc));
                });

  // 2. Circle counterexample with eps = 0.1: D(K,L) = 0.1, D(C,C) = pi - 0.05,
  //    and the center stability bound is violated. < 1 ms.
  run_criterion(2, "circle instability: D(C(K),C(L)) = pi - 0.05 breaks the center bound", 1.0,
                [](Criterion& c) {
                  const double eps = 0.1;
                  const std::vector<CirclePoint> k{circle_point(0.0), circle_point(kTau / 2.0)};
                  const std::vector<CirclePoint> l{circle_point(kTau / 2.0 - eps),
                                                   circle_point(0.0)};
                  const auto ck = circle_chebyshev(k), cl = circle_chebyshev(l);
                  const double dkl = circle_set_hausdorff(k, l);
                  const double dcc = arcset_hausdorff(ck.center, cl.center);
                  c.require(std::abs(dkl - 0.1) <= 1e-9, "D(K,L) = " + fmt17(dkl));
                  c.require(std::abs(dcc - (kTau / 2.0 - 0.05)) <= 1e-9,
                            "D(C,C) = " + fmt17(dcc));
                  const double bound = dkl + std::abs(ck.radius - cl.radius);
                  c.require(dcc > bound, "no violation: bound " + fmt17(bound));
                });

  // 3. Center-iteration contraction audit over s1, s2 and 100 random
  //    isometry-group scenarios: ratios <= L^2/2 + 1e-9, residual <= 1e-8,
  //    < 10 s total.
  run_criterion(3, "center iteration: ratios <= L^2/2 + 1e-9 on s1, s2, 100 random groups",
                10000.0, [](Criterion& c) {
                  auto audit = [&](const BoxAction& act, const IterationTrace& t,
                                   const std::string& tag) {
                    const double bound = t.lipschitz * t.lipschitz / 2.0;
                    for (const TraceStep& s : t.steps) {
                      if (s.has_ratio()) {
                        c.require(s.ratio <= bound + 1e-9,
                                  tag + ": ratio " + fmt17(s.ratio) + " > " + fmt17(bound));
                      }
                    }
                    c.require(t.outcome == IterationOutcome::converged, tag + ": not converged");
                    c.require(t.final_residual <= 1e-8,
                              tag + ": residual " + fmt17(t.final_residual));
                    (void)act;
                  };
                  IterationConfig cfg;
                  cfg.start = {1.0, 0.0};
                  audit(make_rotation4_action(), iterate_action(make_rotation4_action(), cfg),
                        "s1");
                  cfg.start = {1.7, -2.3};
                  audit(make_skewed_rotation_action(),
                        iterate_action(make_skewed_rotation_action(), cfg), "s2");
                  Rng rng(0xACCE55);
                  for (int s = 0; s < 100; ++s) {
                    const std::size_t d = 1 + rng.index(6);
                    Point lo(d, -5.0), hi(d, 5.0);
                    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
                    c.require(act.group.order <= 48, "group order over 48");
                    IterationConfig rcfg;
                    rcfg.start = BoxSpace::sample(act.domain, rng);
                    audit(act, iterate_action(act, rcfg), "random " + std::to_string(s));
                  }
                });

  // 4. The c = 0.4 involution (L = 1.5): converges to 0.4 within 1e-8, all
  //    ratios <= 0.75 + 1e-9, first iterates 1/2 and 5/12 within 1e-12.
  run_criterion(4, "breakpoint involution: iterates 1/2, 5/12 and limit 0.4", 0.0,
                [](Criterion& c) {
                  IterationConfig cfg;
                  cfg.start = {0.0};
                  const auto t = iterate_involution<BoxSpace>(
                      make_breakpoint_involution(0.4), BoxSpace::Domain{Box({0.0}, {1.0})}, cfg);
                  c.require(t.outcome == IterationOutcome::converged, "not converged");
                  c.require(t.steps.size() >= 3, "too few steps");
                  if (t.steps.size() >= 3) {
                    c.require(std::abs(t.steps[1].x[0] - 0.5) <= 1e-12,
                              "x2 = " + fmt17(t.steps[1].x[0]));
                    c.require(std::abs(t.steps[2].x[0] - 5.0 / 12.0) <= 1e-12,
                              "x3 = " + fmt17(t.steps[2].x[0]));
                  }
                  c.require(std::abs(t.final_point[0] - 0.4) <= 1e-8,
                            "limit " + fmt17(t.final_point[0]));
                  for (const TraceStep& s : t.steps) {
                    if (s.has_ratio()) {
                      c.require(s.ratio <= 0.75 + 1e-9, "ratio " + fmt17(s.ratio));
                    }
                  }
                });

  // 5. Radius / center / doubling stability suites: 1e4 random pairs, d <= 6,
  //    zero violations beyond 1e-9, < 5 s.
  run_criterion(5, "radius and center stability on 1e4 random finite-set pairs", 5000.0, [](Criterion& c) {
    Rng rng(0x1e4a);
    for (int s = 0; s < 10000; ++s) {
      const std::size_t d = 1 + rng.index(6);
      auto sample_set = [&](std::size_t n) {
        PointSet k(n);
        for (auto& p : k) {
          p = Point(d);
          for (std::size_t i = 0; i < d; ++i) p[i] = rng.uniform(-3.0, 3.0);
        }
        return k;
      };
      const PointSet k = sample_set(1 + rng.index(8)), l = sample_set(1 + rng.index(8));
      const auto ck = chebyshev(k), cl = chebyshev(l);
      const double dkl = set_hausdorff(k, l);
      const double dr = std::abs(ck.radius - cl.radius);
      const double dcc = box_hausdorff(ck.center, cl.center);
      c.require(dr <= dkl + 1e-9, "radius bound at sample " + std::to_string(s));
      c.require(dcc <= dkl + dr + 1e-9, "center bound at sample " + std::to_string(s));
      c.require(dcc <= 2.0 * dkl + 1e-9, "doubling at sample " + std::to_string(s));
    }
  });

  // 6. Closed forms vs grid oracles at h = 1e-3, within 2h: Hausdorff on 1e3
  //    box pairs, Chebyshev on 1e2 finite sets.
  run_criterion(6, "grid-oracle equivalence for Hausdorff and Chebyshev closed forms", 0.0,
                [](Criterion& c) {
                  Rng rng(0x06ac1e);
                  const double h = 1e-3;
                  for (int s = 0; s < 1000; ++s) {
                    const std::size_t d = 1 + rng.index(6);
                    Point lo1(d), hi1(d), lo2(d), hi2(d);
                    for (std::size_t i = 0; i < d; ++i) {
                      lo1[i] = rng.uniform(-3.0, 3.0);
                      hi1[i] = lo1[i] + rng.uniform(0.0, 3.0);
                      lo2[i] = rng.uniform(-3.0, 3.0);
                      hi2[i] = lo2[i] + rng.uniform(0.0, 3.0);
                    }
                    const Box a(lo1, hi1), b(lo2, hi2);
                    const double err = std::abs(box_hausdorff(a, b) - grid_box_hausdorff(a, b, h));
                    c.require(err <= 2.0 * h, "hausdorff err " + fmt17(err));
                  }
                  for (int s = 0; s < 100; ++s) {
                    const std::size_t d = 1 + rng.index(6);
                    PointSet k(1 + rng.index(8));
                    for (auto& p : k) {
                      p = Point(d);
                      for (std::size_t i = 0; i < d; ++i) p[i] = rng.uniform(-3.0, 3.0);
                    }
                    const auto closed = chebyshev(k);
                    const auto grid = grid_chebyshev(k, h);
                    double err = std::abs(closed.radius - grid.radius);
                    for (std::size_t i = 0; i < d; ++i) {
                      err = std::max(err, std::abs(closed.center.lo()[i] - grid.center.lo()[i]));
                      err = std::max(err, std::abs(closed.center.hi()[i] - grid.center.hi()[i]));
                    }
                    c.require(err <= 2.0 * h, "chebyshev err " + fmt17(err));
                  }
                });

  // 7. Two-slope maps: exact Lipschitz constant 1 + a, fixed set at minimum
  //    pairwise distance 2, discrepancy note emitted by the s4 scenario.
  run_criterion(7, "two-slope analysis: L = 1 + a, corner fixed set, note emitted", 0.0,
                [](Criterion& c) {
                  for (double a : {0.1, 0.25, 0.5}) {
                    const Mapping map = make_two_slope_map(a);
                    const auto lip = exact_lipschitz(map);
                    c.require(lip && std::abs(*lip - (1.0 + a)) <= 1e-6,
                              "L(" + fmt17(a) + ") = " + fmt17(lip ? *lip : -1.0));
                    const auto* pwl = std::get_if<CoordPwlMap>(&map.node);
                    const auto fixed = pwl->fs.front().fixed_values();
                    c.require(fixed.size() == 2 && std::abs(fixed[0] + 1.0) <= 1e-12 &&
                                  std::abs(fixed[1] - 1.0) <= 1e-12,
                              "fixed values of a = " + fmt17(a));
                    double min_gap = 1e300;
                    for (std::size_t i = 0; i < fixed.size(); ++i) {
                      for (std::size_t j = i + 1; j < fixed.size(); ++j) {
                        min_gap = std::min(min_gap, std::abs(fixed[i] - fixed[j]));
                      }
                    }
                    c.require(std::abs(min_gap - 2.0) <= 1e-12, "min distance " + fmt17(min_gap));
                  }
                  const auto run = run_scenario(
                      load_config(scenario_path("s4_box_two_slope.cfg")),
                      (std::filesystem::temp_directory_path() / "hyperfix_acc_s4").string());
                  c.require(run.expectation_met, "s4 expectation not met");
                  c.require(run.summary_text.find("0 is not a fixed value") != std::string::npos,
                            "missing discrepancy note");
                });

  // 8. Negative runs: circle rotations and the antipodal involution stop with
  //    hypothesis_violated and residuals bounded below by 1 and pi - 1e-9.
  run_criterion(8, "circle negatives certify the thresholds are not vacuous", 0.0,
                [](Criterion& c) {
                  IterationConfig rot;
                  rot.mode = IterationMode::inflated_center;
                  rot.lambda = 2.0;
                  rot.start = {0.3};
                  const auto t1 = iterate_action(make_circle_rotation_action(), rot);
                  c.require(t1.outcome == IterationOutcome::hypothesis_violated,
                            std::string("rotation outcome ") + to_string(t1.outcome));
                  c.require(t1.final_residual >= 1.0,
                            "rotation residual " + fmt17(t1.final_residual));

                  IterationConfig anti;
                  anti.lambda = 2.0;
                  anti.start = {0.3};
                  const auto t2 = iterate_involution<CircleSpace>(make_antipodal_map(),
                                                                  CircleSpace::Domain{}, anti);
                  c.require(t2.outcome == IterationOutcome::hypothesis_violated,
                            std::string("antipode outcome ") + to_string(t2.outcome));
                  c.require(t2.final_residual >= kTau / 2.0 - 1e-9,
                            "antipode residual " + fmt17(t2.final_residual));
                });

  // 9. Word-ball growth: diameter at word length 2k is >= k for all k <= 8,
  //    < 5 s at the word cap.
  run_criterion(9, "word-ball orbit growth: diam(2k) >= k for k <= 8", 5000.0, [](Criterion& c) {
    const auto res = word_ball_orbit(make_word_ball_generators(), 16, {0.0, 0.0});
    for (std::size_t k = 1; k <= 8; ++k) {
      c.require(res.levels[2 * k].diameter >= static_cast<double>(k),
                "diam at 2k = " + std::to_string(2 * k) + " is " +
                    fmt17(res.levels[2 * k].diameter));
    }
    for (std::size_t i = 1; i < res.levels.size(); ++i) {
      c.require(res.levels[i].diameter >= res.levels[i - 1].diameter, "diameters not monotone");
    }
  });

  // 10. Retraction laws, chain constants and Holder decade monitoring on 100
  //     sampled points per scenario.
  run_criterion(
      10, "retraction laws, chain constants <= L, 2L, 4L, bounded Holder decades", 0.0,
      [](Criterion& c) {
        struct Case {
          std::string name;
          BoxAction act;
          PointSet fixed;  // known common fixed points
          bool holder;     // only meaningful for L < sqrt(2)
        };
        const std::vector<Case> cases{
            {"s1", make_rotation4_action(), {{0.0, 0.0}}, true},
            {"s2", make_skewed_rotation_action(), {{0.6, -0.8}}, true},
            {"s3", make_involution_action(0.4), {{0.4}}, false},
            {"swap", make_swap_action(), {{1.5, 1.5, -2.0}, {-0.25, -0.25, 4.0}}, true}};
        Rng rng(0xce7);
        for (const Case& cs : cases) {
          const double lip = *exact_lipschitz(cs.act);
          for (int s = 0; s < 100; ++s) {
            const Point x = BoxSpace::sample(cs.act.domain, rng);
            const auto res = retract(cs.act, x);
            c.require(res.trace.outcome == IterationOutcome::converged, cs.name + ": stalled");
            c.require(residual(cs.act, res.point) <= 1e-8, cs.name + ": T_a R != R");
            c.require(linf_dist(retract(cs.act, res.point).point, res.point) <= 1e-8,
                      cs.name + ": R R != R");
          }
          for (const Point& fx : cs.fixed) {
            c.require(linf_dist(retract(cs.act, fx).point, fx) <= 1e-8,
                      cs.name + ": R is not the identity on the fixed set");
          }
          const auto chain = chain_check(cs.act, 100, 0xce7 + 1);
          c.require(chain.within(lip, 1e-9), cs.name + ": chain constants exceed L, 2L, 4L");
          if (cs.holder) {
            const auto scan = holder_scan(cs.act, 25, 0xce7 + 2);
            c.require(scan.bounded(), cs.name + ": Holder decade ratios grow");
          }
        }
      });

  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  std::printf("%s: 10 criteria, %d failure(s), %.2f s total%s\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", g_failures, total_s,
              total_s < 120.0 ? "" : " (over the 2-minute budget)");
  if (total_s >= 120.0) ++g_failures;
  return g_failures == 0 ? 0 : 1;
}
