// Tiny tour: the sharp center-doubling pair, the circle counterexample, and
// one center-iteration trace printed to stdout.

#include <cstdio>

#include "hyperfix/catalog.hpp"

using namespace hyperfix;

int main() {
  const PointSet k{{0.0, 0.0}}, l{{-1.0, 1.0}, {1.0, 1.0}};
  std::printf("D(K, L)        = %.17g\n", set_hausdorff(k, l));
  std::printf("D(C(K), C(L))  = %.17g  (doubling attained)\n",
              box_hausdorff(chebyshev(k).center, chebyshev(l).center));

  const std::vector<CirclePoint> kc{circle_point(0.0), circle_point(kTau / 2.0)};
  const std::vector<CirclePoint> lc{circle_point(kTau / 2.0 - 0.1), circle_point(0.0)};
  std::printf("circle: D(K, L) = %.17g, D(C(K), C(L)) = %.17g  (no Lipschitz dependence)\n",
              circle_set_hausdorff(kc, lc),
              arcset_hausdorff(circle_chebyshev(kc).center, circle_chebyshev(lc).center));

  const BoxAction act = make_skewed_rotation_action();
  IterationConfig cfg;
  cfg.start = {1.7, -2.3};
  const auto trace = iterate_action(act, cfg);
  std::printf("\ncenter iteration on the skewed rotation group (L = %.3g):\n%s", trace.lipschitz,
              trace.to_csv().c_str());
  std::printf("outcome = %s at (%.17g, %.17g)\n", to_string(trace.outcome),
              trace.final_point[0], trace.final_point[1]);
  return 0;
}
