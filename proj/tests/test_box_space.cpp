#include <catch2/catch_amalgamated.hpp>

#include "hyperfix/box_space.hpp"
#include "hyperfix/oracles.hpp"

using namespace hyperfix;

TEST_CASE("linf distance basics") {
  CHECK(linf_dist({0.0, 0.0}, {0.0, 0.0}) == 0.0);
  CHECK(linf_dist({1.0, 0.0}, {0.0, 1.0}) == 1.0);
  CHECK(linf_dist({0.0, 0.0}, {-1.0, 2.0}) == 2.0);
  CHECK_THROWS_AS(linf_dist({0.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("balls are boxes") {
  const Box unit = ball({0.0, 0.0}, 1.0);
  CHECK(unit.lo() == Point{-1.0, -1.0});
  CHECK(unit.hi() == Point{1.0, 1.0});

  const Box degenerate = ball({2.0, 0.0}, 0.0);
  CHECK(degenerate.lo() == Point{2.0, 0.0});
  CHECK(degenerate.hi() == Point{2.0, 0.0});
  CHECK_FALSE(degenerate.is_empty());

  const Box shifted = ball({1.0, -1.0}, 0.5);
  CHECK(shifted.lo() == Point{0.5, -1.5});
  CHECK(shifted.hi() == Point{1.5, -0.5});

  CHECK_THROWS_AS(ball({0.0}, -0.1), std::invalid_argument);
}

TEST_CASE("box intersections") {
  const Box tangent = intersect({ball({0.0, 0.0}, 1.0), ball({2.0, 0.0}, 1.0)});
  CHECK_FALSE(tangent.is_empty());
  CHECK(tangent.lo() == Point{1.0, -1.0});
  CHECK(tangent.hi() == Point{1.0, 1.0});

  const Box b = ball({0.3, -0.2}, 0.7);
  CHECK(intersect({b, b}).same_extent(b, 0.0));

  CHECK(intersect({ball({0.0, 0.0}, 1.0), ball({3.0, 0.0}, 1.0)}).is_empty());
  CHECK_THROWS_AS(intersect({}), std::invalid_argument);
}

TEST_CASE("box Hausdorff reproduces the corner formula and the sharp value") {
  // a point against the segment {0} x [0, 2]
  const Box pt = Box::point({0.0, 0.0});
  const Box seg({0.0, 0.0}, {0.0, 2.0});
  CHECK(box_hausdorff(pt, seg) == 2.0);
  CHECK(box_hausdorff(seg, seg) == 0.0);

  // 1-d pair: farthest point of [2,5] sits at distance 4 from [0,1]
  const Box a({0.0}, {1.0}), b({2.0}, {5.0});
  CHECK(box_hausdorff(a, b) == 4.0);

  CHECK_THROWS_AS(box_hausdorff(Box::empty(1), a), std::invalid_argument);
}

TEST_CASE("finite-set Hausdorff") {
  const PointSet k{{0.0, 0.0}};
  const PointSet l{{-1.0, 1.0}, {1.0, 1.0}};
  CHECK(set_hausdorff(k, l) == 1.0);
  CHECK(set_hausdorff(l, l) == 0.0);
  CHECK(set_hausdorff({{0.0, 0.0}}, {{3.0, 4.0}}) == 4.0);
  CHECK_THROWS_AS(set_hausdorff({}, l), std::invalid_argument);
}

TEST_CASE("Chebyshev radius and center") {
  // the sharp-pair segment: C(L) = {0} x [0, 2]
  const auto seg = chebyshev({{-1.0, 1.0}, {1.0, 1.0}});
  CHECK(seg.radius == 1.0);
  CHECK(seg.center.same_extent(Box({0.0, 0.0}, {0.0, 2.0}), 0.0));

  const auto single = chebyshev({{0.7, -0.3}});
  CHECK(single.radius == 0.0);
  CHECK(single.center.same_extent(Box::point({0.7, -0.3}), 0.0));

  const auto pair = chebyshev({{0.0, 0.0}, {2.0, 0.0}});
  CHECK(pair.radius == 1.0);
  CHECK(pair.center.same_extent(Box({1.0, -1.0}, {1.0, 1.0}), 0.0));
  // grid oracle agrees
  const auto grid = grid_chebyshev({{0.0, 0.0}, {2.0, 0.0}});
  CHECK(std::abs(grid.radius - pair.radius) <= 2e-3);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(grid.center.lo()[i] - pair.center.lo()[i]) <= 2e-3);
    CHECK(std::abs(grid.center.hi()[i] - pair.center.hi()[i]) <= 2e-3);
  }
}

TEST_CASE("shrink_hull") {
  const Box c({0.0, 0.0}, {2.0, 2.0});
  const Box s = shrink_hull(c, 1.5);
  CHECK(s.same_extent(Box({0.5, 0.5}, {1.5, 1.5}), 0.0));
  // every returned point is within 1.5 of every point of c (coarse grids)
  double worst = 0.0;
  for (double sx = 0.5; sx <= 1.5; sx += 0.25) {
    for (double sy = 0.5; sy <= 1.5; sy += 0.25) {
      for (double cx = 0.0; cx <= 2.0; cx += 0.1) {
        for (double cy = 0.0; cy <= 2.0; cy += 0.1) {
          worst = std::max(worst, linf_dist({sx, sy}, {cx, cy}));
        }
      }
    }
  }
  CHECK(worst <= 1.5 + 1e-12);

  const Box p = Box::point({0.4});
  CHECK(shrink_hull(p, 0.3).same_extent(ball({0.4}, 0.3), 0.0));

  CHECK(shrink_hull(Box({0.0}, {4.0}), 1.0).is_empty());
  CHECK_THROWS_AS(shrink_hull(Box::empty(2), 1.0), std::invalid_argument);
}

TEST_CASE("midpoint") {
  CHECK(midpoint(Box({0.0, 0.0}, {2.0, 4.0})) == Point{1.0, 2.0});
  CHECK(midpoint(Box::point({0.3, -0.7})) == Point{0.3, -0.7});
  // Lipschitz witness: midpoints of [0,2] and [1,3] differ by the Hausdorff
  // distance itself
  const Box a({0.0}, {2.0}), b({1.0}, {3.0});
  CHECK(linf_dist(midpoint(a), midpoint(b)) == box_hausdorff(a, b));
  CHECK_THROWS_AS(midpoint(Box::empty(2)), std::invalid_argument);
}

TEST_CASE("metric axioms on random triples") {
  Rng rng(1234);
  for (int s = 0; s < 2000; ++s) {
    const std::size_t d = 1 + rng.index(6);
    Point p(d), q(d), w(d);
    for (std::size_t i = 0; i < d; ++i) {
      p[i] = rng.uniform(-5.0, 5.0);
      q[i] = rng.uniform(-5.0, 5.0);
      w[i] = rng.uniform(-5.0, 5.0);
    }
    REQUIRE(linf_dist(p, q) >= 0.0);
    REQUIRE(linf_dist(p, q) == linf_dist(q, p));
    REQUIRE(linf_dist(p, w) <= linf_dist(p, q) + linf_dist(q, w) + 1e-12);
  }
}

TEST_CASE("pairwise-compatible ball families intersect") {
  Rng rng(99);
  for (int s = 0; s < 2000; ++s) {
    const std::size_t d = 1 + rng.index(6);
    const std::size_t k = 2 + rng.index(5);
    PointSet centers(k);
    std::vector<double> radii(k);
    for (std::size_t i = 0; i < k; ++i) {
      centers[i] = Point(d);
      for (std::size_t j = 0; j < d; ++j) centers[i][j] = rng.uniform(-3.0, 3.0);
      radii[i] = rng.uniform(0.0, 2.0);
    }
    double need = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        need = std::max(need, linf_dist(centers[i], centers[j]) - radii[i] - radii[j]);
      }
    }
    if (need > 0.0) {
      for (double& r : radii) r += need / 2.0 + 1e-9;
    }
    std::vector<Box> balls;
    for (std::size_t i = 0; i < k; ++i) balls.push_back(ball(centers[i], radii[i]));
    REQUIRE_FALSE(intersect(balls).is_empty());
  }
}

TEST_CASE("closed forms match the grid oracles on random instances") {
  Rng rng(7);
  const double h = 1e-3;
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 1 + rng.index(6);
    Point lo1(d), hi1(d), lo2(d), hi2(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo1[i] = rng.uniform(-3.0, 3.0);
      hi1[i] = lo1[i] + rng.uniform(0.0, 3.0);
      lo2[i] = rng.uniform(-3.0, 3.0);
      hi2[i] = lo2[i] + rng.uniform(0.0, 3.0);
    }
    const Box a(lo1, hi1), b(lo2, hi2);
    REQUIRE(std::abs(box_hausdorff(a, b) - grid_box_hausdorff(a, b, h)) <= 2.0 * h);
  }
  for (int s = 0; s < 20; ++s) {
    const std::size_t d = 1 + rng.index(6);
    PointSet k(1 + rng.index(6));
    for (auto& p : k) {
      p = Point(d);
      for (std::size_t i = 0; i < d; ++i) p[i] = rng.uniform(-3.0, 3.0);
    }
    const auto closed = chebyshev(k);
    const auto grid = grid_chebyshev(k, h);
    REQUIRE(std::abs(closed.radius - grid.radius) <= 2.0 * h);
    REQUIRE(std::abs(closed.radius - set_diameter(k) / 2.0) <= 1e-12);
  }
}

TEST_CASE("coordinatewise oracle equals the full product-grid oracle in low dimension") {
  Rng rng(21);
  const double h = 5e-2;  // coarse: the full grid is quadratic in 1/h
  for (int s = 0; s < 10; ++s) {
    const std::size_t d = 1 + rng.index(2);
    Point lo1(d), hi1(d), lo2(d), hi2(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo1[i] = rng.uniform(-2.0, 2.0);
      hi1[i] = lo1[i] + rng.uniform(0.0, 2.0);
      lo2[i] = rng.uniform(-2.0, 2.0);
      hi2[i] = lo2[i] + rng.uniform(0.0, 2.0);
    }
    const Box a(lo1, hi1), b(lo2, hi2);
    REQUIRE(std::abs(grid_box_hausdorff(a, b, h) - grid_box_hausdorff_full(a, b, h)) <= 2.0 * h);
  }
}

TEST_CASE("radius and center stability bounds on random finite sets") {
  Rng rng(31337);
  for (int s = 0; s < 2000; ++s) {
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
    REQUIRE(std::abs(ck.radius - cl.radius) <= dkl + 1e-9);
    REQUIRE(box_hausdorff(ck.center, cl.center) <=
            dkl + std::abs(ck.radius - cl.radius) + 1e-9);
    REQUIRE(box_hausdorff(ck.center, cl.center) <= 2.0 * dkl + 1e-9);
  }
}

TEST_CASE("center doubling is attained by the sharp pair") {
  const PointSet k{{0.0, 0.0}}, l{{-1.0, 1.0}, {1.0, 1.0}};
  const double dkl = set_hausdorff(k, l);
  const double dcc = box_hausdorff(chebyshev(k).center, chebyshev(l).center);
  CHECK(dkl == 1.0);
  CHECK(dcc == 2.0);
  CHECK(dcc == 2.0 * dkl);
}

TEST_CASE("empty box is a distinguished value") {
  const Box e = Box::empty(3);
  CHECK(e.is_empty());
  CHECK_FALSE(Box::point({0.0, 0.0, 0.0}).is_empty());
  // a 1-ulp inverted box still counts as nonempty (degenerate center boxes)
  const double a = 0.41666666666666663, b = 0.41666666666666657;
  CHECK_FALSE(Box({a}, {b}).is_empty());
}
