#include <catch2/catch_amalgamated.hpp>

#include "hyperfix/catalog.hpp"
#include "hyperfix/group_action.hpp"

using namespace hyperfix;

TEST_CASE("group verification") {
  CHECK(verify_group(cyclic_group(4)).valid());
  CHECK(verify_group(cyclic_group(2)).valid());
  CHECK(verify_group(cyclic_group(1)).valid());

  FiniteGroup bad = cyclic_group(4);
  bad.table[1 * 4 + 1] = 3;  // corrupt one product
  const auto chk = verify_group(bad);
  CHECK_FALSE(chk.valid());
  CHECK_FALSE(chk.associativity_violations.empty());

  CHECK_THROWS_AS(group_from_table(2, {0, 1, 1}), std::invalid_argument);
  const FiniteGroup z2 = group_from_table(2, {0, 1, 1, 0});
  CHECK(z2.identity == 0);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("action verification") {
  CHECK(verify_action(make_rotation4_action(), 500, 1).pass());
  CHECK(verify_action(make_swap_action(), 500, 2).pass());
  CHECK(verify_action(make_circle_rotation_action(), 500, 3).pass());

  // mismatched assignment: swap the maps of elements 1 and 2
  BoxAction broken = make_rotation4_action();
  std::swap(broken.maps[1], broken.maps[2]);
  CHECK_FALSE(verify_action(broken, 500, 4).pass());
}

TEST_CASE("orbits") {
  const BoxAction rot = make_rotation4_action();
  const auto o = dedupe_points(orbit(rot, {1.0, 0.0}));
  REQUIRE(o.size() == 4);
  const PointSet expect{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (const Point& e : expect) {
    bool found = false;
    for (const Point& p : o) found = found || linf_dist(p, e) <= 1e-12;
    CHECK(found);
  }

  CHECK(dedupe_points(orbit(rot, {0.0, 0.0})).size() == 1);  // fixed point

  BoxAction swap3;
  swap3.group = cyclic_group(2);
  swap3.domain.bounds = Box({-9.0, -9.0, -9.0}, {9.0, 9.0, 9.0});
  swap3.maps.push_back(make_affine(affine_identity(3)));
  AffineMap s;
  s.dim = 3;
  s.a = {0, 1, 0, 1, 0, 0, 0, 0, 1};
  s.b = {0, 0, 0};
  swap3.maps.push_back(make_affine(s));
  const auto o2 = orbit(swap3, {1.0, 3.0, 5.0});
  REQUIRE(o2.size() == 2);
  CHECK(o2[0] == Point{1.0, 3.0, 5.0});
  CHECK(o2[1] == Point{3.0, 1.0, 5.0});
}

TEST_CASE("orbit statistics") {
  const BoxAction rot = make_rotation4_action();
  const auto st = orbit_stats(rot, {1.0, 0.0});
  CHECK(st.diameter == 2.0);
  CHECK(st.radius == 1.0);

  // the relative radius r(y, x) evaluates anywhere
  CHECK(orbit_radius_at(rot, Point{0.0, 0.0}, Point{1.0, 0.0}) == 1.0);
  CHECK(orbit_radius_at(rot, Point{1.0, 0.0}, Point{1.0, 0.0}) == 2.0);

  const auto fixed = orbit_stats(rot, {0.0, 0.0});
  CHECK(fixed.diameter == 0.0);
  CHECK(fixed.radius == 0.0);

  // two-point orbit of the sign flip at 0.8: delta = 1.6, r = 0.8
  BoxAction flip;
  flip.group = cyclic_group(2);
  flip.domain.bounds = Box({-1.0}, {1.0});
  flip.maps.push_back(make_affine(affine_identity(1)));
  AffineMap neg;
  neg.dim = 1;
  neg.a = {-1.0};
  neg.b = {0.0};
  flip.maps.push_back(make_affine(neg));
  const auto st2 = orbit_stats(flip, {0.8});
  CHECK(st2.diameter == Catch::Approx(1.6).margin(1e-15));
  CHECK(st2.radius == Catch::Approx(0.8).margin(1e-15));
}

TEST_CASE("group metric d_G") {
  const BoxAction rot = make_rotation4_action();
  Rng rng(6);
  for (int s = 0; s < 200; ++s) {
    const Point x = BoxSpace::sample(rot.domain, rng);
    const Point y = BoxSpace::sample(rot.domain, rng);
    CHECK(group_metric(rot, x, y) == Catch::Approx(linf_dist(x, y)).margin(1e-12));
  }

  // the breakpoint involution moves (0, 0.5) to (1, 1/3): d_G = 2/3
  const BoxAction inv = make_involution_action(0.4);
  CHECK(group_metric(inv, {0.0}, {0.5}) == Catch::Approx(2.0 / 3.0).margin(1e-12));
  CHECK(group_metric(inv, {0.3}, {0.3}) == 0.0);

  // sandwich and d_G-isometry on sampled pairs
  const double lip = *exact_lipschitz(inv);
  for (int s = 0; s < 500; ++s) {
    const Point x = BoxSpace::sample(inv.domain, rng);
    const Point y = BoxSpace::sample(inv.domain, rng);
    const double d = linf_dist(x, y);
    const double dg = group_metric(inv, x, y);
    REQUIRE(dg >= d - 1e-12);
    REQUIRE(dg <= lip * d + 1e-9);
    const double moved = group_metric(inv, apply_box(inv.maps[1], x), apply_box(inv.maps[1], y));
    REQUIRE(std::abs(moved - dg) <= 1e-9);
  }
}

TEST_CASE("Lipschitz estimation") {
  const BoxAction rot = make_rotation4_action();
  CHECK(estimate_lipschitz(rot, 2000, 9) == Catch::Approx(1.0).margin(1e-9));
  CHECK(*exact_lipschitz(rot) == 1.0);

  const BoxAction inv = make_involution_action(0.4);
  CHECK(*exact_lipschitz(inv) == Catch::Approx(1.5).margin(1e-12));
  CHECK(estimate_lipschitz(inv, 4000, 10) == Catch::Approx(1.5).margin(1e-9));

  const Mapping fa = make_two_slope_map(0.25);
  CHECK(*exact_lipschitz(fa) == 1.25);
  // sampled ratios stay below the declared bound
  BoxSpace::Domain dom{Box({-1.0, -1.0}, {1.0, 1.0})};
  Rng rng(11);
  double best = 0.0;
  for (int s = 0; s < 4000; ++s) {
    const Point x = BoxSpace::sample(dom, rng);
    const Point y = BoxSpace::sample(dom, rng);
    const double d = linf_dist(x, y);
    if (d > 0.0) best = std::max(best, linf_dist(apply_box(fa, x), apply_box(fa, y)) / d);
  }
  CHECK(best <= 1.25 + 1e-9);
  CHECK(best == Catch::Approx(1.25).margin(1e-6));
}

TEST_CASE("orbit diameter transfer") {
  const BoxAction rot = make_rotation4_action();
  CHECK(diameter_transfer(rot, {1.0, 0.0}, {1.0, 0.0}, 1.0).ok());
  const auto t = diameter_transfer(rot, {1.0, 0.0}, {0.0, 0.0}, 1.0);
  CHECK(t.lhs == 0.0);
  CHECK(t.rhs == Catch::Approx(4.0).margin(1e-12));  // 2 * 1 * 1 + 2
  CHECK(t.ok());

  Rng rng(13);
  for (int s = 0; s < 300; ++s) {
    const std::size_t d = 1 + rng.index(6);
    Point lo(d, -5.0), hi(d, 5.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    const Point x = BoxSpace::sample(act.domain, rng);
    const Point y = BoxSpace::sample(act.domain, rng);
    REQUIRE(diameter_transfer(act, x, y, *exact_lipschitz(act)).ok());
  }
}

TEST_CASE("random isometry actions are exact") {
  Rng rng(15);
  for (int s = 0; s < 50; ++s) {
    const std::size_t d = 1 + rng.index(6);
    Point lo(d, -5.0), hi(d, 5.0);
    const auto act = make_random_isometry_action(rng, d, Box(lo, hi));
    REQUIRE(act.group.order <= 48);
    REQUIRE(verify_group(act.group).valid());
    REQUIRE(*exact_lipschitz(act) == 1.0);
    REQUIRE(verify_action(act, 200, 16 + s).pass());
  }
}

TEST_CASE("word balls") {
  // identity generator: nothing moves
  const auto idres = word_ball_orbit({make_affine(affine_identity(2))}, 6, {0.5, 0.5});
  for (const auto& lv : idres.levels) CHECK(lv.diameter == 0.0);

  // a single quarter turn stabilizes at the period-4 orbit of (1, 0)
  const auto rotres = word_ball_orbit({make_rotation2d(kTau / 4.0, {0.0, 0.0})}, 6, {1.0, 0.0});
  CHECK(rotres.levels.back().diameter == 2.0);
  CHECK(rotres.levels.back().point_count == 4);

  // two rotations about distinct centers: linear growth via the translation
  const auto grow = word_ball_orbit(make_word_ball_generators(), 16, {0.0, 0.0});
  for (std::size_t i = 1; i < grow.levels.size(); ++i) {
    REQUIRE(grow.levels[i].diameter >= grow.levels[i - 1].diameter);
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    REQUIRE(grow.levels[2 * k].diameter >= 2.0 * static_cast<double>(k));
  }

  // the cap guard triggers
  CHECK_THROWS_AS(word_ball_orbit(make_word_ball_generators(), 16, {0.0, 0.0}, 50),
                  std::runtime_error);
}

TEST_CASE("mapping inverses") {
  const Mapping rot = make_rotation2d(kTau / 4.0, {1.0, 0.0});
  const Mapping inv = inverse(rot);
  Rng rng(19);
  for (int s = 0; s < 100; ++s) {
    const Point x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    REQUIRE(linf_dist(apply_box(inv, apply_box(rot, x)), x) <= 1e-12);
  }

  const Mapping fa = make_two_slope_map(0.25);
  const Mapping fai = inverse(fa);
  for (int s = 0; s < 100; ++s) {
    const Point x{rng.uniform(-1.0, 1.0)};
    REQUIRE(linf_dist(apply_box(fai, apply_box(fa, x)), x) <= 1e-12);
  }

  PwlFunction notmono;
  notmono.xs = {0.0, 1.0, 2.0};
  notmono.ys = {0.0, 1.0, 0.5};
  CHECK_THROWS_AS(inverse(make_pwl(notmono)), std::invalid_argument);
}

TEST_CASE("piecewise-linear fixed values") {
  const Mapping two_slope = make_two_slope_map(0.25);
  const auto* pwl = std::get_if<CoordPwlMap>(&two_slope.node);
  REQUIRE(pwl != nullptr);
  const auto fixed = pwl->fs.front().fixed_values();
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(fixed[1] == Catch::Approx(1.0).margin(1e-12));

  const Mapping breakpoint = make_breakpoint_involution(0.4);
  const auto* inv = std::get_if<CoordPwlMap>(&breakpoint.node);
  const auto fx = inv->fs.front().fixed_values();
  REQUIRE(fx.size() == 1);
  CHECK(fx[0] == Catch::Approx(0.4).margin(1e-12));
}
