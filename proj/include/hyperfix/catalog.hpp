#ifndef HYPERFIX_CATALOG_HPP
#define HYPERFIX_CATALOG_HPP

// Built-in scenario actions. The shipped config files under scenarios/
// describe the same objects; the harness tests cross-check the two routes.

#include <string>
#include <vector>

#include "hyperfix/fixpoint.hpp"

namespace hyperfix {

// s1: cyclic group of the four quarter-turn rotations about the origin;
// sup-norm isometries with a unique common fixed point.
inline BoxAction make_rotation4_action() {
  BoxAction act;
  act.group = cyclic_group(4);
  act.domain.bounds = Box({-5.0, -5.0}, {5.0, 5.0});
  for (int k = 0; k < 4; ++k) act.maps.push_back(make_rotation2d(k * (kTau / 4.0), {0.0, 0.0}));
  return act;
}

// s2: quarter-turn rotation conjugated by diag(1.3, 1) about a fixed point
// p. Periodic with period 4 and uniform Lipschitz constant exactly 1.3, so
// the centering hypothesis L < sqrt(2) holds without the maps being
// isometries.
inline BoxAction make_skewed_rotation_action() {
  const double s = 1.3;
  const Point p{0.6, -0.8};
  AffineMap a1;
  a1.dim = 2;
  a1.a = {0.0, -s, 1.0 / s, 0.0};
  a1.b = {0.0, 0.0};

  BoxAction act;
  act.group = cyclic_group(4);
  act.domain.bounds = Box({-4.0, -4.0}, {4.0, 4.0});
  AffineMap cur = affine_identity(2);
  for (int k = 0; k < 4; ++k) {
    AffineMap about_p = cur;
    // A^k (x - p) + p
    for (std::size_t i = 0; i < 2; ++i) {
      double ap = 0.0;
      for (std::size_t j = 0; j < 2; ++j) ap += cur.a[i * 2 + j] * p[j];
      about_p.b[i] = p[i] - ap;
    }
    act.maps.push_back(make_affine(about_p));
    AffineMap nxt;
    nxt.dim = 2;
    nxt.a.assign(4, 0.0);
    nxt.b.assign(2, 0.0);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (std::size_t t = 0; t < 2; ++t) acc += a1.a[i * 2 + t] * cur.a[t * 2 + j];
        nxt.a[i * 2 + j] = acc;
      }
    }
    cur = nxt;
  }
  return act;
}

// s3: piecewise-linear involution on [0, 1] with breakpoint c: slopes
// -(1-c)/c and -c/(1-c), Lipschitz max((1-c)/c, c/(1-c)); fixed point c.
inline Mapping make_breakpoint_involution(double c) {
  PwlFunction f;
  f.xs = {0.0, c, 1.0};
  f.ys = {1.0, c, 0.0};
  const double lip = std::max((1.0 - c) / c, c / (1.0 - c));
  return make_pwl(std::move(f), lip);
}

inline BoxAction make_involution_action(double c = 0.4) {
  BoxAction act;
  act.group = cyclic_group(2);
  act.domain.bounds = Box({0.0}, {1.0});
  act.maps.push_back(make_affine(affine_identity(1)));
  act.maps.push_back(make_breakpoint_involution(c));
  return act;
}

// s4: coordinatewise piecewise-linear bijection with slopes 1+a and 1-a,
// broadcast over every coordinate; Lipschitz exactly 1+a, fixed values -1
// and 1 per coordinate.
inline Mapping make_two_slope_map(double a) {
  PwlFunction f;
  f.xs = {-1.0, 0.0, 1.0};
  f.ys = {-1.0, a, 1.0};
  return make_pwl(std::move(f), 1.0 + a);
}

// s5: two quarter-turn rotations about distinct points; each is a periodic
// isometry but mixed words drift, so the generated group has unbounded
// orbits.
inline std::vector<Mapping> make_word_ball_generators() {
  return {make_rotation2d(kTau / 4.0, {0.0, 0.0}), make_rotation2d(kTau / 4.0, {1.0, 0.0})};
}

// s6: circle rotation group Z_4 (no common fixed point) and the antipodal
// involution (fixed-point free); both certify that the Lipschitz thresholds
// cannot be dropped.
inline CircleAction make_circle_rotation_action() {
  CircleAction act;
  act.group = cyclic_group(4);
  for (int k = 0; k < 4; ++k) act.maps.push_back(make_rotation(k * (kTau / 4.0)));
  return act;
}

inline Mapping make_antipodal_map() { return make_rotation(kTau / 2.0); }

inline CircleAction make_circle_antipode_action() {
  CircleAction act;
  act.group = cyclic_group(2);
  act.maps.push_back(make_rotation(0.0));
  act.maps.push_back(make_antipodal_map());
  return act;
}

// Z_2 swap of the first two coordinates of R^3; the retraction collapses
// them to their mean and leaves the third alone.
inline BoxAction make_swap_action() {
  BoxAction act;
  act.group = cyclic_group(2);
  act.domain.bounds = Box({-5.0, -5.0, -5.0}, {5.0, 5.0, 5.0});
  act.maps.push_back(make_affine(affine_identity(3)));
  AffineMap swap;
  swap.dim = 3;
  swap.a = {0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  swap.b = {0.0, 0.0, 0.0};
  act.maps.push_back(make_affine(std::move(swap)));
  return act;
}

// Z_2 sign flip of the first coordinate; its orbits embed the sharp pair
// O((0,0)) = {(0,0)} and O((-1,1)) = {(-1,1), (1,1)} whose centers realize
// D(C, C) = 2 D(O, O) exactly.
inline BoxAction make_mirror_action() {
  BoxAction act;
  act.group = cyclic_group(2);
  act.domain.bounds = Box({-3.0, -3.0}, {3.0, 3.0});
  act.maps.push_back(make_affine(affine_identity(2)));
  AffineMap flip;
  flip.dim = 2;
  flip.a = {-1.0, 0.0, 0.0, 1.0};
  flip.b = {0.0, 0.0};
  act.maps.push_back(make_affine(std::move(flip)));
  return act;
}

struct ScenarioInfo {
  std::string name;
  std::string file;
  std::string description;
  std::string expectation;
};

inline const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = {
      {"s1_box_rotations", "s1_box_rotations.cfg",
       "four quarter-turn rotations about the origin; center iteration", "converged"},
      {"s2_box_skewed_rotations", "s2_box_skewed_rotations.cfg",
       "period-4 skewed rotation group with uniform Lipschitz 1.3; center iteration",
       "converged"},
      {"s3_box_involution", "s3_box_involution.cfg",
       "piecewise-linear involution with breakpoint 0.4 (Lipschitz 1.5); involution iteration",
       "converged"},
      {"s4_box_two_slope", "s4_box_two_slope.cfg",
       "coordinatewise two-slope bijection (a = 0.25, d = 4); Lipschitz and fixed-set analysis",
       "analysis"},
      {"s5_word_ball", "s5_word_ball.cfg",
       "two quarter-turn rotations about distinct points; word-ball orbit growth", "explored"},
      {"s6_circle_rotations", "s6_circle_rotations.cfg",
       "circle rotation group; inflated-center iteration with lambda = 2",
       "hypothesis_violated"},
      {"s6_circle_antipode", "s6_circle_antipode.cfg",
       "circle antipodal involution; involution iteration with lambda = 2",
       "hypothesis_violated"},
  };
  return catalog;
}

}  // namespace hyperfix

#endif
