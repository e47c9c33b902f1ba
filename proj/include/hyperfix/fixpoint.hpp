#ifndef HYPERFIX_FIXPOINT_HPP
#define HYPERFIX_FIXPOINT_HPP

// Constructive center iterations. Each step replaces x by a selected point
// of the (possibly lambda-inflated) double center of its orbit, recording
// diameters, radii, step distances, contraction ratios and residuals so the
// proofs' per-step inequalities can be audited after the fact.
//
// Modes and their audited contraction bounds (lambda = 1 on exact centers):
//   center    : delta_{n+1} <= (L^2/2)            delta_n, hypothesis L < sqrt(2)
//   inflated  : delta_{n+1} <= (L^2 lambda^2 / 2) delta_n, hypothesis L < sqrt(2)/lambda
//   involution: delta_{n+1} <= (L lambda^2 / 2)   delta_n, hypothesis L < 2/lambda^2

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hyperfix/group_action.hpp"

namespace hyperfix {

enum class IterationMode { center, inflated_center, involution };
enum class IterationOutcome { converged, hypothesis_violated, empty_center, max_iter };

inline const char* to_string(IterationMode m) {
  switch (m) {
    case IterationMode::center: return "center";
    case IterationMode::inflated_center: return "inflated";
    case IterationMode::involution: return "involution";
  }
  return "?";
}

inline const char* to_string(IterationOutcome o) {
  switch (o) {
    case IterationOutcome::converged: return "converged";
    case IterationOutcome::hypothesis_violated: return "hypothesis_violated";
    case IterationOutcome::empty_center: return "empty_center";
    case IterationOutcome::max_iter: return "max_iter";
  }
  return "?";
}

struct IterationConfig {
  std::vector<double> start;  // x1 (coordinates; a single angle on the circle)
  double tol = kDefaultIterTol;
  int max_iter = kDefaultMaxIter;
  double lambda = 1.0;  // must be 1 in center mode
  IterationMode mode = IterationMode::center;
};

struct TraceStep {
  int n = 0;
  std::vector<double> x;
  double delta = 0.0;
  double radius = 0.0;
  double residual = 0.0;
  // absent on the final step (and ratio also when delta == 0)
  double step_dist = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();

  bool has_step_dist() const { return !std::isnan(step_dist); }
  bool has_ratio() const { return !std::isnan(ratio); }
};

struct IterationTrace {
  IterationMode mode = IterationMode::center;
  double lambda = 1.0;
  double tol = kDefaultIterTol;
  int max_iter = kDefaultMaxIter;
  double lipschitz = 0.0;
  bool lipschitz_exact = false;
  bool hypothesis_ok = false;
  IterationOutcome outcome = IterationOutcome::max_iter;
  std::vector<TraceStep> steps;
  std::vector<double> final_point;
  double final_delta = 0.0;
  double final_residual = 0.0;

  double hypothesis_threshold() const {
    switch (mode) {
      case IterationMode::center: return std::sqrt(2.0);
      case IterationMode::inflated_center: return std::sqrt(2.0) / lambda;
      case IterationMode::involution: return 2.0 / (lambda * lambda);
    }
    return 0.0;
  }

  double ratio_bound() const {
    switch (mode) {
      case IterationMode::center: return lipschitz * lipschitz / 2.0;
      case IterationMode::inflated_center: return lipschitz * lipschitz * lambda * lambda / 2.0;
      case IterationMode::involution: return lipschitz * lambda * lambda / 2.0;
    }
    return 0.0;
  }

  double max_ratio() const {
    double m = 0.0;
    for (const TraceStep& s : steps) {
      if (s.has_ratio()) m = std::max(m, s.ratio);
    }
    return m;
  }

  std::string to_csv() const {
    std::string out = "step,delta,r,step_dist,ratio,residual\n";
    for (const TraceStep& s : steps) {
      out += std::to_string(s.n);
      out += ',';
      out += fmt17(s.delta);
      out += ',';
      out += fmt17(s.radius);
      out += ',';
      if (s.has_step_dist()) out += fmt17(s.step_dist);
      out += ',';
      if (s.has_ratio()) out += fmt17(s.ratio);
      out += ',';
      out += fmt17(s.residual);
      out += '\n';
    }
    return out;
  }
};

// max_a d(T_a x, x); zero exactly on the common fixed points.
template <class S>
double residual(const Action<S>& act, const typename S::Point& x) {
  double m = 0.0;
  for (const Mapping& map : act.maps) m = std::max(m, S::dist(S::apply(map, x), x));
  return m;
}

// A(x): intersection of balls of radius lambda * delta(x) / 2 about the
// orbit points. With lambda = 1 on the box model this is the exact orbit
// center C(x) since there r(x) = delta(x) / 2.
template <class S>
typename S::Set inflated_center_set(const Action<S>& act, const typename S::Point& x,
                                    double lambda) {
  const auto pts = S::dedupe(orbit(act, x));
  const double r = lambda * S::diameter(pts) / 2.0;
  std::vector<typename S::Set> balls;
  balls.reserve(pts.size());
  for (const auto& p : pts) balls.push_back(S::ball_at(p, r));
  return S::intersect_all(balls);
}

// AA(x): the points of A(x) within lambda^2 * delta(x) / 2 of every point
// of A(x).
template <class S>
typename S::Set inflated_double_center_set(const Action<S>& act, const typename S::Point& x,
                                           double lambda) {
  const auto pts = S::dedupe(orbit(act, x));
  const double delta = S::diameter(pts);
  const double r = lambda * delta / 2.0;
  std::vector<typename S::Set> balls;
  balls.reserve(pts.size());
  for (const auto& p : pts) balls.push_back(S::ball_at(p, r));
  const auto a = S::intersect_all(balls);
  if (S::set_empty(a)) return a;
  return S::meet(a, S::co_ball(a, lambda * lambda * delta / 2.0));
}

// C(x) and CC(x) of the box model (exact centers; lambda = 1).
inline Box center_set(const BoxAction& act, const Point& x) {
  return inflated_center_set(act, x, 1.0);
}
inline Box double_center_set(const BoxAction& act, const Point& x) {
  return inflated_double_center_set(act, x, 1.0);
}

namespace detail {
// Seed for the Lipschitz probe used when no exact constant is available.
inline constexpr std::uint64_t kLipschitzProbeSeed = 0x11f5c811ull;
inline constexpr std::size_t kLipschitzProbeSamples = 4000;
}  // namespace detail

// Runs the center iteration for the configured mode. A violated hypothesis
// does not abort the run: negative scenarios are part of the test surface,
// so the trace is produced and labeled. Box selection is the midpoint of the
// double center; circle selection is the point nearest the previous iterate.
template <class S>
IterationTrace iterate_action(const Action<S>& act, const IterationConfig& cfg) {
  if (cfg.tol <= 0.0) throw std::invalid_argument("iterate_action: tol must be positive");
  if (cfg.lambda < 1.0) throw std::invalid_argument("iterate_action: lambda must be >= 1");
  if (cfg.mode == IterationMode::center && cfg.lambda != 1.0) {
    throw std::invalid_argument("iterate_action: center mode requires lambda = 1");
  }
  if (cfg.mode == IterationMode::involution && act.group.order != 2) {
    throw std::invalid_argument("iterate_action: involution mode requires a group of order 2");
  }

  IterationTrace trace;
  trace.mode = cfg.mode;
  trace.lambda = cfg.lambda;
  trace.tol = cfg.tol;
  trace.max_iter = cfg.max_iter;
  if (const auto exact = exact_lipschitz(act)) {
    trace.lipschitz = *exact;
    trace.lipschitz_exact = true;
  } else {
    trace.lipschitz =
        estimate_lipschitz(act, detail::kLipschitzProbeSamples, detail::kLipschitzProbeSeed);
    trace.lipschitz_exact = false;
  }
  trace.hypothesis_ok = trace.lipschitz < trace.hypothesis_threshold();

  auto x = S::from_coords(cfg.start);
  bool finished = false;
  for (int n = 1; n <= cfg.max_iter; ++n) {
    const auto pts = S::dedupe(orbit(act, x));
    TraceStep step;
    step.n = n;
    step.x = S::coords(x);
    step.delta = S::diameter(pts);
    step.radius = S::orbit_radius(pts);
    step.residual = residual(act, x);
    if (!trace.steps.empty() && trace.steps.back().delta > 0.0) {
      trace.steps.back().ratio = step.delta / trace.steps.back().delta;
    }
    trace.steps.push_back(step);

    if (step.delta <= cfg.tol) {
      trace.outcome = IterationOutcome::converged;
      finished = true;
      break;
    }

    const auto aa = inflated_double_center_set(act, x, cfg.lambda);
    if (S::set_empty(aa)) {
      trace.outcome = IterationOutcome::empty_center;
      finished = true;
      break;
    }
    const auto next = S::select(aa, x);
    trace.steps.back().step_dist = S::dist(next, x);
    x = next;
  }

  if (!finished) {
    trace.outcome = trace.hypothesis_ok ? IterationOutcome::max_iter
                                        : IterationOutcome::hypothesis_violated;
  }
  trace.final_point = S::coords(x);
  trace.final_delta = trace.steps.empty() ? 0.0 : trace.steps.back().delta;
  trace.final_residual = residual(act, x);
  return trace;
}

// Z_2 action {id, T} for an involution T on the given domain.
template <class S>
Action<S> involution_action(const Mapping& t, const typename S::Domain& domain) {
  Action<S> act;
  act.group = cyclic_group(2);
  act.domain = domain;
  if constexpr (S::kind == SpaceKind::box) {
    // identity with the dimension T acts on is only known from the domain
    act.maps.push_back(make_affine(affine_identity(domain.bounds.dim())));
  } else {
    act.maps.push_back(make_rotation(0.0));
  }
  act.maps.push_back(t);
  return act;
}

// Specializes the machinery to the two-point orbit {x, Tx}. T o T = identity
// is verified by sampling before the run.
template <class S>
IterationTrace iterate_involution(const Mapping& t, const typename S::Domain& domain,
                                  IterationConfig cfg, std::size_t check_samples = 256,
                                  std::uint64_t check_seed = 0x1701d) {
  Rng rng(check_seed);
  double dev = 0.0;
  for (std::size_t s = 0; s < check_samples; ++s) {
    const auto x = S::sample(domain, rng);
    dev = std::max(dev, S::dist(S::apply(t, S::apply(t, x)), x));
  }
  if (dev > kAuditSlack) {
    throw std::invalid_argument("iterate_involution: T o T deviates from identity by " +
                                fmt17(dev));
  }
  cfg.mode = IterationMode::involution;
  return iterate_action(involution_action<S>(t, domain), cfg);
}

}  // namespace hyperfix

#endif
