#ifndef HYPERFIX_SCENARIO_HPP
#define HYPERFIX_SCENARIO_HPP

// Scenario execution: builds the configured action, runs the configured
// iteration / exploration / analysis, and writes trace.csv (or words.csv),
// summary.txt and config_echo.cfg into the output directory. Identical
// config and seed produce byte-identical files.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hyperfix/catalog.hpp"
#include "hyperfix/config.hpp"

namespace hyperfix {

struct ScenarioRun {
  std::string outcome;  // converged / hypothesis_violated / ... / analysis / explored
  bool expectation_met = false;
  std::string summary_text;
  std::vector<std::string> files_written;
  IterationTrace trace;  // iteration modes only
};

namespace scenario_detail {

inline FiniteGroup build_group(const ScenarioConfig& cfg) {
  switch (cfg.group_kind) {
    case GroupKind::cyclic: return cyclic_group(cfg.group_n);
    case GroupKind::table: return group_from_table(cfg.group_n, cfg.table);
    default: return cyclic_group(1);  // word_ball / single: no group law used
  }
}

inline void write_file(const std::string& path, const std::string& text,
                       std::vector<std::string>& files) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  files.push_back(path);
}

inline std::string coords_str(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt17(v[i]);
  return s;
}

// Smallest k <= cap with m^k = identity (affine), if any.
inline std::optional<std::size_t> affine_order(const AffineMap& m, std::size_t cap = 64) {
  AffineMap cur = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    bool ident = true;
    for (std::size_t i = 0; i < m.dim && ident; ++i) {
      for (std::size_t j = 0; j < m.dim && ident; ++j) {
        const double want = i == j ? 1.0 : 0.0;
        if (std::abs(cur.a[i * m.dim + j] - want) > 1e-9) ident = false;
      }
      if (std::abs(cur.b[i]) > 1e-9) ident = false;
    }
    if (ident) return k;
    AffineMap nxt;
    nxt.dim = m.dim;
    nxt.a.assign(m.dim * m.dim, 0.0);
    nxt.b.assign(m.dim, 0.0);
    for (std::size_t i = 0; i < m.dim; ++i) {
      double acc = m.b[i];
      for (std::size_t j = 0; j < m.dim; ++j) {
        acc += m.a[i * m.dim + j] * cur.b[j];
        double e = 0.0;
        for (std::size_t t = 0; t < m.dim; ++t) e += m.a[i * m.dim + t] * cur.a[t * m.dim + j];
        nxt.a[i * m.dim + j] = e;
      }
      nxt.b[i] = acc;
    }
    cur = nxt;
  }
  return std::nullopt;
}

inline AffineMap compose_affine(const AffineMap& f, const AffineMap& g) {  // x -> f(g(x))
  AffineMap h;
  h.dim = f.dim;
  h.a.assign(f.dim * f.dim, 0.0);
  h.b = f.b;
  for (std::size_t i = 0; i < f.dim; ++i) {
    for (std::size_t j = 0; j < f.dim; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < f.dim; ++t) acc += f.a[i * f.dim + t] * g.a[t * f.dim + j];
      h.a[i * f.dim + j] = acc;
      h.b[i] += f.a[i * f.dim + j] * g.b[j];
    }
  }
  return h;
}

}  // namespace scenario_detail

inline ScenarioRun run_scenario(const ScenarioConfig& cfg_in, const std::string& out_override = "") {
  using namespace scenario_detail;
  ScenarioConfig cfg = cfg_in;
  if (!out_override.empty()) cfg.out_dir = out_override;
  validate_config(cfg, cfg.name);
  std::filesystem::create_directories(cfg.out_dir);

  ScenarioRun run;
  std::string summary;
  summary += "scenario = " + cfg.name + "\n";
  summary += "mode = " + std::string(to_string(cfg.mode)) + "\n";

  if (cfg.mode == ScenarioMode::analyze) {
    const Mapping& map = cfg.maps.front();
    const auto exact = exact_lipschitz(map);
    BoxSpace::Domain dom{Box(cfg.lo, cfg.hi)};
    Rng rng(cfg.seed);
    double sampled = 0.0;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const Point x = BoxSpace::sample(dom, rng);
      const Point y = BoxSpace::sample(dom, rng);
      const double d = linf_dist(x, y);
      if (d > 0.0) sampled = std::max(sampled, linf_dist(apply_box(map, x), apply_box(map, y)) / d);
    }
    const auto* pwl = std::get_if<CoordPwlMap>(&map.node);
    if (!pwl) throw std::runtime_error(cfg.name + ": analyze expects a pwl map");
    const std::vector<double> fixed = pwl->fs.front().fixed_values();
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      for (std::size_t j = i + 1; j < fixed.size(); ++j) {
        min_gap = std::min(min_gap, std::abs(fixed[i] - fixed[j]));
      }
    }
    double corners = 1.0;
    for (std::size_t i = 0; i < cfg.dim; ++i) corners *= static_cast<double>(fixed.size());
    summary += "lipschitz_exact = " + (exact ? fmt17(*exact) : std::string("unavailable")) + "\n";
    summary += "lipschitz_sampled = " + fmt17(sampled) + "\n";
    summary += "fixed_values_per_coordinate = " + coords_str(fixed) + "\n";
    summary += "fixed_set_size = " + fmt17(corners) + "\n";
    summary += "min_pairwise_distance = " + fmt17(min_gap) + "\n";
    const double at_zero = pwl->fs.front()(0.0);
    summary += "note = per-coordinate solve of f(t) = t yields {" + coords_str(fixed) +
               "}; f(0) = " + fmt17(at_zero) +
               ", so 0 is not a fixed value; the fixed set is the corner set with minimum "
               "pairwise distance " +
               fmt17(min_gap) + "\n";
    run.outcome = "analysis";
    run.expectation_met = cfg.expect == "analysis";
  } else if (cfg.mode == ScenarioMode::explore) {
    const Point x0(cfg.x1.begin(), cfg.x1.end());
    const auto res = word_ball_orbit(cfg.maps, cfg.max_len, x0, cfg.word_cap);
    std::string csv = "length,points,diameter\n";
    bool monotone = true;
    for (std::size_t i = 0; i < res.levels.size(); ++i) {
      const auto& lv = res.levels[i];
      csv += std::to_string(lv.word_length) + "," + std::to_string(lv.point_count) + "," +
             fmt17(lv.diameter) + "\n";
      if (i > 0 && lv.diameter < res.levels[i - 1].diameter) monotone = false;
    }
    bool growth = true;
    for (std::size_t k = 1; 2 * k < res.levels.size() && k <= 8; ++k) {
      if (res.levels[2 * k].diameter < static_cast<double>(k)) growth = false;
    }
    write_file(cfg.out_dir + "/words.csv", csv, run.files_written);
    summary += "max_word_length = " + std::to_string(cfg.max_len) + "\n";
    summary += "points_reached = " + std::to_string(res.levels.back().point_count) + "\n";
    summary += "final_diameter = " + fmt17(res.levels.back().diameter) + "\n";
    summary += "diameters_nondecreasing = " + std::string(monotone ? "yes" : "no") + "\n";
    summary += "diameter_at_2k_at_least_k = " + std::string(growth ? "yes" : "no") + "\n";
    if (cfg.maps.size() == 2) {
      const auto* g1 = std::get_if<AffineMap>(&cfg.maps[0].node);
      const auto* g2 = std::get_if<AffineMap>(&cfg.maps[1].node);
      if (g1 && g2) {
        const auto ord = affine_order(compose_affine(*g1, *g2));
        summary += "note = g1*g2 has " +
                   (ord ? "finite order " + std::to_string(*ord) + " (bounded orbit)"
                        : std::string("no finite order up to 64")) +
                   "\n";
        const AffineMap mix = compose_affine(*g1, std::get<AffineMap>(inverse(cfg.maps[1]).node));
        bool translation = true;
        for (std::size_t i = 0; i < mix.dim && translation; ++i) {
          for (std::size_t j = 0; j < mix.dim; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(mix.a[i * mix.dim + j] - want) > 1e-9) translation = false;
          }
        }
        if (translation) {
          summary += "note = g1*g2^-1 is the translation by (" + coords_str(mix.b) +
                     "); mixed words drift linearly, so the generated group has unbounded "
                     "orbits\n";
        }
      }
    }
    run.outcome = "explored";
    run.expectation_met = cfg.expect == "explored" && monotone && growth;
  } else {
    IterationConfig icfg;
    icfg.start = cfg.x1;
    icfg.tol = cfg.tol;
    icfg.max_iter = cfg.max_iter;
    icfg.lambda = cfg.lambda;
    icfg.mode = cfg.mode == ScenarioMode::center      ? IterationMode::center
                : cfg.mode == ScenarioMode::inflated  ? IterationMode::inflated_center
                                                      : IterationMode::involution;
    if (cfg.space == SpaceKind::box) {
      BoxAction act;
      act.group = build_group(cfg);
      act.maps = cfg.maps;
      act.domain.bounds = Box(cfg.lo, cfg.hi);
      run.trace = cfg.mode == ScenarioMode::involution
                      ? iterate_involution<BoxSpace>(cfg.maps[1], act.domain, icfg)
                      : iterate_action(act, icfg);
    } else {
      CircleAction act;
      act.group = build_group(cfg);
      act.maps = cfg.maps;
      run.trace = cfg.mode == ScenarioMode::involution
                      ? iterate_involution<CircleSpace>(cfg.maps[1], act.domain, icfg)
                      : iterate_action(act, icfg);
    }
    write_file(cfg.out_dir + "/trace.csv", run.trace.to_csv(), run.files_written);
    run.outcome = to_string(run.trace.outcome);
    run.expectation_met = run.outcome == cfg.expect;
    summary += "outcome = " + run.outcome + "\n";
    summary += "iterations = " + std::to_string(run.trace.steps.size()) + "\n";
    summary += "final_point = " + coords_str(run.trace.final_point) + "\n";
    summary += "final_delta = " + fmt17(run.trace.final_delta) + "\n";
    summary += "final_residual = " + fmt17(run.trace.final_residual) + "\n";
    summary += "lipschitz = " + fmt17(run.trace.lipschitz) +
               (run.trace.lipschitz_exact ? " (exact)" : " (estimate only)") + "\n";
    summary += "hypothesis_ok = " + std::string(run.trace.hypothesis_ok ? "yes" : "no") + "\n";
    summary += "lambda = " + fmt17(cfg.lambda) + "\n";
    summary += "tol = " + fmt17(cfg.tol) + "\n";
    summary += "max_iter = " + std::to_string(cfg.max_iter) + "\n";
  }

  summary += "seed = " + std::to_string(cfg.seed) + "\n";
  summary += "expect = " + cfg.expect + "\n";
  summary += "expectation_met = " + std::string(run.expectation_met ? "yes" : "no") + "\n";
  run.summary_text = summary;
  write_file(cfg.out_dir + "/summary.txt", summary, run.files_written);
  write_file(cfg.out_dir + "/config_echo.cfg", render_config(cfg), run.files_written);
  return run;
}

}  // namespace hyperfix

#endif
