// Command-line front end: `verify` runs every property suite, `run` executes
// a scenario config, `list-scenarios` prints the shipped catalog.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "hyperfix/scenario.hpp"
#include "hyperfix/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hyperconvex center-iteration laboratory"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run all property suites");
  std::uint64_t seed = 20250810ull;
  std::size_t samples = 10000;
  verify->add_option("--seed", seed, "base seed for every sampled suite");
  verify->add_option("--samples", samples,
                     "scales the documented per-suite sample counts (default 10000)");

  auto* run = app.add_subcommand("run", "run one scenario config");
  std::string config_path, out_dir;
  run->add_option("--config", config_path, "path to a scenario config")->required();
  run->add_option("--out", out_dir, "output directory (overrides [output] dir)");

  auto* list = app.add_subcommand("list-scenarios", "print the shipped scenario catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      hyperfix::VerifyOptions opts;
      opts.seed = seed;
      opts.samples = samples;
      const auto results = hyperfix::verify_all(opts);
      std::printf("suite,cases,violations,max_slack,seed\n");
      bool all_pass = true;
      for (const auto& r : results) {
        std::printf("%s\n", r.line().c_str());
        for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
          std::printf("#   violation: %s\n", r.violations[i].c_str());
        }
        all_pass = all_pass && r.pass();
      }
      std::printf("# %zu suites, %s\n", results.size(), all_pass ? "all pass" : "FAILURES");
      return all_pass ? 0 : 1;
    }
    if (run->parsed()) {
      const auto cfg = hyperfix::load_config(config_path);
      const auto res = hyperfix::run_scenario(cfg, out_dir);
      std::fputs(res.summary_text.c_str(), stdout);
      for (const auto& f : res.files_written) std::printf("# wrote %s\n", f.c_str());
      return res.expectation_met ? 0 : 1;
    }
    if (list->parsed()) {
      std::printf("%-26s %-28s %s\n", "name", "expectation", "description");
      for (const auto& info : hyperfix::scenario_catalog()) {
        std::printf("%-26s %-28s %s\n", info.name.c_str(), info.expectation.c_str(),
                    info.description.c_str());
        std::printf("%-26s config: scenarios/%s\n", "", info.file.c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
