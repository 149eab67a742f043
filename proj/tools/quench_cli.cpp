#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quench/runner.hpp"

using quench::RunConfig;

int main(int argc, char** argv) {
  RunConfig cfg;

  // --from-meta seeds the defaults; explicit flags still override, so it is
  // resolved before the parser is built.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--from-meta") {
      std::ifstream is(argv[i + 1]);
      if (!is) {
        std::cerr << "cannot read " << argv[i + 1] << '\n';
        return 1;
      }
      std::stringstream ss;
      ss << is.rdbuf();
      try {
        cfg = RunConfig::from_json(ss.str());
      } catch (const std::exception& e) {
        std::cerr << "bad metadata: " << e.what() << '\n';
        return 1;
      }
    }
  }

  CLI::App app{
      "quench: Loschmidt-echo statistics of the quenched transverse-field Ising chain"};
  app.require_subcommand(0, 1);
  std::string from_meta;
  app.add_option("--from-meta", from_meta,
                 "load a previous run's metadata JSON as the configuration");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--h1", cfg.spec.h1, "initial-state coupling");
    sub->add_option("--h2", cfg.spec.h2, "evolution coupling");
    sub->add_option("--size", cfg.spec.L, "chain length (even)");
    sub->add_option("--t-max", cfg.t_max, "time-grid upper end");
    sub->add_option("--samples", cfg.samples, "sample / grid-point count");
    sub->add_option("--horizon", cfg.horizon, "sampling horizon T");
    sub->add_option("--seed", cfg.seed, "sampler seed");
    sub->add_option("--bins", cfg.bins, "histogram bin count");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--workers", cfg.workers,
                    "worker thread count (default: QUENCH_WORKERS or hardware)");
    sub->add_option("--n-max", cfg.n_max, "highest moment order");
    sub->add_option("--merge-tol", cfg.merge_tol, "spectral merge tolerance");
    sub->add_option("--prune-tol", cfg.prune_tol, "spectral prune tolerance");
    sub->add_option("--delta-small", cfg.thresholds.delta_small,
                    "classifier: small-quench threshold");
    sub->add_option("--c-qc", cfg.thresholds.c_qc,
                    "classifier: quasi-critical threshold");
    sub->add_option("--c-exp", cfg.thresholds.c_exp,
                    "classifier: exponential-regime threshold on -ln(mean)");
    if (sub->get_name() == "sweep")
      sub->add_option(
          "--grid",
          [&cfg](const std::vector<std::string>& vals) {
            double lo, hi;
            int steps;
            char c1, c2;
            std::istringstream is(vals.at(0));
            if (!(is >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':')
              return false;
            cfg.grid_min = lo;
            cfg.grid_max = hi;
            cfg.grid_steps = steps;
            return true;
          },
          "coupling grid as min:max:steps (applies to both axes)");
  };

  for (const char* name : {"series", "moments", "spectrum", "distribution",
                           "sweep", "thermo", "magnetization", "verify"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  if (app.get_subcommands().size() == 1)
    cfg.command = app.get_subcommands().front()->get_name();
  else if (cfg.command.empty()) {
    std::cerr << app.help() << '\n';
    return 1;
  }

  try {
    return quench::run(cfg) ? 0 : 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 2;
  }
}
