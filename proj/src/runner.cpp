#include "quench/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <json.hpp>

#include "quench/echo.hpp"
#include "quench/io.hpp"
#include "quench/ising.hpp"
#include "quench/moments.hpp"
#include "quench/oracle.hpp"
#include "quench/quadrature.hpp"
#include "quench/sampling.hpp"
#include "quench/spectral.hpp"
#include "quench/thermo.hpp"

namespace quench {

namespace {

using nlohmann::json;

json base_meta(const RunConfig& cfg) {
  return json{{"schema_version", 1},
              {"command", cfg.command},
              {"h1", cfg.spec.h1},
              {"h2", cfg.spec.h2},
              {"L", cfg.spec.L},
              {"horizon", cfg.horizon},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"bins", cfg.bins},
              {"t_max", cfg.t_max},
              {"grid_min", cfg.grid_min},
              {"grid_max", cfg.grid_max},
              {"grid_steps", cfg.grid_steps},
              {"n_max", cfg.n_max},
              {"merge_tol", cfg.merge_tol},
              {"prune_tol", cfg.prune_tol},
              {"thresholds",
               {{"delta_small", cfg.thresholds.delta_small},
                {"c_qc", cfg.thresholds.c_qc},
                {"c_exp", cfg.thresholds.c_exp}}},
              {"out_dir", cfg.out_dir.string()},
              {"workers", cfg.workers}};
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot open output file: " + p.string());
  return os;
}

void write_meta(const RunConfig& cfg, const json& meta) {
  auto os = open_out(cfg.out_dir / (cfg.command + "_meta.json"));
  os << meta.dump(2) << '\n';
}

int resolve_workers(const RunConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  if (const char* env = std::getenv("QUENCH_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// ---- commands -------------------------------------------------------------

void run_series(const RunConfig& cfg) {
  const ModeData md = mode_data(cfg.spec);
  const std::int64_t n = cfg.samples > 0 ? cfg.samples : 1000;
  auto os = open_out(cfg.out_dir / "series.csv");
  os << "t,echo,gaussian,first_order\n";
  for (std::int64_t i = 0; i <= n; ++i) {
    const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(n);
    os << format_double(t) << ',' << format_double(loschmidt(md, t)) << ','
       << format_double(short_time_gaussian(md, t)) << ','
       << format_double(first_order_echo(md, t)) << '\n';
  }
  json meta = base_meta(cfg);
  meta["mean_echo_log"] = mean_echo_log(md);
  meta["energy_variance"] = energy_variance(md);
  write_meta(cfg, meta);
}

void run_moments(const RunConfig& cfg) {
  const ModeData md = mode_data(cfg.spec);
  auto os = open_out(cfg.out_dir / "moments.csv");
  os << "n,exact_log,nonresonant_log,mean_log,variance,variance_nr,bound_margin\n";
  const MomentBoundReport bound = moment_bound_check(md, std::max(2, cfg.n_max));
  for (int n = 1; n <= cfg.n_max; ++n) {
    const MomentReport r = moment_report(md, n);
    os << n << ',' << format_double(r.exact_log) << ',';
    if (r.nonresonant_log)
      os << format_double(*r.nonresonant_log);
    else
      os << "nan";
    os << ',' << format_double(r.mean_log) << ',' << format_double(r.variance)
       << ',' << format_double(r.variance_nr) << ',';
    os << (n >= 2 ? format_double(bound.margins[static_cast<std::size_t>(n - 2)])
                  : std::string("nan"));
    os << '\n';
  }
  json meta = base_meta(cfg);
  meta["moment_bound_holds"] = bound.holds;
  write_meta(cfg, meta);
}

void run_spectrum(const RunConfig& cfg) {
  const ModeData md = mode_data(cfg.spec);
  const double mt = cfg.merge_tol >= 0.0 ? cfg.merge_tol : default_merge_tol(md);
  const SpectralMeasure m = spectral_measure(md, mt, cfg.prune_tol);
  {
    auto os = open_out(cfg.out_dir / "spectrum.csv");
    write_csv(m, os);
  }
  {
    auto os = open_out(cfg.out_dir / "one_particle.csv");
    os << "omega,amplitude\n";
    for (const SpectralAtom& at : one_particle_amplitude(md))
      os << format_double(at.omega) << ',' << format_double(at.weight) << '\n';
  }
  json meta = base_meta(cfg);
  meta["atom_count"] = m.atoms.size();
  meta["discarded_mass"] = m.discarded_mass;
  const GapScales gs = gap_scales(md);
  meta["delta10"] = gs.delta10;
  meta["delta11"] = gs.delta11;
  try {
    meta["revival_time"] = revival_time(m);
  } catch (const NoDynamicsError&) {
    meta["revival_time"] = nullptr;
  }
  write_meta(cfg, meta);
}

void run_distribution(const RunConfig& cfg) {
  const ModeData md = mode_data(cfg.spec);
  const double T = cfg.horizon > 0.0 ? cfg.horizon : default_horizon(cfg);
  const std::int64_t N = cfg.samples > 0 ? cfg.samples : 400000;
  const std::vector<double> vals = sample_echo(md, T, N, cfg.seed);
  EmpiricalDistribution emp = histogram(vals, cfg.bins);
  emp.t_horizon = T;
  emp.seed = cfg.seed;
  {
    auto os = open_out(cfg.out_dir / "histogram.csv");
    os << "bin_left,bin_right,count,density\n";
    for (std::size_t i = 0; i < emp.counts.size(); ++i) {
      const double w = emp.bin_edges[i + 1] - emp.bin_edges[i];
      os << format_double(emp.bin_edges[i]) << ','
         << format_double(emp.bin_edges[i + 1]) << ',' << emp.counts[i] << ','
         << format_double(static_cast<double>(emp.counts[i]) /
                          (static_cast<double>(emp.n_samples) * w))
         << '\n';
    }
  }
  const Regime regime = classify_regime(cfg.spec, cfg.thresholds);
  const double mlog = mean_echo_log(md);

  json meta = base_meta(cfg);
  meta["regime"] = to_string(regime);
  meta["mean_echo_log"] = mlog;
  meta["exact_variance"] = exact_variance(md);

  // model curve for the classified regime
  std::function<double(double)> model;
  switch (regime) {
    case Regime::Exponential:
      model = [mlog](double x) { return exponential_density(mlog, x); };
      break;
    case Regime::Gaussian: {
      const double var = exact_variance(md);
      const double mean = std::exp(mlog);
      if (var > 0.0)
        model = [mean, var](double x) { return gaussian_density(mean, var, x); };
      break;
    }
    case Regime::BatmanHood: {
      const SpectralMeasure m = spectral_measure(md);
      const BatmanParams bp = batman_params(m, mlog);
      meta["batman"] = {{"A", bp.A},
                        {"B", bp.B},
                        {"omega_A", bp.omega_A},
                        {"omega_B", bp.omega_B},
                        {"mean", bp.mean}};
      model = [bp](double x) { return batman_density(bp, x); };
      break;
    }
    case Regime::Degenerate:
      break;
  }
  if (model) {
    auto os = open_out(cfg.out_dir / "model.csv");
    os << "x,density\n";
    const double lo = emp.bin_edges.front(), hi = emp.bin_edges.back();
    const int pts = 800;
    for (int i = 0; i <= pts; ++i) {
      const double x = lo + (hi - lo) * i / pts;
      os << format_double(x) << ',' << format_double(model(x)) << '\n';
    }
    meta["tv_distance"] = distribution_distance(emp, model);
  }
  write_meta(cfg, meta);
}

void run_sweep(const RunConfig& cfg) {
  const int steps = cfg.grid_steps;
  if (steps < 2) throw std::invalid_argument("sweep: grid_steps must be >= 2");
  struct Row {
    double h1, h2, mean, variance, variance_nr;
    Regime regime;
  };
  std::vector<Row> rows(static_cast<std::size_t>(steps) * steps);
  std::atomic<std::size_t> next{0};
  const int nw = resolve_workers(cfg);
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      const int r = static_cast<int>(i) / steps;
      const int c = static_cast<int>(i) % steps;
      const double h1 = cfg.grid_min + (cfg.grid_max - cfg.grid_min) * r / (steps - 1);
      const double h2 = cfg.grid_min + (cfg.grid_max - cfg.grid_min) * c / (steps - 1);
      const QuenchSpec spec{h1, h2, cfg.spec.L};
      const ModeData md = mode_data(spec);
      rows[i] = {h1,
                 h2,
                 std::exp(mean_echo_log(md)),
                 exact_variance(md),
                 nonresonant_moments(md).variance_nr,
                 classify_regime(spec, cfg.thresholds)};
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < nw - 1; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  auto os = open_out(cfg.out_dir / "sweep.csv");
  os << "h1,h2,mean,variance,variance_nr,regime\n";
  for (const Row& r : rows)
    os << format_double(r.h1) << ',' << format_double(r.h2) << ','
       << format_double(r.mean) << ',' << format_double(r.variance) << ','
       << format_double(r.variance_nr) << ',' << to_string(r.regime) << '\n';
  write_meta(cfg, base_meta(cfg));
}

void run_thermo(const RunConfig& cfg) {
  const std::int64_t n = cfg.samples > 0 ? cfg.samples : 500;
  const ThermoAsymptotics asym = thermo_asymptotics(cfg.spec.h1, cfg.spec.h2);
  auto os = open_out(cfg.out_dir / "thermo.csv");
  os << "t,s_t,s_asymptotic\n";
  for (std::int64_t i = 0; i <= n; ++i) {
    const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(n);
    os << format_double(t) << ',' << format_double(s_of_t(cfg.spec.h1, cfg.spec.h2, t))
       << ',' << format_double(t != 0.0 ? asymptotic_s(asym, t) : asym.s_inf) << '\n';
  }
  json meta = base_meta(cfg);
  meta["E_m"] = asym.E_m;
  meta["E_M"] = asym.E_M;
  meta["s_inf"] = asym.s_inf;
  meta["g"] = asym.g;
  meta["A_m"] = asym.A_m;
  meta["A_M"] = asym.A_M;
  write_meta(cfg, meta);
}

void run_magnetization(const RunConfig& cfg) {
  const std::int64_t n = cfg.samples > 0 ? cfg.samples : 1000;
  auto os = open_out(cfg.out_dir / "magnetization.csv");
  os << "t,m\n";
  for (std::int64_t i = 0; i <= n; ++i) {
    const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(n);
    os << format_double(t) << ',' << format_double(magnetization(cfg.spec, t)) << '\n';
  }
  // exact time-averaged mean/variance over the full Brillouin zone
  double mave = 0.0, mvar = 0.0;
  for (int i = 0; i < cfg.spec.L; ++i) {
    const double k = std::numbers::pi * (2.0 * i + 1.0) / cfg.spec.L;
    const double th2 = bogoliubov_angle(cfg.spec.h2, k);
    const double dth = th2 - bogoliubov_angle(cfg.spec.h1, k);
    mave += std::cos(th2) * std::cos(dth);
    const double s = std::sin(th2) * std::sin(dth);
    mvar += s * s;
  }
  mave /= cfg.spec.L;
  mvar /= static_cast<double>(cfg.spec.L) * cfg.spec.L;
  json meta = base_meta(cfg);
  meta["m_average"] = mave;
  meta["m_variance"] = mvar;
  write_meta(cfg, meta);
}

bool run_verify(const RunConfig& cfg) {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
  };
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> hdist(-2.0, 2.0);
  std::uniform_real_distribution<double> tdist(0.0, 100.0);

  {  // product formula vs brute spectral sum
    double worst = 0.0;
    for (int L : {12, 18}) {
      const ModeData md = mode_data({hdist(rng), hdist(rng), L});
      const StateEnsemble ens = enumerate_states(md);
      for (int i = 0; i < 100; ++i) {
        const double t = tdist(rng);
        worst = std::max(worst, std::abs(loschmidt(md, t) - brute_echo(ens, t)));
      }
    }
    add("oracle_echo_equivalence", worst <= 1e-10, "max_abs_err=" + format_double(worst));
  }
  {  // purity identity
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const ModeData md = mode_data({hdist(rng), hdist(rng), 18});
      const StateEnsemble ens = enumerate_states(md);
      worst = std::max(worst, std::abs(std::exp(mean_echo_log(md)) - power_sum(ens, 1)));
    }
    add("mean_identity", worst <= 1e-12, "max_abs_err=" + format_double(worst));
  }
  {  // displayed g0 expansions and derangement counts
    const bool g0_ok = g0_coefficient(1, 1.0) == -0.5 &&
                       g0_coefficient(2, 1.0) == -1.0 + 0.375 &&
                       std::abs(g0_coefficient(4, 1.0) - (-0.7265625)) < 1e-15;
    const bool der_ok = derangement_count(2) == 1 && derangement_count(3) == 2 &&
                        derangement_count(4) == 9;
    add("g0_and_derangements", g0_ok && der_ok, "");
  }
  {  // mu2 - mu1^2 == variance
    const ModeData md = mode_data({0.3, 1.4, 18});
    const double lhs = std::exp(exact_moment_log(md, 2)) - std::exp(2.0 * mean_echo_log(md));
    const double rhs = exact_variance(md);
    const double rel = std::abs(lhs - rhs) / rhs;
    add("variance_identity", rel <= 1e-12, "rel_err=" + format_double(rel));
  }
  {  // variance inequality and moment bound at a few points
    bool ok = true;
    for (auto [h1, h2] : {std::pair{0.3, 1.4}, {0.99, 1.01}, {-1.5, 0.5}}) {
      const ModeData md = mode_data({h1, h2, 40});
      ok = ok && exact_variance(md) >= nonresonant_moments(md).variance_nr;
      ok = ok && moment_bound_check(md, 6).holds;
    }
    add("variance_inequality_and_bound", ok, "");
  }
  {  // spectral reconstruction
    const ModeData md = mode_data({0.3, 1.4, 18});
    const SpectralMeasure m = spectral_measure(md, 1e-9, 1e-12);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double t = tdist(rng);
      worst = std::max(worst, std::abs(reconstruct(m, t) - loschmidt(md, t)));
    }
    add("spectral_reconstruction", worst <= m.discarded_mass + 1e-8,
        "max_abs_err=" + format_double(worst));
  }
  {  // appendix series identity
    bool ok = true;
    for (double x : {0.1, 0.5, 0.9}) {
      const SeriesIdentity id = series_identity_check(x);
      ok = ok && std::abs(id.lhs - id.rhs) <= 1e-12;
    }
    add("series_identity", ok, "");
  }
  {  // power sums vs closed form
    const ModeData md = mode_data({hdist(rng), hdist(rng), 12});
    const StateEnsemble ens = enumerate_states(md);
    bool ok = true;
    for (int m = 1; m <= 3; ++m)
      ok = ok && std::abs(power_sum(ens, m) - weight_power_sum(md, m)) <= 1e-12;
    add("power_sum_closed_form", ok, "");
  }
  {  // density of states normalization: int rho = pi (edge substitutions)
    const BandEdges be = band_edges(2.0);
    auto rho = [&](double w) { return density_of_states(2.0, w); };
    const double mid = 0.5 * (be.E_m + be.E_M);
    // u >= 1e-7 keeps E +- u^2 strictly inside the band in double precision
    auto left = [&](double u) { return 2.0 * u * rho(be.E_m + u * u); };
    auto right = [&](double u) { return 2.0 * u * rho(be.E_M - u * u); };
    const double v = integrate_adaptive(left, 1e-7, std::sqrt(mid - be.E_m), 1e-10) +
                     integrate_adaptive(right, 1e-7, std::sqrt(be.E_M - mid), 1e-10);
    add("dos_normalization", std::abs(v - std::numbers::pi) <= 1e-6,
        "integral=" + format_double(v));
  }

  bool all_ok = true;
  json jchecks = json::array();
  for (const Check& c : checks) {
    all_ok = all_ok && c.ok;
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name
              << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
    jchecks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  json meta = base_meta(cfg);
  meta["checks"] = jchecks;
  meta["all_ok"] = all_ok;
  write_meta(cfg, meta);
  return all_ok;
}

}  // namespace

double default_horizon(const RunConfig& cfg) {
  return std::max(1e4, 1000.0 * cfg.spec.L);
}

std::string RunConfig::to_json() const { return base_meta(*this).dump(2); }

RunConfig RunConfig::from_json(const std::string& text) {
  const json j = json::parse(text);
  RunConfig cfg;
  cfg.command = j.value("command", "series");
  cfg.spec.h1 = j.value("h1", 1.0);
  cfg.spec.h2 = j.value("h2", 1.5);
  cfg.spec.L = j.value("L", 100);
  cfg.horizon = j.value("horizon", 0.0);
  cfg.samples = j.value("samples", std::int64_t{0});
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.bins = j.value("bins", 50);
  cfg.t_max = j.value("t_max", 50.0);
  cfg.grid_min = j.value("grid_min", -2.0);
  cfg.grid_max = j.value("grid_max", 2.0);
  cfg.grid_steps = j.value("grid_steps", 21);
  cfg.n_max = j.value("n_max", 6);
  cfg.merge_tol = j.value("merge_tol", -1.0);
  cfg.prune_tol = j.value("prune_tol", kDefaultPruneTol);
  if (j.contains("thresholds")) {
    cfg.thresholds.delta_small = j["thresholds"].value("delta_small", 0.35);
    cfg.thresholds.c_qc = j["thresholds"].value("c_qc", 2.0);
    cfg.thresholds.c_exp = j["thresholds"].value("c_exp", 1.5);
  }
  cfg.out_dir = j.value("out_dir", std::string("."));
  cfg.workers = j.value("workers", 0);
  return cfg;
}

bool run(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  if (cfg.command == "series") {
    run_series(cfg);
  } else if (cfg.command == "moments") {
    run_moments(cfg);
  } else if (cfg.command == "spectrum") {
    run_spectrum(cfg);
  } else if (cfg.command == "distribution") {
    run_distribution(cfg);
  } else if (cfg.command == "sweep") {
    run_sweep(cfg);
  } else if (cfg.command == "thermo") {
    run_thermo(cfg);
  } else if (cfg.command == "magnetization") {
    run_magnetization(cfg);
  } else if (cfg.command == "verify") {
    return run_verify(cfg);
  } else {
    throw std::invalid_argument("unknown command: " + cfg.command);
  }
  return true;
}

}  // namespace quench
