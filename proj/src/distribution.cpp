#include "quench/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quench/echo.hpp"
#include "quench/ising.hpp"
#include "quench/moments.hpp"
#include "quench/quadrature.hpp"
#include "quench/sampling.hpp"

namespace quench {

std::vector<double> sample_echo(const ModeData& md, double T, std::int64_t N,
                                std::uint64_t seed) {
  const std::vector<double> ts = low_discrepancy_times(T, N, seed);
  std::vector<double> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = loschmidt(md, ts[i]);
  return out;
}

EmpiricalDistribution histogram(std::span<const double> samples, int bins) {
  if (samples.empty()) throw std::invalid_argument("histogram: no samples");
  if (bins < 2) throw std::invalid_argument("histogram: need at least 2 bins");
  const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
  double lo = *mn, hi = *mx;
  if (lo == hi) hi = lo + 1.0;  // constant samples: one occupied bin
  std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i)
    edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
  return histogram(samples, std::move(edges));
}

EmpiricalDistribution histogram(std::span<const double> samples,
                                std::vector<double> edges) {
  if (samples.empty()) throw std::invalid_argument("histogram: no samples");
  if (edges.size() < 3) throw std::invalid_argument("histogram: need at least 2 bins");
  if (!std::is_sorted(edges.begin(), edges.end()))
    throw std::invalid_argument("histogram: edges must be increasing");
  EmpiricalDistribution d;
  d.bin_edges = std::move(edges);
  d.counts.assign(d.bin_edges.size() - 1, 0);
  const double lo = d.bin_edges.front(), hi = d.bin_edges.back();
  for (double v : samples) {
    if (v < lo || v > hi) continue;
    std::size_t idx;
    if (v == hi) {
      idx = d.counts.size() - 1;  // rightmost bin closed
    } else {
      idx = static_cast<std::size_t>(
                std::upper_bound(d.bin_edges.begin(), d.bin_edges.end(), v) -
                d.bin_edges.begin()) - 1;
    }
    ++d.counts[idx];
  }
  for (std::int64_t c : d.counts) d.n_samples += c;
  return d;
}

double batman_density(const BatmanParams& p, double x, bool* capped) {
  if (!(p.A > 0.0))
    throw std::invalid_argument("batman_density: A = 0 degenerates to two atoms");
  if (!(p.B > 0.0))
    throw std::invalid_argument("batman_density: B = 0 (periodic limiting case) rejected");
  if (p.A < p.B) throw std::invalid_argument("batman_density: requires A >= B");
  if (capped) *capped = false;

  double chi = x - p.mean;
  const double support = p.A + p.B;
  if (std::abs(chi) >= support) return 0.0;

  // log singularities at chi = +-(A - B); evaluate a hair away and flag
  const double eps_cap = 1e-9;
  const double peak = p.A - p.B;
  for (double sgn : {-1.0, 1.0}) {
    if (std::abs(chi - sgn * peak) < eps_cap) {
      chi = sgn * peak + (chi >= sgn * peak ? eps_cap : -eps_cap);
      if (capped) *capped = true;
      break;
    }
  }

  const double lo = std::max(-1.0, (chi - p.B) / p.A);
  const double hi = std::min(1.0, (chi + p.B) / p.A);
  if (hi <= lo) return 0.0;

  // integrand: 1/sqrt(((chi+B)/A - z)(z - (chi-B)/A)(1 - z^2)); at each end
  // exactly one factor vanishes linearly (both only at the peaks, capped
  // above). Substituting z = end -+ u^2 cancels it against dz = 2u du; the
  // cancelled factor is dropped analytically, never divided out numerically
  // (z - end underflows once the interval gets tiny near the support edge).
  const double zp = (chi + p.B) / p.A;  // upper root of the first factor
  const double zm = (chi - p.B) / p.A;  // lower root of the second factor
  const bool lo_is_zm = zm >= -1.0;     // which factor vanishes at each end
  const bool hi_is_zp = zp <= 1.0;
  const double mid = 0.5 * (lo + hi);
  const GaussRule& rule = gauss_legendre(128);
  double total = 0.0;
  for (int side = 0; side < 2; ++side) {
    const double end = side == 0 ? lo : hi;
    const double umax = std::sqrt(std::abs(mid - end));
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double u = 0.5 * umax * (rule.x[i] + 1.0);
      const double z = side == 0 ? end + u * u : end - u * u;
      double rest = 1.0;  // the three non-vanishing factors
      if (side == 0) {
        rest = (zp - z) * (1.0 - z) * (lo_is_zm ? (1.0 + z) : (z - zm));
      } else {
        rest = (z - zm) * (1.0 + z) * (hi_is_zp ? (1.0 - z) : (zp - z));
      }
      total += 0.5 * umax * rule.w[i] * 2.0 / std::sqrt(rest);
    }
  }
  return total / (std::numbers::pi * std::numbers::pi * p.A);
}

BatmanParams batman_params(const SpectralMeasure& m, double mean_log) {
  const SpectralAtom* first = nullptr;
  const SpectralAtom* second = nullptr;
  for (const SpectralAtom& at : m.atoms) {
    if (at.omega <= 0.0) continue;
    if (!first || at.weight > first->weight) {
      second = first;
      first = &at;
    } else if (!second || at.weight > second->weight) {
      second = &at;
    }
  }
  if (!first || !second)
    throw std::domain_error(
        "batman_params: insufficient structure (need two nonzero-frequency atoms)");
  BatmanParams p;
  p.mean = std::exp(mean_log);
  p.A = first->weight;
  p.B = second->weight;
  p.omega_A = first->omega;
  p.omega_B = second->omega;
  return p;
}

double exponential_density(double mean_log, double x) {
  if (!(mean_log < 0.0))
    throw std::invalid_argument("exponential_density: requires mean_log < 0");
  if (x < 0.0) return 0.0;
  const double lbar = std::exp(mean_log);
  return std::exp(-x / lbar) / lbar;
}

double exponential_density_eps(double mean_log, double eps, double x) {
  if (!(mean_log < 0.0))
    throw std::invalid_argument("exponential_density_eps: requires mean_log < 0");
  if (!(eps > 0.0)) throw std::invalid_argument("exponential_density_eps: eps must be > 0");
  if (x <= 0.0) return 0.0;
  const double lbar = std::exp(mean_log);
  // normalization by quadrature; the integrand vanishes at both ends
  const double norm = integrate_adaptive(
      [&](double y) { return y > 0.0 ? std::exp(-y / lbar - eps / y) : 0.0; }, 0.0,
      lbar * (50.0 + 10.0 * std::sqrt(eps / lbar)), 1e-12 * lbar);
  return std::exp(-x / lbar - eps / x) / norm;
}

double gaussian_density(double mean, double variance, double x) {
  if (!(variance > 0.0))
    throw std::invalid_argument("gaussian_density: variance must be > 0");
  const double d = x - mean;
  return std::exp(-0.5 * d * d / variance) /
         std::sqrt(2.0 * std::numbers::pi * variance);
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Degenerate: return "Degenerate";
    case Regime::Exponential: return "Exponential";
    case Regime::Gaussian: return "Gaussian";
    case Regime::BatmanHood: return "BatmanHood";
  }
  return "?";
}

Regime classify_regime(const QuenchSpec& spec, const RegimeThresholds& th) {
  spec.validate();
  if (spec.h1 == spec.h2) return Regime::Degenerate;
  const double dh = std::abs(spec.h2 - spec.h1);
  if (dh <= th.delta_small && spec.L * std::abs(1.0 - spec.h2) <= th.c_qc)
    return Regime::BatmanHood;
  const double mlog = mean_echo_log(mode_data(spec));
  if (-mlog >= th.c_exp) return Regime::Exponential;
  return Regime::Gaussian;
}

double distribution_distance(const EmpiricalDistribution& emp,
                             const std::function<double(double)>& density) {
  if (emp.n_samples <= 0) throw std::invalid_argument("distribution_distance: empty histogram");
  double tv = 0.0;
  double q_in = 0.0;
  for (std::size_t i = 0; i + 1 < emp.bin_edges.size(); ++i) {
    const double q =
        integrate_gauss(density, emp.bin_edges[i], emp.bin_edges[i + 1], 32);
    const double p = static_cast<double>(emp.counts[i]) /
                     static_cast<double>(emp.n_samples);
    tv += std::abs(p - q);
    q_in += q;
  }
  tv += std::max(0.0, 1.0 - q_in);  // model mass outside the binned range
  return std::clamp(0.5 * tv, 0.0, 1.0);
}

}  // namespace quench
