#pragma once

#include <functional>
#include <span>

#include "quench/spectral.hpp"
#include "quench/types.hpp"

namespace quench {

struct EmpiricalDistribution {
  std::vector<double> bin_edges;     // B+1 increasing reals
  std::vector<std::int64_t> counts;  // B entries, sum == n_samples
  std::int64_t n_samples = 0;
  double t_horizon = 0.0;
  std::uint64_t seed = 0;
};

// N echo values at times from the low-discrepancy sequence on [0, T]
// (golden-ratio Kronecker sequence; the seed selects the offset).
// Deterministic for fixed arguments.
std::vector<double> sample_echo(const ModeData& md, double T, std::int64_t N,
                                std::uint64_t seed);

// Half-open bins, rightmost closed. bins >= 2. The count overload spans
// [min, max] of the samples.
EmpiricalDistribution histogram(std::span<const double> samples, int bins);
EmpiricalDistribution histogram(std::span<const double> samples,
                                std::vector<double> edges);

struct BatmanParams {
  double mean = 0.0;  // Lbar
  double A = 0.0;     // largest folded amplitude, A >= B > 0
  double B = 0.0;
  double omega_A = 0.0;
  double omega_B = 0.0;
};

// Two-frequency torus density
//   P(chi + mean) = (1/pi^2 A) int dz / sqrt(((chi+B)/A - z)(z - (chi-B)/A)(1 - z^2))
// with support [mean - (A+B), mean + (A+B)] and logarithmic peaks at
// mean +- (A - B). The endpoint inverse-square-root singularities are removed
// by splitting the range at its midpoint and substituting z = limit -+ u^2;
// a fixed 128-node Gauss-Legendre rule then suffices on each smooth half.
// At the peak abscissae the value at distance 1e-9 is returned and *capped set.
double batman_density(const BatmanParams& p, double x, bool* capped = nullptr);

// A, B and frequencies from the two largest nonzero-frequency folded atoms
// (their folded weights are the cosine amplitudes). Throws std::domain_error
// ("insufficient structure") with fewer than two nonzero atoms.
BatmanParams batman_params(const SpectralMeasure& m, double mean_log);

// theta(x) exp(-x/Lbar)/Lbar. Requires mean_log < 0.
double exponential_density(double mean_log, double x);

// Optional refined model P(x) ~ exp(-x/Lbar - eps/x), numerically normalized;
// eps is a user parameter, no default fit.
double exponential_density_eps(double mean_log, double eps, double x);

double gaussian_density(double mean, double variance, double x);

enum class Regime { Degenerate, Exponential, Gaussian, BatmanHood };
const char* to_string(Regime r);

// Classifier constants; see classify_regime. Defaults reproduce the regime
// assignments of the reference parameter sets and both size migrations.
struct RegimeThresholds {
  double delta_small = 0.35;  // |h2 - h1| <= delta_small for the quasi-critical branch
  double c_qc = 2.0;          // L |1 - h2| <= c_qc (quasi-critical condition, tested on h2)
  double c_exp = 1.5;         // -ln Lbar >= c_exp counts as Lbar << 1
};

// Degenerate iff h1 == h2; else BatmanHood iff |dh| <= delta_small and
// L|1 - h2| <= c_qc; else Exponential iff -ln Lbar >= c_exp; else Gaussian.
Regime classify_regime(const QuenchSpec& spec, const RegimeThresholds& th = {});

// Total-variation distance on the histogram bins: 1/2 sum_i |p_i - q_i| plus
// half the model mass outside the binned range; q_i from per-bin quadrature.
double distribution_distance(const EmpiricalDistribution& emp,
                             const std::function<double(double)>& density);

}  // namespace quench
