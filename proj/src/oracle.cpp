#include "quench/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "quench/sampling.hpp"

namespace quench {

StateEnsemble enumerate_states(const ModeData& md) {
  if (md.L > 30)
    throw std::invalid_argument("enumerate_states: L > 30 exceeds the 2^{L/2} resource guard");
  const std::size_t n = md.n_modes();
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = 0.5 * (1.0 + std::cos(md.dtheta[i]));
    b[i] = 1.0 - a[i];
  }
  StateEnsemble ens;
  ens.L = md.L;
  const std::size_t count = std::size_t{1} << n;
  ens.weights.resize(count);
  ens.energies.resize(count);
  ens.weights[0] = 1.0;
  ens.energies[0] = 0.0;
  // each state extends a previous one by one bit: weights/energies fill in
  // one pass over the doubling prefixes
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t half = std::size_t{1} << bit;
    for (std::size_t s = 0; s < half; ++s) {
      ens.weights[half + s] = ens.weights[s] * b[bit];
      ens.energies[half + s] = ens.energies[s] + md.lambda2[bit];
    }
    for (std::size_t s = 0; s < half; ++s) ens.weights[s] *= a[bit];
  }
  return ens;
}

double brute_echo(const StateEnsemble& ens, double t) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < ens.weights.size(); ++i) {
    re += ens.weights[i] * std::cos(ens.energies[i] * t);
    im -= ens.weights[i] * std::sin(ens.energies[i] * t);
  }
  return re * re + im * im;
}

double power_sum(const StateEnsemble& ens, int m) {
  if (m < 1) throw std::invalid_argument("power_sum: m must be >= 1");
  double sum = 0.0;
  for (double p : ens.weights) sum += std::pow(p, 2 * m);
  return sum;
}

TimeAverage time_average_estimate(const std::function<double(double)>& f,
                                  double T, std::int64_t N, std::uint64_t seed) {
  if (N < 2) throw std::invalid_argument("time_average_estimate: N must be >= 2");
  const std::vector<double> ts = low_discrepancy_times(T, N, seed);
  constexpr int kBatches = 16;
  double batch_mean[kBatches] = {};
  std::int64_t batch_count[kBatches] = {};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    // contiguous index blocks: each is itself a low-discrepancy subsequence
    const int b = std::min<int>(kBatches - 1,
                                static_cast<int>(i * kBatches / ts.size()));
    batch_mean[b] += f(ts[i]);
    ++batch_count[b];
  }
  double mean = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    batch_mean[b] /= static_cast<double>(batch_count[b]);
    mean += batch_mean[b];
  }
  mean /= kBatches;
  double var = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    const double d = batch_mean[b] - mean;
    var += d * d;
  }
  var /= (kBatches - 1);
  return {mean, std::sqrt(var / kBatches)};
}

}  // namespace quench
