#include "quench/ising.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quench {

void QuenchSpec::validate() const {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("QuenchSpec: L must be a positive even integer, got " +
                                std::to_string(L));
  if (!std::isfinite(h1) || !std::isfinite(h2))
    throw std::invalid_argument("QuenchSpec: couplings must be finite");
}

std::vector<double> mode_grid(int L) {
  if (L < 2 || L % 2 != 0)
    throw std::invalid_argument("mode_grid: L must be a positive even integer, got " +
                                std::to_string(L));
  std::vector<double> ks(static_cast<std::size_t>(L / 2));
  for (int n = 0; n < L / 2; ++n)
    ks[static_cast<std::size_t>(n)] = std::numbers::pi * (2.0 * n + 1.0) / L;
  return ks;
}

double bogoliubov_angle(double h, double k) {
  return std::atan2(-std::sin(k), h + std::cos(k));
}

double dispersion(double h, double k) {
  const double a = h + std::cos(k);
  const double b = std::sin(k);
  return 2.0 * std::hypot(a, b);
}

BandEdges band_edges(double h) {
  const double lo = 2.0 * std::abs(1.0 - std::abs(h));
  const double hi = 2.0 * (1.0 + std::abs(h));
  return {std::min(lo, hi), std::max(lo, hi)};
}

ModeData mode_data(const QuenchSpec& spec) {
  spec.validate();
  ModeData md;
  md.L = spec.L;
  md.h1 = spec.h1;
  md.h2 = spec.h2;
  md.ks = mode_grid(spec.L);
  const std::size_t n = md.ks.size();
  md.theta1.resize(n);
  md.theta2.resize(n);
  md.dtheta.resize(n);
  md.lambda2.resize(n);
  md.alpha.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = md.ks[i];
    md.theta1[i] = bogoliubov_angle(spec.h1, k);
    md.theta2[i] = bogoliubov_angle(spec.h2, k);
    md.dtheta[i] = md.theta2[i] - md.theta1[i];
    md.lambda2[i] = dispersion(spec.h2, k);
    const double s = std::sin(md.theta1[i] - md.theta2[i]);
    md.alpha[i] = std::clamp(s * s, 0.0, 1.0);
  }
  return md;
}

}  // namespace quench
