#include "quench/echo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "quench/ising.hpp"
#include "quench/moments.hpp"

namespace quench {

double loschmidt_log(const ModeData& md, double t) {
  double sum = 0.0, c = 0.0;  // Kahan, ascending k
  for (std::size_t i = 0; i < md.n_modes(); ++i) {
    const double s = std::sin(0.5 * md.lambda2[i] * t);
    const double term = std::log1p(-md.alpha[i] * s * s);
    const double y = term - c;
    const double u = sum + y;
    c = (u - sum) - y;
    sum = u;
  }
  return sum;
}

double loschmidt(const ModeData& md, double t, bool* underflow) {
  const double lg = loschmidt_log(md, t);
  double v = std::exp(lg);
  bool uf = false;
  if (v <= 0.0) {
    v = std::numeric_limits<double>::min();
    uf = true;
  }
  if (underflow) *underflow = uf;
  return v;
}

double magnetization(const QuenchSpec& spec, double t) {
  spec.validate();
  double sum = 0.0;
  for (int n = 0; n < spec.L; ++n) {
    const double k = std::numbers::pi * (2.0 * n + 1.0) / spec.L;
    const double th1 = bogoliubov_angle(spec.h1, k);
    const double th2 = bogoliubov_angle(spec.h2, k);
    const double dth = th2 - th1;
    const double lam = dispersion(spec.h2, k);
    sum += std::cos(th2) * std::cos(dth) +
           std::sin(th2) * std::sin(dth) * std::cos(t * lam);
  }
  return sum / spec.L;
}

double energy_variance(const ModeData& md) {
  double sum = 0.0;
  for (std::size_t i = 0; i < md.n_modes(); ++i)
    sum += md.alpha[i] * md.lambda2[i] * md.lambda2[i] * 0.25;
  return sum;
}

double short_time_gaussian(const ModeData& md, double t) {
  return std::exp(-t * t * energy_variance(md));
}

double relaxation_time(const ModeData& md) {
  const double s2 = energy_variance(md);
  const double ml = mean_echo_log(md);
  if (s2 <= 0.0 || ml >= 0.0)
    throw NoDynamicsError("relaxation_time: no dynamics (h1 == h2)");
  return std::sqrt(-ml / s2);
}

std::vector<TimeSeries> collapse_series(double h1, double h2,
                                        const std::vector<int>& sizes,
                                        const std::vector<double>& tau_grid) {
  std::vector<TimeSeries> out;
  out.reserve(sizes.size());
  for (int L : sizes) {
    const ModeData md = mode_data({h1, h2, L});
    const double s2 = energy_variance(md);
    const double sigma = std::sqrt(s2);
    TimeSeries ts;
    ts.times = tau_grid;
    ts.values.reserve(tau_grid.size());
    for (double tau : tau_grid)
      ts.values.push_back(sigma > 0.0 ? loschmidt(md, tau / sigma) : 1.0);
    out.push_back(std::move(ts));
  }
  return out;
}

}  // namespace quench
