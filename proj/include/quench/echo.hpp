#pragma once

#include "quench/types.hpp"

namespace quench {

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
};

// ln L(t) = sum_k ln(1 - alpha_k sin^2(Lambda_k t / 2)). This is the
// canonical internal representation: for L in the hundreds the echo itself
// underflows, the log never does. Can be -inf when some alpha_k = 1 and the
// sine hits 1 exactly.
double loschmidt_log(const ModeData& md, double t);

// exp(loschmidt_log). If the exponential underflows to zero the smallest
// positive normal double is returned and *underflow is set.
double loschmidt(const ModeData& md, double t, bool* underflow = nullptr);

// Transverse magnetization per site,
//   m(t) = (1/L) sum_k [cos(theta2) cos(dtheta) + sin(theta2) sin(dtheta) cos(t Lambda2)],
// with k over the full Brillouin zone k = pi(2n+1)/L, n = 0..L-1.
double magnetization(const QuenchSpec& spec, double t);

// Connected energy variance sigma^2 = <H^2>_c = sum_k alpha_k Lambda_k^2 / 4,
// the t^2 coefficient of -ln L(t).
double energy_variance(const ModeData& md);

// CLT/short-time approximation L(t) = exp(-t^2 sigma^2).
double short_time_gaussian(const ModeData& md, double t);

// Relaxation time T_R = sqrt(-ln(Lbar) / sigma^2), the time where the
// Gaussian decay meets the long-time mean. Throws NoDynamicsError when
// h1 == h2 (no relaxation or even dynamics).
double relaxation_time(const ModeData& md);

// Rescaled-time echo curves L_L(tau / sigma(L)) for data-collapse plots,
// one TimeSeries per entry of `sizes`. times hold the rescaled tau grid.
std::vector<TimeSeries> collapse_series(double h1, double h2,
                                        const std::vector<int>& sizes,
                                        const std::vector<double>& tau_grid);

}  // namespace quench
