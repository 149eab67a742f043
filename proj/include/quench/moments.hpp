#pragma once

#include <optional>

#include "quench/types.hpp"

namespace quench {

// ln Lbar = sum_k ln(1 - alpha_k / 2). Always <= 0, equal to 0 iff h1 == h2.
double mean_echo_log(const ModeData& md);

// Zero-frequency coefficient of the per-mode factor of L(t)^n,
//   g0(n, alpha) = sum_{m=1..n} (-alpha/4)^m C(n,m) C(2m,m).
// 1 + g0 is the time average of (1 - alpha sin^2 x)^n and lies in (0, 1].
double g0_coefficient(int n, double alpha);

// ln mu_n = sum_k ln(1 + g0(n, alpha_k)); n = 1 reduces to mean_echo_log.
double exact_moment_log(const ModeData& md, int n);

// Exact time-averaged variance
//   prod(1 - a + 3/8 a^2) - prod(1 - a + 1/4 a^2),
// evaluated as exp(2 ln Lbar) * expm1(delta) on the per-mode log ratios so
// that values ten orders below Lbar^2 keep full relative accuracy.
double exact_variance(const ModeData& md);

// Derangement numbers N(k) = sum_{j=2..k} (-1)^{k-j} C(k,j) (j! - 1), the
// count of contraction diagrams in the k-th non-resonant moment. k in [2,20].
unsigned long long derangement_count(int k);

// Power sum S_{2m} = sum_n p_n^{2m} of the dephased weights, in closed form
// prod_k (a_k^{2m} + b_k^{2m}) with a_k = (1 + cos(dtheta_k))/2, b_k = 1 - a_k.
double weight_power_sum(const ModeData& md, int m);

struct NonresonantMoments {
  double mu2;          // 2 Lbar^2 - S4
  double mu3;          // Lbar^3 + 3 Lbar T2 + 2 T3
  double variance_nr;  // Lbar^2 - S4 >= 0
};
// Moments under the strong non-resonance hypothesis (the orders the model
// actually violates for k >= 2; used as the comparison quantity only).
NonresonantMoments nonresonant_moments(const ModeData& md);

// General-order non-resonant moment assembled from derangement cycle types:
// each fixed-point-free permutation contributes the product of its cyclic
// adjacent-distinct sums T_c, and T_c follows from the power sums by
// inclusion-exclusion over the c edges of the cycle. Supports n in [1, 12].
double nonresonant_moment(const ModeData& md, int n);

struct MomentBoundReport {
  bool holds;                   // mu_n < n! Lbar^n for all checked n
  std::vector<double> margins;  // log(n! Lbar^n) - log(mu_n) per n = 2..n_max
};
// Checks the Poissonian moment bound on the non-resonant moments (the
// quantity the bound is derived for; exact moments can exceed it in
// strongly resonant regimes).
MomentBoundReport moment_bound_check(const ModeData& md, int n_max);

struct MomentReport {
  int n = 1;
  double exact_log = 0.0;
  std::optional<double> nonresonant_log;  // orders <= 3 only
  double mean_log = 0.0;
  double variance = 0.0;
  double variance_nr = 0.0;
};
MomentReport moment_report(const ModeData& md, int n);

}  // namespace quench
