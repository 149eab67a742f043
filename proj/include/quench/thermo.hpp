#pragma once

#include "quench/types.hpp"

namespace quench {

// Thermodynamic-limit quantities for a quench h1 -> h2. A_m and A_M are the
// saddle-point amplitudes of the |t|^{-3/2} band-edge oscillations; the
// closed forms hold for h2 > 0 and diverge for a critical initial state
// (1 - h1)^2 -> 0, as written.
struct ThermoAsymptotics {
  double E_m = 0.0;
  double E_M = 0.0;
  double s_inf = 0.0;  // limiting rate, per site
  double g = 0.0;      // time-average rate, per site
  double A_m = 0.0;
  double A_M = 0.0;
};

// s(t) = -(1/2pi) int_0^pi ln(1 - sin^2(dtheta_k) sin^2(Lambda_k t/2)) dk.
// The k-integrand is smooth; for large t it oscillates ~ E_M t / (4 pi)
// times, so the range is pre-split into quarter-period panels and each panel
// integrated adaptively with a proportional share of abs_tol. Throws
// QuadratureError with the achieved tolerance on non-convergence.
double s_of_t(double h1, double h2, double t, double abs_tol = 1e-10);

// s(inf) = -(1/pi) int_0^pi ln[(1 + |cos dtheta_k|)/2] dk.
double s_infinity(double h1, double h2);

// g = -(1/2pi) int_0^pi ln(1 - sin^2(dtheta_k)/2) dk.
double g_rate(double h1, double h2);

// Requires h2 > 0 (amplitude formulas as given; h2 < 0 maps by h -> -h,
// k -> pi - k).
ThermoAsymptotics thermo_asymptotics(double h1, double h2);

// s(inf) - A_m |t|^{-3/2} cos(t E_m + 3pi/4) - A_M |t|^{-3/2} cos(t E_M + 3pi/4).
// Requires t != 0 and h2 > 0.
double asymptotic_s(const ThermoAsymptotics& a, double t);
double asymptotic_s(double h1, double h2, double t);

// rho(omega) = 2 omega / sqrt((omega^2 - E_m^2)(E_M^2 - omega^2)) on the open
// band (E_m, E_M); van Hove divergence at both edges.
double density_of_states(double h2, double omega);

struct AlphaOmega {
  double value;          // sin^2(dtheta) at k(omega), the authoritative value
  double rational_form;  // the closed rational expression, diagnostic only
  double rel_deviation;  // |rational - value| / value
};
// k(omega) by monotone bisection of Lambda(h2, .) on (0, pi) to 1e-13.
AlphaOmega alpha_of_omega(double h1, double h2, double omega);

struct SeriesIdentity {
  double lhs;  // -sum_{k>=1} x^k/k 4^{-k} C(2k,k), summed to convergence
  double rhs;  // 2 ln((1 + sqrt(1-x))/2)
};
SeriesIdentity series_identity_check(double x);  // |x| < 1

struct LimitOrderComparison {
  double time_average_first;  // exp(-L g):      T -> inf, then L -> inf
  double thermo_first;        // exp(-L s_inf):  L -> inf, then T -> inf
};
LimitOrderComparison limit_order_compare(double h1, double h2, int L);

}  // namespace quench
