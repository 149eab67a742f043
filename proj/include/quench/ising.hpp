#pragma once

#include "quench/types.hpp"

namespace quench {

// Momentum grid k_n = pi(2n+1)/L, n = 0..L/2-1. Throws on odd or
// non-positive L. Each momentum is computed directly from n (no
// accumulation drift).
std::vector<double> mode_grid(int L);

// Bogoliubov angle from tan(theta) = -sin(k)/(h + cos(k)), evaluated as the
// two-argument arctangent of (-sin k, h + cos k). For k in (0, pi) this
// lands in (-pi, 0) and is continuous across h + cos k = 0. Only angle
// differences enter downstream, so the branch convention cancels there.
double bogoliubov_angle(double h, double k);

// Single-particle dispersion Lambda = 2 sqrt((h + cos k)^2 + sin^2 k).
double dispersion(double h, double k);

struct BandEdges {
  double E_m;  // 2 min{|1-h|, |1+h|}
  double E_M;  // 2 max{|1-h|, |1+h|}
};
BandEdges band_edges(double h);

// Assembles the per-mode arrays for a quench.
ModeData mode_data(const QuenchSpec& spec);

}  // namespace quench
