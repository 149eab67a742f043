#pragma once

#include <functional>

#include "quench/types.hpp"

namespace quench {

// Full enumeration of the dephased ensemble over occupation patterns
// alpha in {0,1}^{L/2}: brute-force ground truth for small chains.
// Energies are stored relative to the empty pattern (only differences
// enter any observable).
struct StateEnsemble {
  std::vector<double> weights;   // 2^{L/2} probabilities, sum 1
  std::vector<double> energies;  // sum of occupied Lambda_k
  int L = 0;
};

// Weights via the factorized form a_k = (1 + cos dtheta_k)/2, b_k = 1 - a_k
// multiplied across set bits. Guarded to L <= 30 (2^15 states).
StateEnsemble enumerate_states(const ModeData& md);

// |sum_n p_n e^{-i t E_n}|^2: the spectral-sum echo.
double brute_echo(const StateEnsemble& ens, double t);

// sum_n p_n^{2m}.
double power_sum(const StateEnsemble& ens, int m);

struct TimeAverage {
  double mean;
  double std_error;  // from 16 batch means
};
// Low-discrepancy time average of an arbitrary evaluator over [0, T].
TimeAverage time_average_estimate(const std::function<double(double)>& f,
                                  double T, std::int64_t N, std::uint64_t seed);

}  // namespace quench
