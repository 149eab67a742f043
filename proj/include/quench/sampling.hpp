#pragma once

#include <cstdint>
#include <vector>

namespace quench {

// splitmix64 step; used to derive sequence offsets from seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Golden-ratio Kronecker sequence scaled to [0, T): t_i = T frac(u0 + i/phi).
// Low discrepancy, deterministic, the seed only moves the offset u0.
std::vector<double> low_discrepancy_times(double T, std::int64_t N,
                                          std::uint64_t seed);

}  // namespace quench
