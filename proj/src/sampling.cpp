#include "quench/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace quench {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<double> low_discrepancy_times(double T, std::int64_t N,
                                          std::uint64_t seed) {
  if (!(T > 0.0)) throw std::invalid_argument("low_discrepancy_times: T must be > 0");
  if (N < 1) throw std::invalid_argument("low_discrepancy_times: N must be >= 1");
  constexpr double inv_phi = 0.6180339887498949;  // frac part of 1/phi
  std::uint64_t s = seed;
  const double u0 = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
  std::vector<double> ts(static_cast<std::size_t>(N));
  double u = u0;
  for (std::int64_t i = 0; i < N; ++i) {
    u += inv_phi;
    if (u >= 1.0) u -= 1.0;
    ts[static_cast<std::size_t>(i)] = T * u;
  }
  return ts;
}

}  // namespace quench
