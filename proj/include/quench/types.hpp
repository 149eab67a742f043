#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quench {

// Couplings and chain length of a sudden quench h1 -> h2 of the
// transverse-field Ising chain (periodic boundary conditions, J = 1).
// The state is the ground state at h1, the evolution runs at h2.
// All energies and times below are in units of J and 1/J.
struct QuenchSpec {
  double h1 = 0.0;
  double h2 = 0.0;
  int L = 2;  // even, >= 2

  void validate() const;
};

// Per-mode single-particle data on the grid k_n = pi(2n+1)/L, n = 0..L/2-1.
// alpha[k] = sin^2(theta1 - theta2) is the quench overlap amplitude; it is
// clamped to [0,1] to absorb 1-ulp excursions of the trigonometry.
struct ModeData {
  std::vector<double> ks;       // momenta in (0, pi), strictly increasing
  std::vector<double> theta1;   // Bogoliubov angles at h1
  std::vector<double> theta2;   // Bogoliubov angles at h2
  std::vector<double> dtheta;   // theta2 - theta1
  std::vector<double> lambda2;  // single-particle energies at h2, > 0 on the grid
  std::vector<double> alpha;    // sin^2(theta1 - theta2), in [0,1]
  int L = 0;
  double h1 = 0.0;
  double h2 = 0.0;

  std::size_t n_modes() const { return ks.size(); }
};

// Raised when an adaptive quadrature cannot reach the requested tolerance.
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double achieved_)
      : std::runtime_error(what), achieved(achieved_) {}
  double achieved;
};

// Raised when a quantity is undefined because h1 == h2 (L(t) = 1 for all t).
struct NoDynamicsError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace quench
