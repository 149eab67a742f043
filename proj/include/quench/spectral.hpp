#pragma once

#include <iosfwd>

#include "quench/types.hpp"

namespace quench {

struct SpectralAtom {
  double omega;   // >= 0 (folded)
  double weight;  // >= 0
};

// Finite atomic Fourier measure of the echo, folded to omega >= 0: the atom
// at omega = 0 carries its own weight, every atom at omega > 0 carries the
// summed weight of +/-omega, so that L(t) = sum_i w_i cos(omega_i t) up to
// discarded_mass. Built by per-mode convolution of the atom triples
// {(0, 1 - a/2), (+Lambda, a/4), (-Lambda, a/4)}; after each mode atoms
// closer than merge_tol are merged (weight-summed, weight-averaged
// frequency) and atoms below prune_tol are dropped into discarded_mass.
struct SpectralMeasure {
  std::vector<SpectralAtom> atoms;  // sorted by omega
  double merge_tol = 0.0;
  double prune_tol = 0.0;
  double discarded_mass = 0.0;
};

inline constexpr double kDefaultPruneTol = 1e-12;

// 1e-9 * E_M(h2); well below any one-particle gap at the sizes of interest.
double default_merge_tol(const ModeData& md);

// Throws std::invalid_argument if merge_tol >= the one-particle gap (the
// zero-frequency atom could be contaminated) and std::domain_error
// ("measure too coarse") if pruning discards more than 1% of the weight.
SpectralMeasure spectral_measure(const ModeData& md, double merge_tol,
                                 double prune_tol);
SpectralMeasure spectral_measure(const ModeData& md);

// sum_i w_i cos(omega_i t); equals L(t) within discarded_mass.
double reconstruct(const SpectralMeasure& m, double t);

// One-particle amplitude envelope c(omega) = alpha_k/2 at omega = Lambda_k,
// the dominant spectral weights inside [E_m, E_M].
std::vector<SpectralAtom> one_particle_amplitude(const ModeData& md);

// First-order spectral approximation L(t) ~ Lbar + sum_k (alpha_k/2) cos(Lambda_k t).
// With refined = true uses the footnote variant
// Lbar (1 + sum_k (1 - alpha_k/2)^{-1} (alpha_k/2) cos(Lambda_k t));
// the two coincide for small delta-h.
double first_order_echo(const ModeData& md, double t, bool refined = false);

struct GapScales {
  double delta10;  // min_k Lambda_k, one- to zero-particle gap
  double delta11;  // min_{k != q} |Lambda_k - Lambda_q|
};
GapScales gap_scales(const ModeData& md);  // needs L >= 4 for delta11

// T_rev = 2 pi / omega_peak with omega_peak the largest-weight nonzero atom;
// ties broken toward the smaller frequency. Throws NoDynamicsError when only
// the zero-frequency atom exists.
double revival_time(const SpectralMeasure& m);

// CSV export (omega, weight) with a header row.
void write_csv(const SpectralMeasure& m, std::ostream& os);

}  // namespace quench
