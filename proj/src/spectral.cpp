#include "quench/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "quench/io.hpp"
#include "quench/moments.hpp"

namespace quench {

double default_merge_tol(const ModeData& md) {
  double lam_max = 0.0;
  for (double l : md.lambda2) lam_max = std::max(lam_max, l);
  return 1e-9 * lam_max;
}

SpectralMeasure spectral_measure(const ModeData& md, double merge_tol,
                                 double prune_tol) {
  if (merge_tol < 0.0) throw std::invalid_argument("spectral_measure: merge_tol < 0");
  if (prune_tol < 0.0 || prune_tol >= 1.0)
    throw std::invalid_argument("spectral_measure: prune_tol must be in [0, 1)");
  double gap10 = std::numeric_limits<double>::infinity();
  for (double l : md.lambda2) gap10 = std::min(gap10, l);
  if (md.n_modes() > 0 && merge_tol >= gap10)
    throw std::invalid_argument(
        "spectral_measure: merge_tol >= one-particle gap would contaminate omega = 0");

  SpectralMeasure m;
  m.merge_tol = merge_tol;
  m.prune_tol = prune_tol;
  m.atoms = {{0.0, 1.0}};

  std::vector<SpectralAtom> next;
  for (std::size_t i = 0; i < md.n_modes(); ++i) {
    const double a = md.alpha[i];
    const double lam = md.lambda2[i];
    next.clear();
    next.reserve(m.atoms.size() * 3);
    // folded convolution with {(0, 1-a/2), (+lam, a/4), (-lam, a/4)}:
    // an atom at omega >= 0 spawns (omega, w(1-a/2)), (omega+lam, w a/4),
    // (|omega-lam|, w a/4); total folded weight is conserved.
    for (const SpectralAtom& at : m.atoms) {
      next.push_back({at.omega, at.weight * (1.0 - 0.5 * a)});
      if (a > 0.0) {
        next.push_back({at.omega + lam, at.weight * 0.25 * a});
        next.push_back({std::abs(at.omega - lam), at.weight * 0.25 * a});
      }
    }
    std::sort(next.begin(), next.end(),
              [](const SpectralAtom& x, const SpectralAtom& y) { return x.omega < y.omega; });
    m.atoms.clear();
    for (const SpectralAtom& at : next) {
      if (!m.atoms.empty() && at.omega - m.atoms.back().omega <= merge_tol) {
        SpectralAtom& last = m.atoms.back();
        const double w = last.weight + at.weight;
        last.omega = (last.omega * last.weight + at.omega * at.weight) / w;
        last.weight = w;
      } else {
        m.atoms.push_back(at);
      }
    }
    // prune
    std::size_t kept = 0;
    for (std::size_t j = 0; j < m.atoms.size(); ++j) {
      if (m.atoms[j].weight < prune_tol) {
        m.discarded_mass += m.atoms[j].weight;
      } else {
        m.atoms[kept++] = m.atoms[j];
      }
    }
    m.atoms.resize(kept);
    if (m.discarded_mass > 0.01)
      throw std::domain_error("spectral_measure: measure too coarse (discarded mass " +
                              std::to_string(m.discarded_mass) + " > 0.01)");
  }
  return m;
}

SpectralMeasure spectral_measure(const ModeData& md) {
  return spectral_measure(md, default_merge_tol(md), kDefaultPruneTol);
}

double reconstruct(const SpectralMeasure& m, double t) {
  double sum = 0.0;
  for (const SpectralAtom& at : m.atoms) sum += at.weight * std::cos(at.omega * t);
  return sum;
}

std::vector<SpectralAtom> one_particle_amplitude(const ModeData& md) {
  std::vector<SpectralAtom> out;
  out.reserve(md.n_modes());
  for (std::size_t i = 0; i < md.n_modes(); ++i)
    out.push_back({md.lambda2[i], 0.5 * md.alpha[i]});
  std::sort(out.begin(), out.end(),
            [](const SpectralAtom& x, const SpectralAtom& y) { return x.omega < y.omega; });
  return out;
}

double first_order_echo(const ModeData& md, double t, bool refined) {
  const double lbar = std::exp(mean_echo_log(md));
  double osc = 0.0;
  for (std::size_t i = 0; i < md.n_modes(); ++i) {
    const double amp = 0.5 * md.alpha[i];
    const double term = amp * std::cos(md.lambda2[i] * t);
    osc += refined ? term / (1.0 - 0.5 * md.alpha[i]) : term;
  }
  return refined ? lbar * (1.0 + osc) : lbar + osc;
}

GapScales gap_scales(const ModeData& md) {
  if (md.L < 4) throw std::invalid_argument("gap_scales: needs L >= 4");
  GapScales g{std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity()};
  std::vector<double> lam = md.lambda2;
  std::sort(lam.begin(), lam.end());
  g.delta10 = lam.front();
  for (std::size_t i = 1; i < lam.size(); ++i)
    g.delta11 = std::min(g.delta11, lam[i] - lam[i - 1]);
  return g;
}

double revival_time(const SpectralMeasure& m) {
  const SpectralAtom* best = nullptr;
  for (const SpectralAtom& at : m.atoms) {
    if (at.omega <= 0.0) continue;
    if (!best || at.weight > best->weight ||
        (at.weight == best->weight && at.omega < best->omega))
      best = &at;
  }
  if (!best) throw NoDynamicsError("revival_time: no dynamics (only the omega = 0 atom)");
  return 2.0 * std::numbers::pi / best->omega;
}

void write_csv(const SpectralMeasure& m, std::ostream& os) {
  os << "omega,weight\n";
  for (const SpectralAtom& at : m.atoms)
    os << format_double(at.omega) << ',' << format_double(at.weight) << '\n';
}

}  // namespace quench
