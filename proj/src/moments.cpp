#include "quench/moments.hpp"

#include <array>
#include <cmath>
#include <functional>

namespace quench {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Cyclic adjacent-distinct sum T_c = sum_{i_1 != i_2, ..., i_c != i_1} prod p^2,
// by inclusion-exclusion over the edges of the c-cycle: contracting a subset
// of edges merges consecutive indices into blocks, each block contributing a
// power sum S_{2 * size}; the fully contracted cycle leaves a single S_{2c}.
double cycle_sum(int c, const std::array<double, 13>& S) {
  if (c == 1) return S[1];
  double tot = 0.0;
  const unsigned full = (1u << c) - 1u;
  for (unsigned mask = 0; mask <= full; ++mask) {
    const int f = __builtin_popcount(mask);
    const double sign = (f % 2 == 0) ? 1.0 : -1.0;
    if (mask == full) {
      tot += sign * S[c];
      continue;
    }
    // rotate so the last edge is uncontracted, then read off run lengths
    unsigned bits = mask;
    if (bits >> (c - 1) & 1u) {
      int j = 0;
      while (bits >> j & 1u) ++j;  // an uncontracted edge exists
      bits = ((bits >> (j + 1)) | (bits << (c - j - 1))) & full;
    }
    double term = 1.0;
    int run = 1;
    for (int e = 0; e < c - 1; ++e) {
      if (bits >> e & 1u) {
        ++run;
      } else {
        term *= S[run];
        run = 1;
      }
    }
    term *= S[run];
    tot += sign * term;
  }
  return tot;
}

// Partitions of k into parts >= 2, with the derangement count of each cycle
// type: k! / prod(c_j^{m_j} m_j!).
void for_each_cycle_type(int k, const std::function<void(const std::vector<int>&, double)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      double denom = 1.0;
      int j = 0;
      while (j < static_cast<int>(parts.size())) {
        int m = 1;
        while (j + m < static_cast<int>(parts.size()) && parts[j + m] == parts[j]) ++m;
        for (int i = 0; i < m; ++i) denom *= parts[j];
        for (int i = 2; i <= m; ++i) denom *= i;
        j += m;
      }
      double kfact = 1.0;
      for (int i = 2; i <= k; ++i) kfact *= i;
      visit(parts, kfact / denom);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 2; --p) {
      if (rem - p == 1) continue;  // cannot leave a singleton
      parts.push_back(p);
      rec(rem - p, p);
      parts.pop_back();
    }
  };
  rec(k, k);
}

}  // namespace

double mean_echo_log(const ModeData& md) {
  double sum = 0.0, c = 0.0;  // Kahan, ascending k
  for (double a : md.alpha) {
    const double term = std::log1p(-0.5 * a);
    const double y = term - c;
    const double u = sum + y;
    c = (u - sum) - y;
    sum = u;
  }
  return sum;
}

double g0_coefficient(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("g0_coefficient: order must be >= 1");
  double sum = 0.0;
  double pow_term = 1.0;
  for (int m = 1; m <= n; ++m) {
    pow_term *= -alpha / 4.0;
    sum += pow_term * binomial(n, m) * binomial(2 * m, m);
  }
  return sum;
}

double exact_moment_log(const ModeData& md, int n) {
  if (n < 1) throw std::invalid_argument("exact_moment_log: order must be >= 1");
  double sum = 0.0, c = 0.0;
  for (std::size_t i = 0; i < md.n_modes(); ++i) {
    const double term = std::log(1.0 + g0_coefficient(n, md.alpha[i]));
    const double y = term - c;
    const double u = sum + y;
    c = (u - sum) - y;
    sum = u;
  }
  return sum;
}

double exact_variance(const ModeData& md) {
  // mu2 = prod(1 - a + 3/8 a^2), mu1^2 = prod(1 - a/2)^2; the per-mode log
  // ratio is accumulated separately so the difference survives when it is
  // many orders below mu1^2.
  double log_mu1_sq = 0.0;
  double delta = 0.0;
  for (double a : md.alpha) {
    const double l1 = std::log1p(-0.5 * a);
    log_mu1_sq += 2.0 * l1;
    delta += std::log1p(-a + 0.375 * a * a) - 2.0 * l1;
  }
  return std::exp(log_mu1_sq) * std::expm1(delta);
}

unsigned long long derangement_count(int k) {
  if (k < 2) throw std::invalid_argument("derangement_count: k must be >= 2");
  if (k > 20) throw std::invalid_argument("derangement_count: k > 20 overflows");
  // N(k) = sum_{j=2..k} (-1)^{k-j} C(k,j) (j! - 1)
  long long total = 0;
  for (int j = 2; j <= k; ++j) {
    unsigned long long ckj = 1;
    for (int i = 1; i <= j; ++i) ckj = ckj * (k - j + i) / i;
    unsigned long long jfact = 1;
    for (int i = 2; i <= j; ++i) jfact *= i;
    const long long term = static_cast<long long>(ckj) * static_cast<long long>(jfact - 1);
    total += ((k - j) % 2 == 0) ? term : -term;
  }
  return static_cast<unsigned long long>(total);
}

double weight_power_sum(const ModeData& md, int m) {
  if (m < 1) throw std::invalid_argument("weight_power_sum: m must be >= 1");
  double log_sum = 0.0;
  for (double dth : md.dtheta) {
    const double a = 0.5 * (1.0 + std::cos(dth));  // half-angle form, stable near dth = pi
    const double b = 1.0 - a;
    log_sum += std::log(std::pow(a, 2 * m) + std::pow(b, 2 * m));
  }
  return std::exp(log_sum);
}

NonresonantMoments nonresonant_moments(const ModeData& md) {
  const double mlog = mean_echo_log(md);
  const double lbar = std::exp(mlog);
  // log S4 - log Lbar^2 per mode: ratio (a^4+b^4)/(a^2+b^2)^2 in [1/2, 1]
  double log_ratio4 = 0.0, log_ratio6 = 0.0;
  for (double dth : md.dtheta) {
    const double a = 0.5 * (1.0 + std::cos(dth));
    const double b = 1.0 - a;
    const double s2 = a * a + b * b;
    const double s4 = a * a * a * a + b * b * b * b;
    const double s6 = std::pow(a, 6) + std::pow(b, 6);
    log_ratio4 += std::log(s4 / (s2 * s2));
    log_ratio6 += std::log(s6 / (s2 * s2 * s2));
  }
  const double lbar2 = std::exp(2.0 * mlog);
  const double lbar3 = std::exp(3.0 * mlog);
  const double t2 = lbar2 * -std::expm1(log_ratio4);  // Lbar^2 - S4 >= 0
  const double s4 = lbar2 * std::exp(log_ratio4);
  const double s6 = lbar3 * std::exp(log_ratio6);
  const double t3 = lbar3 - 3.0 * lbar * s4 + 2.0 * s6;
  NonresonantMoments nm;
  nm.variance_nr = t2;
  nm.mu2 = 2.0 * lbar2 - s4;
  nm.mu3 = lbar3 + 3.0 * lbar * t2 + 2.0 * t3;
  return nm;
}

double nonresonant_moment(const ModeData& md, int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("nonresonant_moment: order must be in [1, 12]");
  std::array<double, 13> S{};
  for (int m = 1; m <= n; ++m) S[static_cast<std::size_t>(m)] = weight_power_sum(md, m);
  const double lbar = S[1];
  double mu = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k == 1) continue;  // avg X(t) = 0
    double xk = 1.0;
    if (k >= 2) {
      xk = 0.0;
      for_each_cycle_type(k, [&](const std::vector<int>& parts, double count) {
        double term = count;
        for (int c : parts) term *= cycle_sum(c, S);
        xk += term;
      });
    }
    mu += binomial(n, k) * std::pow(lbar, n - k) * xk;
  }
  return mu;
}

MomentBoundReport moment_bound_check(const ModeData& md, int n_max) {
  if (n_max < 2) throw std::invalid_argument("moment_bound_check: n_max must be >= 2");
  const double mlog = mean_echo_log(md);
  MomentBoundReport rep;
  rep.holds = true;
  double log_nfact = 0.0;  // log n!, accumulated
  for (int n = 2; n <= n_max; ++n) {
    log_nfact += std::log(static_cast<double>(n));
    const double lhs = std::log(nonresonant_moment(md, n));
    const double rhs = log_nfact + n * mlog;
    rep.margins.push_back(rhs - lhs);
    if (!(lhs < rhs)) rep.holds = false;
  }
  return rep;
}

MomentReport moment_report(const ModeData& md, int n) {
  MomentReport r;
  r.n = n;
  r.mean_log = mean_echo_log(md);
  r.exact_log = exact_moment_log(md, n);
  const NonresonantMoments nm = nonresonant_moments(md);
  if (n == 1) r.nonresonant_log = r.mean_log;
  if (n == 2) r.nonresonant_log = std::log(nm.mu2);
  if (n == 3) r.nonresonant_log = std::log(nm.mu3);
  r.variance = exact_variance(md);
  r.variance_nr = nm.variance_nr;
  return r;
}

}  // namespace quench
