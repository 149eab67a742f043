#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "quench/distribution.hpp"
#include "quench/ising.hpp"
#include "quench/moments.hpp"
#include "quench/quadrature.hpp"

using namespace quench;

TEST_SUITE("distribution") {

TEST_CASE("sampling: degenerate quench gives constant samples") {
  const auto v = sample_echo(mode_data({0.6, 0.6, 16}), 1e4, 1000, 1);
  for (double x : v) CHECK(x == 1.0);
}

TEST_CASE("sampling converges to the exact moments") {
  const ModeData md = mode_data({0.99, 1.01, 40});
  const auto v = sample_echo(md, 1e6, 400000, 7);
  double m1 = 0.0, m2 = 0.0;
  for (double x : v) {
    m1 += x;
    m2 += x * x;
  }
  m1 /= static_cast<double>(v.size());
  m2 /= static_cast<double>(v.size());
  CHECK(m1 == doctest::Approx(std::exp(mean_echo_log(md))).epsilon(0.01));
  CHECK(m2 - m1 * m1 == doctest::Approx(exact_variance(md)).epsilon(0.03));
  // support strictly inside (0, 1]
  CHECK(*std::min_element(v.begin(), v.end()) > 0.0);
  CHECK(*std::max_element(v.begin(), v.end()) <= 1.0);
}

TEST_CASE("sampling is deterministic per seed") {
  const ModeData md = mode_data({0.3, 1.4, 18});
  const auto a = sample_echo(md, 1e5, 1000, 42);
  const auto b = sample_echo(md, 1e5, 1000, 42);
  CHECK(a == b);
  const auto c = sample_echo(md, 1e5, 1000, 43);
  CHECK(a != c);
}

TEST_CASE("histogram basics") {
  const std::vector<double> constant(100, 0.5);
  const EmpiricalDistribution one = histogram(constant, 10);
  std::int64_t occupied = 0;
  for (auto c : one.counts) occupied += (c > 0);
  CHECK(occupied == 1);
  CHECK(one.n_samples == 100);

  CHECK_THROWS_AS(histogram(constant, 1), std::invalid_argument);
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 10), std::invalid_argument);
}

TEST_CASE("histogram of uniform synthetic samples is flat to 5 sigma") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(1000000);
  for (double& x : v) x = u(rng);
  std::vector<double> edges(101);
  for (int i = 0; i <= 100; ++i) edges[static_cast<std::size_t>(i)] = i / 100.0;
  const EmpiricalDistribution d = histogram(v, edges);
  const double expect = 1e6 / 100;
  const double sigma = std::sqrt(expect);
  for (auto c : d.counts)
    CHECK(std::abs(static_cast<double>(c) - expect) < 5 * sigma);
  CHECK(d.n_samples == 1000000);
}

TEST_CASE("echo histogram in the deep-quench regime peaks near zero") {
  const ModeData md = mode_data({0.3, 1.4, 18});
  const auto v = sample_echo(md, 1e6, 100000, 3);
  const EmpiricalDistribution d = histogram(v, 50);
  const std::size_t mode_bin = static_cast<std::size_t>(
      std::max_element(d.counts.begin(), d.counts.end()) - d.counts.begin());
  CHECK(mode_bin <= 1);
}

TEST_CASE("batman density: support, normalization, peak scaling") {
  const BatmanParams p{0.9622579904402756, 0.03116036798542995,
                       0.003434694052092506, 0.159, 0.473};
  CHECK(batman_density(p, p.mean + (p.A + p.B) + 1e-6) == 0.0);
  CHECK(batman_density(p, p.mean - (p.A + p.B) - 1e-6) == 0.0);

  // normalization by adaptive quadrature split at the peaks (the density has
  // integrable log singularities there)
  const double peaks[2] = {p.mean - (p.A - p.B), p.mean + (p.A - p.B)};
  const double edges[4] = {p.mean - (p.A + p.B), peaks[0], peaks[1],
                           p.mean + (p.A + p.B)};
  double integral = 0.0;
  for (int seg = 0; seg < 3; ++seg)
    integral += integrate_adaptive(
        [&](double x) { return batman_density(p, x); }, edges[seg] + 1e-12,
        edges[seg + 1] - 1e-12, 3e-5, 44);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-4));

  // local scaling -ln(eps)/(2 pi^2 sqrt(AB)) near a peak: fitted slope
  const double co = 1.0 / (2 * std::numbers::pi * std::numbers::pi * std::sqrt(p.A * p.B));
  double xs[3], ys[3];
  for (int i = 0; i < 3; ++i) {
    const double eps = std::pow(10.0, -3 - i);
    xs[i] = -std::log(eps);
    ys[i] = batman_density(p, p.mean + (p.A - p.B) - eps);
  }
  const double slope = (ys[2] - ys[0]) / (xs[2] - xs[0]);
  CHECK(slope == doctest::Approx(co).epsilon(0.05));

  // capped at the exact peak
  bool capped = false;
  const double vpeak = batman_density(p, p.mean + (p.A - p.B), &capped);
  CHECK(capped);
  CHECK(std::isfinite(vpeak));
  CHECK(vpeak > 0.0);

  CHECK_THROWS_AS(batman_density({1.0, 0.0, 0.1, 1, 2}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(batman_density({1.0, 0.1, 0.0, 1, 2}, 1.0), std::invalid_argument);
}

TEST_CASE("batman parameters from the spectral measure") {
  // two modes, tiny quench: amplitudes are the one-particle weights
  const ModeData md = mode_data({0.999, 1.001, 4});
  const SpectralMeasure m = spectral_measure(md);
  const BatmanParams p = batman_params(m, mean_echo_log(md));
  const double a0 = md.alpha[0], a1 = md.alpha[1];
  // exact folded weights carry the spectator factor (1 - a/2)
  const double w0 = 0.5 * a0 * (1.0 - 0.5 * a1);
  const double w1 = 0.5 * a1 * (1.0 - 0.5 * a0);
  const double big = std::max(w0, w1), small = std::min(w0, w1);
  CHECK(p.A == doctest::Approx(big).epsilon(1e-12));
  CHECK(p.B == doctest::Approx(small).epsilon(1e-12));
  CHECK(p.A == doctest::Approx(std::max(a0, a1) / 2).epsilon(1e-3));
  CHECK(p.B == doctest::Approx(std::min(a0, a1) / 2).epsilon(1e-3));
  CHECK(p.A >= p.B);
  CHECK(p.B > 0.0);

  CHECK_THROWS_AS(batman_params(spectral_measure(mode_data({0.5, 0.5, 8})), 0.0),
                  std::domain_error);
}

TEST_CASE("batman density matches the sampled histogram peaks") {
  const ModeData md = mode_data({0.99, 1.01, 40});
  const SpectralMeasure m = spectral_measure(md);
  const double mlog = mean_echo_log(md);
  const BatmanParams p = batman_params(m, mlog);

  const auto v = sample_echo(md, 1e6, 400000, 7);
  const EmpiricalDistribution d = histogram(v, 50);
  const double bw = d.bin_edges[1] - d.bin_edges[0];

  // modal bin on each side of the mean vs the predicted peak positions
  for (double sign : {-1.0, 1.0}) {
    const double target = p.mean + sign * (p.A - p.B);
    double best_center = 0.0;
    std::int64_t best = -1;
    for (std::size_t i = 0; i < d.counts.size(); ++i) {
      const double center = 0.5 * (d.bin_edges[i] + d.bin_edges[i + 1]);
      if (sign * (center - p.mean) <= 0.0) continue;
      if (d.counts[i] > best) {
        best = d.counts[i];
        best_center = center;
      }
    }
    CHECK(std::abs(best_center - target) <= bw);
  }
}

TEST_CASE("exponential densities") {
  const double mlog = -2.0;
  CHECK(exponential_density(mlog, -0.5) == 0.0);
  const double lbar = std::exp(mlog);
  CHECK(exponential_density(mlog, 0.0) == doctest::Approx(1.0 / lbar).epsilon(1e-13));
  const double integral = integrate_adaptive(
      [&](double x) { return exponential_density(mlog, x); }, 0.0, 50 * lbar, 1e-12);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(exponential_density(0.0, 0.1), std::invalid_argument);

  // the epsilon-regularized variant vanishes at zero and stays normalized
  CHECK(exponential_density_eps(mlog, 1e-3, 0.0) == 0.0);
  const double ieps = integrate_adaptive(
      [&](double x) { return exponential_density_eps(mlog, 1e-3, x); }, 1e-12,
      50 * lbar, 1e-10);
  CHECK(ieps == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(exponential_density_eps(mlog, 1e-3, 1e-4) <
        exponential_density_eps(mlog, 1e-3, 1e-2));
}

TEST_CASE("gaussian density") {
  CHECK(gaussian_density(0.5, 0.04, 0.5) ==
        doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi * 0.04)).epsilon(1e-13));
  for (double d : {0.01, 0.1, 0.3})
    CHECK(gaussian_density(0.5, 0.04, 0.5 + d) ==
          doctest::Approx(gaussian_density(0.5, 0.04, 0.5 - d)).epsilon(1e-13));
  CHECK_THROWS_AS(gaussian_density(0.0, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("regime classification at the reference points") {
  CHECK(classify_regime({0.5, 0.5, 20}) == Regime::Degenerate);
  CHECK(classify_regime({0.3, 1.4, 18}) == Regime::Exponential);
  CHECK(classify_regime({0.1, 0.11, 20}) == Regime::Gaussian);
  CHECK(classify_regime({0.99, 1.01, 40}) == Regime::BatmanHood);
}

TEST_CASE("regime migrations with the default thresholds") {
  CHECK(classify_regime({0.9, 1.2, 10}) == Regime::BatmanHood);
  CHECK(classify_regime({0.9, 1.2, 40}) == Regime::Exponential);
  CHECK(classify_regime({0.2, 0.6, 20}) == Regime::Gaussian);
  CHECK(classify_regime({0.2, 0.6, 120}) == Regime::Exponential);
}

TEST_CASE("distance: equal step density gives 0, disjoint gives 1") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(200000);
  for (double& x : v) x = u(rng);
  EmpiricalDistribution d = histogram(v, 20);

  auto step = [&](double x) {
    for (std::size_t i = 0; i + 1 < d.bin_edges.size(); ++i) {
      if (x >= d.bin_edges[i] && x < d.bin_edges[i + 1]) {
        const double w = d.bin_edges[i + 1] - d.bin_edges[i];
        return static_cast<double>(d.counts[i]) /
               (static_cast<double>(d.n_samples) * w);
      }
    }
    return 0.0;
  };
  CHECK(distribution_distance(d, step) == doctest::Approx(0.0).epsilon(1e-9));

  auto far_away = [&](double x) {
    return x > 10.0 && x < 11.0 ? 1.0 : 0.0;  // disjoint support
  };
  CHECK(distribution_distance(d, far_away) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gaussian regime: distribution matches the exact-moment gaussian") {
  const ModeData md = mode_data({0.1, 0.11, 20});
  const auto v = sample_echo(md, 1e6, 400000, 7);
  const EmpiricalDistribution d = histogram(v, 50);
  const double mean = std::exp(mean_echo_log(md));
  const double var = exact_variance(md);
  double m1 = 0.0;
  for (double x : v) m1 += x;
  m1 /= static_cast<double>(v.size());
  double m2 = 0.0;
  for (double x : v) m2 += (x - m1) * (x - m1);
  m2 /= static_cast<double>(v.size());
  CHECK(m1 == doctest::Approx(mean).epsilon(0.01));
  CHECK(m2 == doctest::Approx(var).epsilon(0.05));
  const double tv = distribution_distance(
      d, [&](double x) { return gaussian_density(mean, var, x); });
  CHECK(tv < 0.08);
}

}  // TEST_SUITE
