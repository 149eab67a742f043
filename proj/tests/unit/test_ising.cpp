#include <doctest.h>

#include <cmath>
#include <numbers>

#include "quench/ising.hpp"

using namespace quench;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("ising") {

TEST_CASE("mode_grid basic values") {
  CHECK(mode_grid(2) == std::vector<double>{kPi / 2});
  const auto k4 = mode_grid(4);
  REQUIRE(k4.size() == 2);
  CHECK(k4[0] == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(k4[1] == doctest::Approx(3 * kPi / 4).epsilon(1e-15));
  const auto k100 = mode_grid(100);
  REQUIRE(k100.size() == 50);
  CHECK(k100.front() == doctest::Approx(kPi / 100).epsilon(1e-15));
  CHECK(k100.back() == doctest::Approx(99 * kPi / 100).epsilon(1e-15));
  for (std::size_t i = 1; i < k100.size(); ++i) CHECK(k100[i] > k100[i - 1]);
  CHECK(k100.front() > 0.0);
  CHECK(k100.back() < kPi);
}

TEST_CASE("mode_grid rejects odd and nonpositive L") {
  CHECK_THROWS_AS(mode_grid(3), std::invalid_argument);
  CHECK_THROWS_AS(mode_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(mode_grid(-4), std::invalid_argument);
}

TEST_CASE("bogoliubov_angle values and branch") {
  // h -> +inf: angle -> 0 from below
  CHECK(bogoliubov_angle(1e12, 1.0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(bogoliubov_angle(1e12, 1.0) < 0.0);
  CHECK(bogoliubov_angle(0.0, kPi / 2) == doctest::Approx(-kPi / 2).epsilon(1e-15));
  // independently evaluated two-argument arctangent of (-sin(pi/3), 1)
  CHECK(bogoliubov_angle(0.5, kPi / 3) ==
        doctest::Approx(-0.7137243789447656).epsilon(1e-14));
}

TEST_CASE("dispersion values") {
  // h = 1: Lambda = 4|cos(k/2)|, so k = pi - pi/100 gives 4 sin(pi/200)
  const double k = kPi - kPi / 100;
  CHECK(dispersion(1.0, k) == doctest::Approx(4 * std::sin(kPi / 200)).epsilon(1e-14));
  CHECK(dispersion(0.0, 0.123) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(dispersion(0.0, 2.9) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(dispersion(2.0, 1e-9) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("dispersion squared identity on the grid") {
  for (double h : {-1.7, -1.0, -0.3, 0.0, 0.4, 1.0, 2.2}) {
    for (double k : mode_grid(34)) {
      const double lhs = dispersion(h, k) * dispersion(h, k);
      const double a = h + std::cos(k), b = std::sin(k);
      CHECK(lhs == doctest::Approx(4 * (a * a + b * b)).epsilon(1e-13));
    }
  }
}

TEST_CASE("band_edges") {
  CHECK(band_edges(2.0).E_m == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(band_edges(2.0).E_M == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(band_edges(1.0).E_m == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(band_edges(1.0).E_M == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(band_edges(0.3).E_m == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(band_edges(0.3).E_M == doctest::Approx(2.6).epsilon(1e-15));
  CHECK(band_edges(-1.0).E_m == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("band_edges match dispersion extrema on a fine grid") {
  for (double h : {-2.0, -0.8, 0.5, 1.0, 1.7}) {
    double lo = 1e300, hi = 0.0;
    const int n = 20001;
    for (int i = 0; i <= n; ++i) {
      const double lam = dispersion(h, kPi * i / n);
      lo = std::min(lo, lam);
      hi = std::max(hi, lam);
    }
    const BandEdges be = band_edges(h);
    CHECK(lo == doctest::Approx(be.E_m).epsilon(1e-7));
    CHECK(hi == doctest::Approx(be.E_M).epsilon(1e-7));
  }
}

TEST_CASE("mode_data: identical couplings give alpha = 0") {
  const ModeData md = mode_data({0.7, 0.7, 8});
  REQUIRE(md.n_modes() == 4);
  for (double a : md.alpha) CHECK(a == 0.0);
}

TEST_CASE("mode_data: quasi-critical peak sits at the band bottom") {
  // alpha is largest where Lambda is smallest (k near pi for h > 0)
  const ModeData md = mode_data({0.99, 1.01, 40});
  std::size_t amax = 0, lmin = 0;
  for (std::size_t i = 1; i < md.n_modes(); ++i) {
    if (md.alpha[i] > md.alpha[amax]) amax = i;
    if (md.lambda2[i] < md.lambda2[lmin]) lmin = i;
  }
  CHECK(amax == lmin);
  CHECK(amax == md.n_modes() - 1);
}

TEST_CASE("mode_data: generic quench has alpha strictly inside (0,1)") {
  const ModeData md = mode_data({0.3, 1.4, 18});
  for (double a : md.alpha) {
    CHECK(a > 0.0);
    CHECK(a < 1.0);
  }
  for (double l : md.lambda2) CHECK(l > 0.0);
}

TEST_CASE("alpha symmetric under h1 <-> h2") {
  const ModeData a = mode_data({0.3, 1.4, 26});
  const ModeData b = mode_data({1.4, 0.3, 26});
  for (std::size_t i = 0; i < a.n_modes(); ++i)
    CHECK(a.alpha[i] == doctest::Approx(b.alpha[i]).epsilon(1e-13));
}

TEST_CASE("alpha vanishes quadratically as h2 -> h1") {
  const double h1 = 0.6;
  double prev_ratio = -1.0;
  for (double dh : {0.04, 0.02, 0.01, 0.005}) {
    const ModeData md = mode_data({h1, h1 + dh, 16});
    const double ratio = md.alpha[3] / (dh * dh);
    if (prev_ratio > 0.0)
      CHECK(ratio == doctest::Approx(prev_ratio).epsilon(0.05));
    prev_ratio = ratio;
  }
}

TEST_CASE("gap never closes on the grid, even at h = 1") {
  for (double h : {1.0, -1.0})
    for (double l : mode_data({0.5, h, 64}).lambda2) CHECK(l > 0.0);
}

TEST_CASE("QuenchSpec validation") {
  CHECK_THROWS_AS(mode_data({0.1, 0.2, 7}), std::invalid_argument);
  CHECK_THROWS_AS(mode_data({0.1, 0.2, 0}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(mode_data({inf, 0.2, 8}), std::invalid_argument);
}

}  // TEST_SUITE
