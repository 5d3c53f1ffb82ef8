#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gixgd/dataio.hpp>
#include <gixgd/distribution.hpp>
#include <gixgd/estimation.hpp>
#include <gixgd/models.hpp>
#include <gixgd/sampling.hpp>

using namespace gixgd;

namespace {

// Asymptotic two-sided K-S acceptance at the 1% level.
bool ks_passes_1pct(const std::vector<double>& draws,
                    const std::function<double(double)>& cdf_fn) {
  const Dataset data(draws, "draws");
  const double d = ks_statistic(cdf_fn, data);
  const double crit = 1.62762 / std::sqrt(static_cast<double>(draws.size()));
  return d < crit;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("streams are bit-reproducible and seed-sensitive") {
  const GixgdParams p{2.0, 5.0};
  RngStream a(123), b(123), c(124);
  const auto da = sample_gixgd(a, p, 512);
  const auto db = sample_gixgd(b, p, 512);
  const auto dc = sample_gixgd(c, p, 512);
  CHECK(da == db);
  CHECK(da != dc);
}

TEST_CASE("substreams are deterministic and mutually distinct") {
  auto s0 = RngStream::substream(42, 0);
  auto s0_again = RngStream::substream(42, 0);
  auto s1 = RngStream::substream(42, 1);
  const GixgdParams p{1.0, 1.0};
  const auto d0 = sample_gixgd(s0, p, 64);
  const auto d0_again = sample_gixgd(s0_again, p, 64);
  const auto d1 = sample_gixgd(s1, p, 64);
  CHECK(d0 == d0_again);
  CHECK(d0 != d1);
}

TEST_CASE("uniform01 stays inside the open unit interval") {
  RngStream rng(9);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  // 3 sigma of the mean of n uniforms
  CHECK(std::abs(sum / n - 0.5) < 3.0 / std::sqrt(12.0 * n));
}

TEST_CASE("normal moments") {
  RngStream rng(10);
  const int n = 100'000;
  double sum = 0.0, ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    ss += z * z;
  }
  const double mean = sum / n;
  const double var = ss / n - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("exponential distributional check") {
  RngStream rng(11);
  const double rate = 2.0;
  std::vector<double> draws(100'000);
  for (double& d : draws) d = rng.exponential(rate);
  CHECK(std::abs(mean_of(draws) - 0.5) <
        3.0 * 0.5 / std::sqrt(static_cast<double>(draws.size())));
  CHECK(ks_passes_1pct(draws,
                       [&](double x) { return -std::expm1(-rate * x); }));
  CHECK_THROWS_AS(rng.exponential(0.0), std::domain_error);
  CHECK_THROWS_AS(rng.exponential(-1.0), std::domain_error);
}

TEST_CASE("gamma mean across shape regimes") {
  RngStream rng(12);
  struct Case {
    double shape, rate;
  };
  for (const Case c : {Case{3.0, 2.0}, Case{1.0, 0.5}, Case{0.4, 1.0}}) {
    CAPTURE(c.shape);
    const int n = 100'000;
    std::vector<double> draws(n);
    for (double& d : draws) d = rng.gamma(c.shape, c.rate);
    const double want = c.shape / c.rate;
    const double sd = std::sqrt(c.shape) / c.rate;
    CHECK(std::abs(mean_of(draws) - want) <
          3.0 * sd / std::sqrt(static_cast<double>(n)) + 1e-12);
  }
  CHECK_THROWS_AS(rng.gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rng.gamma(1.0, 0.0), std::domain_error);
}

TEST_CASE("gamma distributional check against the regularized cdf") {
  RngStream rng(13);
  const double shape = 2.5, rate = 1.5;
  std::vector<double> draws(100'000);
  for (double& d : draws) d = rng.gamma(shape, rate);
  CHECK(ks_passes_1pct(
      draws, [&](double x) { return gd_cdf(shape, rate, x); }));
}

TEST_CASE("gixgd draws pass a two-sided ks test at the 1% level") {
  std::uint64_t seed = 101;
  for (const GixgdParams p :
       {GixgdParams{1.0, 1.0}, GixgdParams{2.0, 5.0}}) {
    CAPTURE(p.alpha);
    CAPTURE(p.theta);
    RngStream rng(seed++);
    const auto draws = sample_gixgd(rng, p, 100'000);
    CHECK(ks_passes_1pct(draws, [&](double y) { return cdf(p, y); }));
  }
}

TEST_CASE("mixture branch frequency tracks theta/(theta+1)") {
  const GixgdParams p{1.5, 3.0};
  RngStream rng(55);
  MixtureTally tally;
  const std::uint64_t n = 200'000;
  const auto draws = sample_gixgd(rng, p, n, &tally);
  CHECK(tally.exp_branch + tally.gamma_branch == n);
  const double w = p.theta / (p.theta + 1.0);
  const double freq = static_cast<double>(tally.exp_branch) / n;
  const double sigma = std::sqrt(w * (1.0 - w) / n);
  CHECK(std::abs(freq - w) < 3.0 * sigma);
}

TEST_CASE("alpha = 1 sampler is bit-exact with the inverse xgamma loop") {
  for (double theta : {0.5, 1.0, 7.0}) {
    CAPTURE(theta);
    RngStream a(77), b(77);
    const auto general = sample_gixgd(a, GixgdParams{1.0, theta}, 256);
    const auto special = sample_ixgd(b, theta, 256);
    CHECK(general == special);
  }
}

TEST_CASE("sample size must be positive") {
  RngStream rng(1);
  CHECK_THROWS_AS(sample_gixgd(rng, GixgdParams{1.0, 1.0}, 0),
                  std::domain_error);
  CHECK_THROWS_AS(sample_ixgd(rng, 1.0, 0), std::domain_error);
  CHECK_THROWS_AS(sample_ixgd(rng, -1.0, 5), std::domain_error);
}

TEST_CASE("draws are positive and finite") {
  RngStream rng(3);
  for (const GixgdParams p : {GixgdParams{0.5, 0.5}, GixgdParams{4.0, 20.0}}) {
    const auto draws = sample_gixgd(rng, p, 10'000);
    for (double d : draws) {
      REQUIRE(d > 0.0);
      REQUIRE(std::isfinite(d));
    }
  }
}

}  // TEST_SUITE
