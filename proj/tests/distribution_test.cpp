#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gixgd/distribution.hpp>
#include <gixgd/errors.hpp>
#include <gixgd/models.hpp>

#include "support/oracle.hpp"

using namespace gixgd;

namespace {
// Parameter grid shared across property checks.
const std::vector<GixgdParams> kGrid = {
    {0.5, 0.5}, {0.5, 2.0}, {1.0, 1.0},  {1.5, 300.0}, {2.0, 1.0},
    {2.0, 10.0}, {3.0, 5.0}, {5.0, 0.8}, {1.41661, 288.011}};

const std::vector<double> kProbs = {1e-6, 0.001, 0.01, 0.05, 0.1,  0.25, 0.5,
                                    0.75, 0.9,   0.95, 0.99, 0.999, 1.0 - 1e-6};

int sign_changes(const std::vector<CurvePoint>& grid) {
  int changes = 0;
  int prev = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double d = grid[i].value - grid[i - 1].value;
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}
}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GixgdParams(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(GixgdParams(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(GixgdParams(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(GixgdParams(1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(GixgdParams(std::nan(""), 1.0), std::domain_error);
  CHECK_THROWS_AS(GixgdParams(1.0, std::numeric_limits<double>::infinity()),
                  std::domain_error);
  CHECK_NOTHROW(GixgdParams(0.01, 1e6));
}

TEST_CASE("pdf known values") {
  const GixgdParams p{1.0, 1.0};
  CHECK(pdf(p, 1.0) == doctest::Approx(0.27590958087858175).epsilon(1e-14));
  CHECK(log_pdf(p, 1.0) ==
        doctest::Approx(-1.2876820724517809).epsilon(1e-14));
}

TEST_CASE("pdf agrees with the naive density formula") {
  for (const auto& p : kGrid)
    for (double y : {0.2, 0.5, 1.0, 2.0, 5.0, 20.0, 80.0}) {
      CAPTURE(p.alpha);
      CAPTURE(p.theta);
      CAPTURE(y);
      const double naive = oracle::naive_pdf(p.alpha, p.theta, y);
      if (naive > 1e-300)
        CHECK(pdf(p, y) == doctest::Approx(naive).epsilon(1e-12));
    }
}

TEST_CASE("pdf integrates to one") {
  for (const auto& p : kGrid) {
    CAPTURE(p.alpha);
    CAPTURE(p.theta);
    const double mass =
        oracle::expectation(p.alpha, p.theta, [](double) { return 1.0; }, 0.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("pdf and log_pdf reject bad evaluation points") {
  const GixgdParams p{2.0, 1.0};
  CHECK_THROWS_AS(pdf(p, 0.0), std::domain_error);
  CHECK_THROWS_AS(pdf(p, -1.0), std::domain_error);
  CHECK_THROWS_AS(log_pdf(p, std::nan("")), std::domain_error);
}

TEST_CASE("cdf is the integral of the pdf") {
  for (const auto& p : kGrid) {
    const double med = quantile(p, 0.5);
    for (double y : {0.3 * med, med, 3.0 * med}) {
      CAPTURE(p.alpha);
      CAPTURE(p.theta);
      CAPTURE(y);
      // upper-tail pdf mass is smooth for the integrator; F = 1 - that
      const double tail = oracle::expectation(
          p.alpha, p.theta, [](double) { return 1.0; }, 0.0, y);
      CHECK(cdf(p, y) == doctest::Approx(1.0 - tail).epsilon(5e-8));
      CHECK(survival(p, y) == doctest::Approx(tail).epsilon(5e-8));
    }
  }
}

TEST_CASE("cdf known value and limits") {
  const GixgdParams ref{1.624157, 641.7557};
  CHECK(cdf(ref, 54.0) ==
        doctest::Approx(0.37407835275220586).epsilon(1e-13));
  const GixgdParams p{1.0, 1.0};
  CHECK(cdf(p, 1e-12) == 0.0);       // deep left tail underflows exactly
  CHECK(survival(p, 1e-12) == 1.0);
  CHECK(cdf(p, 1e12) > 1.0 - 1e-6);
  for (const auto& q : kGrid) {
    double prev = -1.0;
    for (double y = 0.01; y < 1e4; y *= 3.1) {
      const double f = cdf(q, y);
      CHECK(f >= prev);
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
      prev = f;
    }
  }
}

TEST_CASE("survival complements cdf") {
  for (const auto& p : kGrid)
    for (double y : {0.4, 1.0, 3.0, 15.0}) {
      CAPTURE(p.alpha);
      CAPTURE(p.theta);
      CAPTURE(y);
      CHECK(cdf(p, y) + survival(p, y) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("survival and hazard known values") {
  const GixgdParams ref{1.624157, 641.7557};
  CHECK(survival(ref, 54.0) ==
        doctest::Approx(0.6259216472).epsilon(1e-9));
  CHECK(survival(ref, 70.0) ==
        doctest::Approx(0.4754829264).epsilon(1e-9));
  CHECK(survival(ref, 99.0) ==
        doctest::Approx(0.3075876371).epsilon(1e-9));
  CHECK(survival(ref, 112.0) ==
        doctest::Approx(0.2598060500).epsilon(1e-9));
  CHECK(hazard(ref, 54.0) == doctest::Approx(0.0176614570).epsilon(1e-8));
  CHECK(hazard(ref, 70.0) == doctest::Approx(0.0165075640).epsilon(1e-8));
  CHECK(hazard(ref, 99.0) == doctest::Approx(0.0135709035).epsilon(1e-8));
  CHECK(hazard(ref, 112.0) == doctest::Approx(0.0124263753).epsilon(1e-8));
}

TEST_CASE("hazard equals pdf over survival where both are stable") {
  for (const auto& p : kGrid)
    for (double y : {0.5, 1.0, 2.0, 8.0}) {
      CAPTURE(p.alpha);
      CAPTURE(p.theta);
      CAPTURE(y);
      CHECK(hazard(p, y) ==
            doctest::Approx(pdf(p, y) / survival(p, y)).epsilon(1e-13));
    }
}

TEST_CASE("hazard reports degenerate survival in the far right tail") {
  // y^{-alpha} underflows, so S is exactly 0 and the ratio is undefined;
  // at alpha = 1 the same y still has representable t and hazard -> 0.
  const GixgdParams p{2.0, 1.0};
  CHECK_THROWS_AS(hazard(p, 1e300), DegenerateSurvivalError);
  CHECK(hazard(GixgdParams{1.0, 1.0}, 1e300) == 0.0);
}

TEST_CASE("quantile round-trips through the cdf") {
  for (const auto& p : kGrid)
    for (double prob : kProbs) {
      CAPTURE(p.alpha);
      CAPTURE(p.theta);
      CAPTURE(prob);
      const double q = quantile(p, prob);
      CHECK(q > 0.0);
      CHECK(std::abs(cdf(p, q) - prob) <= 1e-10);
    }
}

TEST_CASE("quantile known values and monotonicity") {
  CHECK(quantile(GixgdParams{2.0, 1.0}, 0.5) ==
        doctest::Approx(0.798565151431478).epsilon(1e-12));
  CHECK(quantile(GixgdParams{1.0, 1.0}, 0.5) ==
        doctest::Approx(0.637706301080780).epsilon(1e-12));
  const GixgdParams p{1.5, 3.0};
  double prev = 0.0;
  for (double prob : kProbs) {
    const double q = quantile(p, prob);
    CHECK(q > prev);
    prev = q;
  }
}

TEST_CASE("quantile rejects probabilities outside (0,1)") {
  const GixgdParams p{1.0, 1.0};
  CHECK_THROWS_AS(quantile(p, 0.0), std::domain_error);
  CHECK_THROWS_AS(quantile(p, 1.0), std::domain_error);
  CHECK_THROWS_AS(quantile(p, -0.2), std::domain_error);
  CHECK_THROWS_AS(quantile(p, 1.2), std::domain_error);
  CHECK_THROWS_AS(quantile(p, std::nan("")), std::domain_error);
}

TEST_CASE("alpha = 1 reduces to the inverse xgamma model") {
  for (double theta : {0.5, 1.0, 5.0, 40.0}) {
    const GixgdParams p{1.0, theta};
    for (double y : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      CAPTURE(theta);
      CAPTURE(y);
      CHECK(log_pdf(p, y) ==
            doctest::Approx(ixgd_log_pdf(theta, y)).epsilon(1e-12));
      CHECK(cdf(p, y) == doctest::Approx(ixgd_cdf(theta, y)).epsilon(1e-12));
    }
    for (double prob : {0.05, 0.3, 0.5, 0.9, 0.999}) {
      // invert through the independently coded cdf
      CHECK(std::abs(ixgd_cdf(theta, quantile(p, prob)) - prob) <= 1e-12);
    }
  }
}

TEST_CASE("curve_grid endpoints, spacing and size") {
  const GixgdParams p{2.0, 5.0};
  const auto grid = curve_grid(p, CurveKind::pdf, 0.3, 20.0, 7);
  REQUIRE(grid.size() == 7);
  CHECK(grid.front().y == 0.3);
  CHECK(grid.back().y == 20.0);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i].y > grid[i - 1].y);
  for (const auto& pt : grid)
    CHECK(pt.value == doctest::Approx(pdf(p, pt.y)).epsilon(1e-15));

  const auto two = curve_grid(p, CurveKind::hazard, 1.0, 2.0, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].y == 1.0);
  CHECK(two[1].y == 2.0);
  CHECK(two[0].value == doctest::Approx(hazard(p, 1.0)).epsilon(1e-15));
}

TEST_CASE("curve_grid rejects bad ranges") {
  const GixgdParams p{1.0, 1.0};
  CHECK_THROWS_AS(curve_grid(p, CurveKind::pdf, 0.0, 1.0, 5),
                  std::domain_error);
  CHECK_THROWS_AS(curve_grid(p, CurveKind::pdf, 2.0, 1.0, 5),
                  std::domain_error);
  CHECK_THROWS_AS(curve_grid(p, CurveKind::pdf, 1.0, 2.0, 1),
                  std::domain_error);
}

TEST_CASE("pdf curves are unimodal") {
  struct Case {
    GixgdParams p;
    double lo, hi;
  };
  const Case cases[] = {{{2.0, 1.0}, 0.05, 6.0},
                        {{1.0, 1.0}, 0.02, 20.0},
                        {{1.624157, 641.7557}, 5.0, 500.0}};
  for (const auto& c : cases) {
    CAPTURE(c.p.alpha);
    const auto grid = curve_grid(c.p, CurveKind::pdf, c.lo, c.hi, 300);
    CHECK(sign_changes(grid) == 1);
  }
}

TEST_CASE("hazard rises to an interior peak then declines") {
  struct Case {
    GixgdParams p;
    double lo, hi;
  };
  const Case cases[] = {{{1.624157, 641.7557}, 5.0, 500.0},
                        {{2.0, 5.0}, 0.3, 20.0},
                        {{1.0, 1.0}, 0.05, 50.0},
                        {{3.0, 2.0}, 0.3, 10.0},
                        {{1.41661, 288.011}, 5.0, 500.0}};
  for (const auto& c : cases) {
    CAPTURE(c.p.alpha);
    CAPTURE(c.p.theta);
    const auto grid = curve_grid(c.p, CurveKind::hazard, c.lo, c.hi, 400);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
      if (grid[i].value > grid[arg].value) arg = i;
    CHECK(arg > 0);
    CHECK(arg < grid.size() - 1);
    CHECK(sign_changes(grid) == 1);
  }
}

}  // TEST_SUITE
