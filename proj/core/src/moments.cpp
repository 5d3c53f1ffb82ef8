#include "gixgd/moments.hpp"

#include <cmath>

#include "gixgd/errors.hpp"
#include "gixgd/specfun.hpp"
#include "quadrature.hpp"

namespace gixgd {

double raw_moment(const GixgdParams& p, int c) {
  if (c < 0) throw std::domain_error("raw_moment: order must be nonnegative");
  if (c == 0) return 1.0;
  const double r = c / p.alpha;
  if (!(r < 1.0))
    throw MomentNotDefinedError("raw_moment: E[Y^c] requires c < alpha");
  const double tr = std::pow(p.theta, r);
  return p.theta * tr / (1.0 + p.theta) * gamma_fn(1.0 - r) +
         0.5 * tr / (p.theta + 1.0) * gamma_fn(3.0 - r);
}

MomentShape moment_skewness_kurtosis(const GixgdParams& p) {
  if (!(p.alpha > 4.0))
    throw MomentNotDefinedError(
        "moment_skewness_kurtosis: fourth moment requires alpha > 4");
  const double m1 = raw_moment(p, 1);
  const double m2 = raw_moment(p, 2);
  const double m3 = raw_moment(p, 3);
  const double m4 = raw_moment(p, 4);
  const double mu2 = m2 - m1 * m1;
  const double mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
  const double mu4 =
      m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
  return {mu3 * mu3 / (mu2 * mu2 * mu2), mu4 / (mu2 * mu2)};
}

double inverse_moment(const GixgdParams& p, int c) {
  if (c < 0)
    throw std::domain_error("inverse_moment: order must be nonnegative");
  if (c == 0) return 1.0;
  const double r = c / p.alpha;
  return p.theta * p.theta / (2.0 * (1.0 + p.theta)) *
         (2.0 * gamma_fn(1.0 + r) / std::pow(p.theta, 1.0 + r) +
          gamma_fn(3.0 + r) / std::pow(p.theta, 2.0 + r));
}

double harmonic_mean_reciprocal(const GixgdParams& p) {
  return inverse_moment(p, 1);
}

double conditional_moment(const GixgdParams& p, int n, double y) {
  if (n < 0)
    throw std::domain_error("conditional_moment: order must be nonnegative");
  if (!(y > 0.0) || !std::isfinite(y))
    throw std::domain_error("conditional_moment: y must be positive");
  if (n == 0) return 1.0;
  const double r = n / p.alpha;
  if (!(r < 1.0))
    throw MomentNotDefinedError("conditional_moment: requires n < alpha");
  const double s = survival(p, y);
  if (s <= 0.0)
    throw DegenerateSurvivalError(
        "conditional_moment: survival underflowed to 0");
  const double t0 = p.theta * std::exp(-p.alpha * std::log(y));
  const double tr = std::pow(p.theta, r);
  const double num =
      p.theta * tr / (p.theta + 1.0) * lower_incomplete_gamma(1.0 - r, t0) +
      0.5 * tr / (p.theta + 1.0) * lower_incomplete_gamma(3.0 - r, t0);
  return num / s;
}

double mean_deviation(const GixgdParams& p) {
  if (!(p.alpha > 1.0))
    throw MomentNotDefinedError("mean_deviation: mean requires alpha > 1");
  const double mu = raw_moment(p, 1);
  return 2.0 * mu * cdf(p, mu) - 2.0 * mu +
         2.0 * survival(p, mu) * conditional_moment(p, 1, mu);
}

QuantileShape bowley_moors(const GixgdParams& p) {
  const double q1 = quantile(p, 0.25);
  const double q2 = quantile(p, 0.50);
  const double q3 = quantile(p, 0.75);
  const double e1 = quantile(p, 0.125);
  const double e3 = quantile(p, 0.375);
  const double e5 = quantile(p, 0.625);
  const double e7 = quantile(p, 0.875);
  return {(q3 + q1 - 2.0 * q2) / (q3 - q1),
          (e7 - e5 + e3 - e1) / (q3 - q1)};
}

BonferroniLorenzPoint bonferroni_lorenz(const GixgdParams& p, double prob) {
  if (!(p.alpha > 1.0))
    throw MomentNotDefinedError("bonferroni_lorenz: requires alpha > 1");
  if (!(prob > 0.0) || !(prob < 1.0))
    throw std::domain_error("bonferroni_lorenz: prob must lie in (0,1)");
  const double mu = raw_moment(p, 1);
  const double q = quantile(p, prob);
  const double upper = survival(p, q) * conditional_moment(p, 1, q);
  const double lorenz = (mu - upper) / mu;
  return {lorenz / prob, lorenz};
}

InequalityIndices bonferroni_gini_indices(const GixgdParams& p) {
  if (!(p.alpha > 1.0))
    throw MomentNotDefinedError("bonferroni_gini_indices: requires alpha > 1");
  // L(0) = 0, L(1) = 1; B(p) = L(p)/p -> 0 as p -> 0 since L'(0) = q(0)/mu = 0
  const auto lorenz = [&p](double prob) -> double {
    if (prob <= 0.0) return 0.0;
    if (prob >= 1.0) return 1.0;
    return bonferroni_lorenz(p, prob).lorenz;
  };
  const double il = detail::integrate_adaptive(lorenz, 0.0, 1.0, 1e-8);
  const auto bonf = [&](double prob) -> double {
    if (prob <= 0.0) return 0.0;
    if (prob >= 1.0) return 1.0;
    return lorenz(prob) / prob;
  };
  const double ib = detail::integrate_adaptive(bonf, 0.0, 1.0, 1e-8);
  return {1.0 - ib, 1.0 - 2.0 * il};
}

}  // namespace gixgd
