#pragma once

#include "gixgd/distribution.hpp"

namespace gixgd {

// E[Y^c] = theta^{c/a+1}/(1+theta) Gamma(1-c/a)
//          + 1/2 theta^{c/a}/(theta+1) Gamma(3-c/a),
// which exists only for c < alpha (strict: Gamma(1-c/a) has a pole at c = a).
// c = 0 is permitted and returns 1. Throws MomentNotDefinedError otherwise.
double raw_moment(const GixgdParams& p, int c);

struct MomentShape {
  double skewness;  // mu3^2 / mu2^3
  double kurtosis;  // mu4 / mu2^2
};

// Moment skewness and kurtosis from the first four raw moments; requires
// alpha > 4 so the fourth moment exists.
MomentShape moment_skewness_kurtosis(const GixgdParams& p);

// E[Y^-c] = theta^2/(2(1+theta)) (2 Gamma(1+c/a)/theta^{1+c/a}
//           + Gamma(3+c/a)/theta^{2+c/a}); exists for every c >= 0.
double inverse_moment(const GixgdParams& p, int c);

// E[1/Y]; the harmonic mean itself is the reciprocal of this value.
double harmonic_mean_reciprocal(const GixgdParams& p);

// E[Y^n | Y > y] for 1 <= n < alpha (n = 0 returns 1). Throws
// DegenerateSurvivalError when survival(p, y) underflows to zero.
double conditional_moment(const GixgdParams& p, int n, double y);

// E|Y - mu| about the mean, via
// 2 mu F(mu) - 2 mu + 2 S(mu) E[Y | Y > mu]; requires alpha > 1.
double mean_deviation(const GixgdParams& p);

struct QuantileShape {
  double bowley_skewness;  // quartile-based, always in [-1, 1]
  double moors_kurtosis;   // octile-based
};

QuantileShape bowley_moors(const GixgdParams& p);

struct BonferroniLorenzPoint {
  double bonferroni;  // B(prob) = L(prob) / prob
  double lorenz;      // L(prob)
};

// Curve values at q = quantile(prob):
//   L(prob) = (mu - S(q) E[Y | Y > q]) / mu.
// Requires alpha > 1 and prob in (0, 1).
BonferroniLorenzPoint bonferroni_lorenz(const GixgdParams& p, double prob);

struct InequalityIndices {
  double bonferroni_index;  // 1 - int_0^1 B(p) dp
  double gini_index;        // 1 - 2 int_0^1 L(p) dp
};

// Both integrals by adaptive quadrature to absolute tolerance 1e-8.
InequalityIndices bonferroni_gini_indices(const GixgdParams& p);

}  // namespace gixgd
