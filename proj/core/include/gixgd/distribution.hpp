#pragma once

#include <vector>

namespace gixgd {

// Parameters of the generalized inverse xgamma distribution.
// alpha is the shape, theta the scale (in units of y^alpha); both > 0.
// alpha = 1 reduces every operation to the inverse xgamma special case.
struct GixgdParams {
  double alpha;
  double theta;

  GixgdParams(double alpha_, double theta_);
};

// Density
//   f(y) = alpha theta^2 / (1+theta) * y^{-(alpha+1)}
//          * (1 + theta / (2 y^{2 alpha})) * e^{-theta y^{-alpha}}
// for y > 0.
double pdf(const GixgdParams& p, double y);

// log f(y), the single-observation log-likelihood summand.
double log_pdf(const GixgdParams& p, double y);

// F(y) = (1 + t^2/(2(theta+1)) + t/(theta+1)) e^{-t}  with  t = theta y^{-alpha}.
double cdf(const GixgdParams& p, double y);

// 1 - F(y), computed in complement form so the small-t regime keeps precision.
double survival(const GixgdParams& p, double y);

// pdf / survival. Throws DegenerateSurvivalError when the survival
// probability underflows to zero.
double hazard(const GixgdParams& p, double y);

// Unique y with cdf(p, y) = prob, for prob in (0, 1). Solved for
// t = theta y^{-alpha} on the strictly decreasing tail function, then
// mapped back; |cdf(quantile(prob)) - prob| <= 1e-10.
double quantile(const GixgdParams& p, double prob);

enum class CurveKind { pdf, hazard };

struct CurvePoint {
  double y;
  double value;
};

// Uniform grid of (y, f(y)) or (y, h(y)) pairs on [y_min, y_max];
// y strictly increasing, endpoints included exactly.
std::vector<CurvePoint> curve_grid(const GixgdParams& p, CurveKind kind,
                                   double y_min, double y_max, int n_points);

}  // namespace gixgd
