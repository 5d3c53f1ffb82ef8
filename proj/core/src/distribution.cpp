#include "gixgd/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gixgd/errors.hpp"

namespace gixgd {

namespace {

// e^{-t} underflows past here, so F(y) = 0 and S(y) = 1 to double precision.
constexpr double kTailCut = 746.0;

void check_y(double y) {
  if (!(y > 0.0) || !std::isfinite(y))
    throw std::domain_error("gixgd: y must be positive and finite");
}

// t = theta y^{-alpha}, or +inf when the power overflows.
double tail_arg(const GixgdParams& p, double y) {
  const double lt = std::log(p.theta) - p.alpha * std::log(y);
  if (lt > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(lt);
}

}  // namespace

GixgdParams::GixgdParams(double alpha_, double theta_)
    : alpha(alpha_), theta(theta_) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("GixgdParams: alpha must be positive and finite");
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::domain_error("GixgdParams: theta must be positive and finite");
}

double log_pdf(const GixgdParams& p, double y) {
  check_y(y);
  const double ly = std::log(y);
  const double u = std::exp(-p.alpha * ly);   // y^{-alpha}
  if (std::isinf(u))
    throw std::overflow_error("gixgd log_pdf: y^{-alpha} overflows");
  double mix;                                  // log1p(theta/(2 y^{2 alpha}))
  const double lu2 = -2.0 * p.alpha * ly;      // log y^{-2 alpha}
  if (lu2 > 700.0) {
    // the mixture term dominates; fold it in logarithmically
    mix = std::log(p.theta / 2.0) + lu2;
  } else {
    mix = std::log1p(0.5 * p.theta * std::exp(lu2));
  }
  return std::log(p.alpha) + 2.0 * std::log(p.theta) - std::log1p(p.theta) -
         (p.alpha + 1.0) * ly + mix - p.theta * u;
}

double pdf(const GixgdParams& p, double y) { return std::exp(log_pdf(p, y)); }

double cdf(const GixgdParams& p, double y) {
  check_y(y);
  const double t = tail_arg(p, y);
  if (t > kTailCut) return 0.0;
  return (1.0 + (0.5 * t * t + t) / (p.theta + 1.0)) * std::exp(-t);
}

double survival(const GixgdParams& p, double y) {
  check_y(y);
  const double t = tail_arg(p, y);
  if (t > kTailCut) return 1.0;
  // S = (1 - e^{-t}) - A e^{-t}; -expm1 keeps the small-t difference exact.
  const double a = (0.5 * t * t + t) / (p.theta + 1.0);
  return -std::expm1(-t) - a * std::exp(-t);
}

double hazard(const GixgdParams& p, double y) {
  const double s = survival(p, y);
  const double f = pdf(p, y);
  if (s <= 0.0)
    throw DegenerateSurvivalError("gixgd hazard: survival underflowed to 0");
  return f / s;
}

namespace {

// g(t) = (1 + t/(theta+1) + t^2/(2(theta+1))) e^{-t}: the CDF as a function
// of t = theta y^{-alpha}; strictly decreasing from 1 to 0 on (0, inf).
double tail_cdf(double theta, double t) {
  if (t > kTailCut) return 0.0;
  return (1.0 + (t + 0.5 * t * t) / (theta + 1.0)) * std::exp(-t);
}

double tail_cdf_deriv(double theta, double t) {
  return -std::exp(-t) * (theta + 0.5 * t * t) / (theta + 1.0);
}

}  // namespace

double quantile(const GixgdParams& p, double prob) {
  if (!(prob > 0.0) || !(prob < 1.0))
    throw std::domain_error("gixgd quantile: prob must lie in (0,1)");
  // bracket [lo, hi] with g(lo) > prob > g(hi), doubling/halving from t = 1
  double lo = 1.0, hi = 1.0;
  if (tail_cdf(p.theta, 1.0) > prob) {
    while (tail_cdf(p.theta, hi) > prob) {
      lo = hi;
      hi *= 2.0;
    }
  } else {
    while (tail_cdf(p.theta, lo) <= prob) {
      hi = lo;
      lo *= 0.5;
    }
  }
  // safeguarded Newton: fall back to bisection when a step leaves the bracket
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = tail_cdf(p.theta, t) - prob;
    if (g > 0.0)
      lo = t;
    else
      hi = t;
    const double dg = tail_cdf_deriv(p.theta, t);
    double next = t - g / dg;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - t);
    t = next;
    if (step <= 1e-15 * std::max(1.0, t)) break;
  }
  return std::exp((std::log(p.theta) - std::log(t)) / p.alpha);
}

std::vector<CurvePoint> curve_grid(const GixgdParams& p, CurveKind kind,
                                   double y_min, double y_max, int n_points) {
  if (!(y_min > 0.0) || !(y_max > y_min))
    throw std::domain_error("curve_grid: need 0 < y_min < y_max");
  if (n_points < 2) throw std::domain_error("curve_grid: need n_points >= 2");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  const double step = (y_max - y_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double y = (i == n_points - 1) ? y_max : y_min + i * step;
    const double v = (kind == CurveKind::pdf) ? pdf(p, y) : hazard(p, y);
    if (!out.empty() && !(y > out.back().y))
      throw std::domain_error("curve_grid: grid spacing rounds to zero");
    out.push_back({y, v});
  }
  return out;
}

}  // namespace gixgd
