#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gixgd/dataio.hpp"

namespace gixgd {

// Inverse Lindley: f(x) = theta^2/(1+theta) (1+x)/x^3 e^{-theta/x},
//                  F(x) = (1 + theta/((1+theta) x)) e^{-theta/x}.
double ild_log_pdf(double theta, double x);
double ild_cdf(double theta, double x);

// Inverse xgamma (the alpha = 1 submodel), coded directly from its own
// density rather than through the two-parameter family.
double ixgd_log_pdf(double theta, double x);
double ixgd_cdf(double theta, double x);

// Inverse Weibull: F(x) = e^{-lambda x^{-alpha}}.
double iwd_log_pdf(double alpha, double lambda, double x);
double iwd_cdf(double alpha, double lambda, double x);

// Inverted exponential: F(x) = e^{-theta/x}.
double ied_log_pdf(double theta, double x);
double ied_cdf(double theta, double x);
// Closed-form MLE theta_hat = n / sum(1/x_i), exposed for cross-checking.
double ied_mle(const Dataset& data);

// Generalized exponential with scale sigma: F(x) = (1 - e^{-x/sigma})^alpha.
double ged_log_pdf(double alpha, double sigma, double x);
double ged_cdf(double alpha, double sigma, double x);

// Gamma, shape-rate convention: F(x) = P(shape, rate x).
double gd_log_pdf(double shape, double rate, double x);
double gd_cdf(double shape, double rate, double x);

// Shared fitting contract. Every model here lives on (0, inf) with every
// parameter in (0, inf); log_pdf returns -inf (never throws) for parameter
// vectors outside that region so optimizers can probe freely.
class DistributionModel {
 public:
  virtual ~DistributionModel() = default;

  virtual std::string_view name() const = 0;
  virtual std::span<const std::string_view> param_names() const = 0;
  std::size_t n_params() const { return param_names().size(); }

  virtual double log_pdf(std::span<const double> params, double x) const = 0;
  virtual double cdf(std::span<const double> params, double x) const = 0;

  // Deterministic, data-driven starting point for the fitter.
  virtual std::vector<double> initial_guess(const Dataset& data) const = 0;
};

// Fixed singletons: "gixgd", "ild", "ixgd", "iwd", "ied", "ged", "gd".
std::span<const DistributionModel* const> model_registry();

// nullptr when the name is unknown.
const DistributionModel* find_model(std::string_view name);

}  // namespace gixgd
