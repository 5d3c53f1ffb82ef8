#include "gixgd/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gixgd/distribution.hpp"
#include "gixgd/specfun.hpp"

namespace gixgd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_pos(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(what) + " must be positive");
}

}  // namespace

double ild_log_pdf(double theta, double x) {
  check_pos(theta, "ild theta");
  check_pos(x, "ild x");
  return 2.0 * std::log(theta) - std::log1p(theta) + std::log1p(x) -
         3.0 * std::log(x) - theta / x;
}

double ild_cdf(double theta, double x) {
  check_pos(theta, "ild theta");
  check_pos(x, "ild x");
  return (1.0 + theta / ((1.0 + theta) * x)) * std::exp(-theta / x);
}

double ixgd_log_pdf(double theta, double x) {
  check_pos(theta, "ixgd theta");
  check_pos(x, "ixgd x");
  // f(x) = theta^2/(1+theta) x^{-2} (1 + theta/(2 x^2)) e^{-theta/x}
  return 2.0 * std::log(theta) - std::log1p(theta) - 2.0 * std::log(x) +
         std::log1p(0.5 * theta / (x * x)) - theta / x;
}

double ixgd_cdf(double theta, double x) {
  check_pos(theta, "ixgd theta");
  check_pos(x, "ixgd x");
  const double t = theta / x;
  if (t > 746.0) return 0.0;
  return (1.0 + (t + 0.5 * t * t) / (theta + 1.0)) * std::exp(-t);
}

double iwd_log_pdf(double alpha, double lambda, double x) {
  check_pos(alpha, "iwd alpha");
  check_pos(lambda, "iwd lambda");
  check_pos(x, "iwd x");
  const double u = std::exp(-alpha * std::log(x));
  return std::log(alpha) + std::log(lambda) - (alpha + 1.0) * std::log(x) -
         lambda * u;
}

double iwd_cdf(double alpha, double lambda, double x) {
  check_pos(alpha, "iwd alpha");
  check_pos(lambda, "iwd lambda");
  check_pos(x, "iwd x");
  return std::exp(-lambda * std::exp(-alpha * std::log(x)));
}

double ied_log_pdf(double theta, double x) {
  check_pos(theta, "ied theta");
  check_pos(x, "ied x");
  return std::log(theta) - 2.0 * std::log(x) - theta / x;
}

double ied_cdf(double theta, double x) {
  check_pos(theta, "ied theta");
  check_pos(x, "ied x");
  return std::exp(-theta / x);
}

double ied_mle(const Dataset& data) {
  double recip = 0.0;
  for (double v : data.values()) recip += 1.0 / v;
  return static_cast<double>(data.n()) / recip;
}

double ged_log_pdf(double alpha, double sigma, double x) {
  check_pos(alpha, "ged alpha");
  check_pos(sigma, "ged sigma");
  check_pos(x, "ged x");
  // f(x) = alpha/sigma (1 - e^{-x/sigma})^{alpha-1} e^{-x/sigma}
  const double z = x / sigma;
  return std::log(alpha) - std::log(sigma) +
         (alpha - 1.0) * std::log(-std::expm1(-z)) - z;
}

double ged_cdf(double alpha, double sigma, double x) {
  check_pos(alpha, "ged alpha");
  check_pos(sigma, "ged sigma");
  check_pos(x, "ged x");
  return std::exp(alpha * std::log(-std::expm1(-x / sigma)));
}

double gd_log_pdf(double shape, double rate, double x) {
  check_pos(shape, "gd shape");
  check_pos(rate, "gd rate");
  check_pos(x, "gd x");
  return shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x -
         ln_gamma(shape);
}

double gd_cdf(double shape, double rate, double x) {
  check_pos(shape, "gd shape");
  check_pos(rate, "gd rate");
  check_pos(x, "gd x");
  return regularized_gamma_p(shape, rate * x);
}

namespace {

bool params_ok(std::span<const double> params, std::size_t k) {
  if (params.size() != k) return false;
  for (double v : params)
    if (!(v > 0.0) || !std::isfinite(v)) return false;
  return true;
}

void require(bool ok) {
  if (!ok) throw std::domain_error("model: bad parameter vector");
}

// Shields a raw density from optimizer probes: invalid parameter vectors
// and evaluation overflow both collapse to -inf.
template <typename F>
double guarded(F&& f) {
  try {
    const double v = f();
    return std::isnan(v) ? kNegInf : v;
  } catch (const std::exception&) {
    return kNegInf;
  }
}

double data_mean(const Dataset& data) {
  const auto& v = data.values();
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

class GixgdModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "gixgd"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"alpha", "theta"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 2)) return kNegInf;
    return guarded([&] { return gixgd::log_pdf(GixgdParams(q[0], q[1]), x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 2));
    return gixgd::cdf(GixgdParams(q[0], q[1]), x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    // alpha = 1 is the exact inverse-xgamma submodel: a principled warm start
    return {1.0, ied_mle(data)};
  }
};

class IldModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "ild"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"theta"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 1)) return kNegInf;
    return guarded([&] { return ild_log_pdf(q[0], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 1));
    return ild_cdf(q[0], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    return {ied_mle(data)};
  }
};

class IxgdModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "ixgd"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"theta"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 1)) return kNegInf;
    return guarded([&] { return ixgd_log_pdf(q[0], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 1));
    return ixgd_cdf(q[0], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    return {ied_mle(data)};
  }
};

class IwdModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "iwd"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"alpha", "lambda"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 2)) return kNegInf;
    return guarded([&] { return iwd_log_pdf(q[0], q[1], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 2));
    return iwd_cdf(q[0], q[1], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    // at alpha = 1 the median is lambda/ln 2
    const auto& s = data.sorted();
    const double median = s[s.size() / 2];
    return {1.0, median * std::log(2.0)};
  }
};

class IedModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "ied"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"theta"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 1)) return kNegInf;
    return guarded([&] { return ied_log_pdf(q[0], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 1));
    return ied_cdf(q[0], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    return {ied_mle(data)};
  }
};

class GedModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "ged"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"alpha", "sigma"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 2)) return kNegInf;
    return guarded([&] { return ged_log_pdf(q[0], q[1], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 2));
    return ged_cdf(q[0], q[1], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    // alpha = 1 is the plain exponential, whose MLE scale is the mean
    return {1.0, data_mean(data)};
  }
};

class GdModel final : public DistributionModel {
 public:
  std::string_view name() const override { return "gd"; }
  std::span<const std::string_view> param_names() const override {
    static constexpr std::string_view names[] = {"shape", "rate"};
    return names;
  }
  double log_pdf(std::span<const double> q, double x) const override {
    if (!params_ok(q, 2)) return kNegInf;
    return guarded([&] { return gd_log_pdf(q[0], q[1], x); });
  }
  double cdf(std::span<const double> q, double x) const override {
    require(params_ok(q, 2));
    return gd_cdf(q[0], q[1], x);
  }
  std::vector<double> initial_guess(const Dataset& data) const override {
    const double m = data_mean(data);
    double ss = 0.0;
    for (double v : data.values()) ss += (v - m) * (v - m);
    const double var = ss / static_cast<double>(data.n());
    if (var <= 0.0) return {1.0, 1.0 / m};  // constant sample
    return {m * m / var, m / var};          // method of moments
  }
};

const GixgdModel kGixgd;
const IldModel kIld;
const IxgdModel kIxgd;
const IwdModel kIwd;
const IedModel kIed;
const GedModel kGed;
const GdModel kGd;

constexpr const DistributionModel* kRegistry[] = {
    &kGixgd, &kIld, &kIxgd, &kIwd, &kIed, &kGed, &kGd,
};

}  // namespace

std::span<const DistributionModel* const> model_registry() {
  return kRegistry;
}

const DistributionModel* find_model(std::string_view name) {
  for (const DistributionModel* m : kRegistry)
    if (m->name() == name) return m;
  return nullptr;
}

}  // namespace gixgd
