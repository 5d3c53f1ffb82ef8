#include "gixgd/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nelder_mead.hpp"

namespace gixgd {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

double log_likelihood(const DistributionModel& model,
                      std::span<const double> params, const Dataset& data) {
  if (data.n() == 0) throw std::domain_error("log_likelihood: empty data");
  double sum = 0.0;
  for (double y : data.values()) {
    const double l = model.log_pdf(params, y);
    if (!std::isfinite(l)) return kNegInf;
    sum += l;
  }
  return std::isfinite(sum) ? sum : kNegInf;
}

GixgdScore gixgd_score(const GixgdParams& p, const Dataset& data) {
  if (data.n() == 0) throw std::domain_error("gixgd_score: empty data");
  const double n = static_cast<double>(data.n());
  double d_alpha = n / p.alpha;
  double d_theta = 2.0 * n / p.theta - n / (p.theta + 1.0);
  for (double y : data.values()) {
    const double ly = std::log(y);
    const double u = std::exp(-p.alpha * ly);         // y^{-alpha}
    const double u2 = u * u;                          // y^{-2 alpha}
    const double mix = 1.0 + 0.5 * p.theta * u2;
    d_alpha += -ly - p.theta * u2 * ly / mix + p.theta * u * ly;
    d_theta += 0.5 * u2 / mix - u;
  }
  return {d_alpha, d_theta};
}

namespace {

struct SearchSpace {
  // raw <-> search coordinates; log scale keeps every proposal positive
  bool log_scale;

  std::vector<double> to_search(const std::vector<double>& raw) const {
    std::vector<double> x = raw;
    if (log_scale)
      for (double& v : x) v = std::log(v);
    return x;
  }
  std::vector<double> to_raw(const std::vector<double>& x) const {
    std::vector<double> raw = x;
    if (log_scale)
      for (double& v : raw) v = std::exp(v);
    return raw;
  }
};

}  // namespace

FitResult mle_fit(const DistributionModel& model, const Dataset& data,
                  const FitConfig& config) {
  const SearchSpace space{config.log_scale};
  const auto objective = [&](const std::vector<double>& x) {
    const std::vector<double> raw = space.to_raw(x);
    for (double v : raw)
      if (!(v > 0.0) || !std::isfinite(v))
        return std::numeric_limits<double>::infinity();
    return -log_likelihood(model, raw, data);
  };

  const std::vector<double> guess = model.initial_guess(data);
  std::vector<std::vector<double>> starts = {guess};
  for (const double factor : {0.5, 2.0}) {
    std::vector<double> s = guess;
    for (double& v : s) v *= factor;
    starts.push_back(std::move(s));
  }

  FitResult best;
  best.model_name = std::string(model.name());
  best.neg_log_likelihood = std::numeric_limits<double>::infinity();
  int total_iterations = 0;

  for (const auto& start : starts) {
    const double step0 = config.log_scale ? 0.25 : 0.05;
    detail::SimplexResult run = detail::nelder_mead(
        objective, space.to_search(start), step0, config.diameter_tol,
        config.value_tol, config.max_iterations);
    total_iterations += run.iterations;
    // polish: fresh, smaller simplexes seeded at the incumbent shake off
    // premature collapse
    double step = step0;
    for (int round = 0; round < config.polish_rounds; ++round) {
      step *= 0.1;
      detail::SimplexResult again = detail::nelder_mead(
          objective, run.x, step, config.diameter_tol, config.value_tol,
          config.max_iterations);
      total_iterations += again.iterations;
      if (again.fx <= run.fx) run = again;
    }
    if (run.fx < best.neg_log_likelihood) {
      best.params = space.to_raw(run.x);
      best.neg_log_likelihood = run.fx;
      best.converged = run.converged;
    }
    ++best.n_restarts_used;
  }

  best.n_iterations = total_iterations;
  if (!std::isfinite(best.neg_log_likelihood)) {
    // nothing evaluable: report the plain guess, unconverged
    best.params = guess;
    best.neg_log_likelihood =
        -log_likelihood(model, guess, data);
    best.converged = false;
  }
  return best;
}

InfoCriteria info_criteria(int k, int n, double neg_log_l) {
  if (k < 1) throw std::domain_error("info_criteria: k must be >= 1");
  if (n <= k + 1)
    throw std::domain_error("info_criteria: need n > k + 1 for AICc");
  const double two_nll = 2.0 * neg_log_l;
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  const double aic = 2.0 * kd + two_nll;
  return {
      aic,
      kd * std::log(nd) + two_nll,
      2.0 * kd * std::log(std::log(nd)) + two_nll,
      aic + 2.0 * kd * (kd + 1.0) / (nd - kd - 1.0),
  };
}

double ks_statistic(const std::function<double(double)>& cdf,
                    const Dataset& data) {
  const auto& xs = data.sorted();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    if (!std::isfinite(f))
      throw std::domain_error("ks_statistic: CDF evaluated non-finite");
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    const double lo = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

double ks_statistic(const DistributionModel& model,
                    std::span<const double> params, const Dataset& data) {
  return ks_statistic(
      [&](double x) { return model.cdf(params, x); }, data);
}

SurvivalHazardEstimate plug_in_survival_hazard(const FitResult& fit,
                                               double y) {
  if (fit.model_name != "gixgd")
    throw std::invalid_argument(
        "plug_in_survival_hazard: needs a gixgd fit, got '" +
        fit.model_name + "'");
  if (!fit.converged)
    throw std::invalid_argument(
        "plug_in_survival_hazard: fit did not converge");
  const GixgdParams p(fit.params.at(0), fit.params.at(1));
  return {survival(p, y), hazard(p, y)};
}

std::vector<ComparisonRow> comparison_table(
    const Dataset& data, std::span<const std::string> models) {
  std::vector<ComparisonRow> rows;
  rows.reserve(models.size());
  for (const std::string& name : models) {
    const DistributionModel* model = find_model(name);
    if (model == nullptr)
      throw std::invalid_argument("comparison_table: unknown model '" +
                                  name + "'");
    ComparisonRow row;
    row.model_name = name;
    try {
      const FitResult fit = mle_fit(*model, data);
      row.mle = fit.params;
      row.neg_log_l = fit.neg_log_likelihood;
      row.converged = fit.converged;
      if (!fit.converged) row.note = "fit did not converge";
      const InfoCriteria ic =
          info_criteria(static_cast<int>(model->n_params()),
                        static_cast<int>(data.n()), fit.neg_log_likelihood);
      row.aic = ic.aic;
      row.bic = ic.bic;
      row.hqic = ic.hqic;
      row.aicc = ic.aicc;
      row.ks = ks_statistic(*model, fit.params, data);
    } catch (const std::exception& e) {
      row.converged = false;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ComparisonRow> comparison_table(const Dataset& data) {
  std::vector<std::string> names;
  for (const DistributionModel* m : model_registry())
    names.emplace_back(m->name());
  return comparison_table(data, names);
}

namespace {

std::size_t registry_index(const std::string& name) {
  const auto reg = model_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg[i]->name() == name) return i;
  return reg.size();
}

}  // namespace

BestModels best_models(std::span<const ComparisonRow> rows) {
  const auto pick = [&](auto field) -> std::string {
    const ComparisonRow* best = nullptr;
    for (const ComparisonRow& row : rows) {
      if (!row.converged) continue;
      if (best == nullptr || field(row) < field(*best) ||
          (field(row) == field(*best) &&
           registry_index(row.model_name) < registry_index(best->model_name)))
        best = &row;
    }
    return best ? best->model_name : "";
  };
  return {
      pick([](const ComparisonRow& r) { return r.aic; }),
      pick([](const ComparisonRow& r) { return r.bic; }),
      pick([](const ComparisonRow& r) { return r.hqic; }),
      pick([](const ComparisonRow& r) { return r.aicc; }),
      pick([](const ComparisonRow& r) { return r.ks; }),
  };
}

}  // namespace gixgd
