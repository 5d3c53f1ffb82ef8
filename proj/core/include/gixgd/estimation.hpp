#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gixgd/dataio.hpp"
#include "gixgd/distribution.hpp"
#include "gixgd/models.hpp"

namespace gixgd {

// Sum of log densities. Invalid parameter vectors or overflow anywhere in
// the sum yield -inf (a sentinel the optimizer understands), never a throw.
// Throws std::domain_error only for empty data.
double log_likelihood(const DistributionModel& model,
                      std::span<const double> params, const Dataset& data);

struct GixgdScore {
  double d_alpha;
  double d_theta;
};

// Analytic partials of the log-likelihood; used as a stationarity check
// on fits, never for optimization.
GixgdScore gixgd_score(const GixgdParams& p, const Dataset& data);

struct FitConfig {
  int max_iterations = 4000;    // per simplex run
  double diameter_tol = 1e-8;   // L-inf simplex diameter in search space
  double value_tol = 1e-10;     // objective spread across vertices
  bool log_scale = true;        // optimize log-parameters (default)
  int polish_rounds = 2;        // extra simplex restarts at the incumbent
};

struct FitResult {
  std::string model_name;
  std::vector<double> params;
  double neg_log_likelihood = 0.0;
  bool converged = false;
  int n_iterations = 0;     // summed across all starts and polish rounds
  int n_restarts_used = 0;  // distinct starting points tried
};

// Maximum-likelihood fit by Nelder-Mead over log-transformed parameters
// with a deterministic multi-start (model guess, then x1/2 and x2 per
// coordinate). Deterministic: identical inputs give identical results.
// Non-convergence is reported via converged=false, never thrown.
FitResult mle_fit(const DistributionModel& model, const Dataset& data,
                  const FitConfig& config = {});

struct InfoCriteria {
  double aic;   // 2k + 2 nll
  double bic;   // k ln n + 2 nll
  double hqic;  // 2k ln(ln n) + 2 nll
  double aicc;  // AIC + 2k(k+1)/(n-k-1)
};

// Requires k >= 1 and n > k + 1 (the AICc pole).
InfoCriteria info_criteria(int k, int n, double neg_log_l);

// Two-sided Kolmogorov-Smirnov statistic over the sorted sample:
//   D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
// Ties are handled by the sort order. Throws std::domain_error if any
// F evaluation is non-finite.
double ks_statistic(const std::function<double(double)>& cdf,
                    const Dataset& data);
double ks_statistic(const DistributionModel& model,
                    std::span<const double> params, const Dataset& data);

struct SurvivalHazardEstimate {
  double s_hat;
  double h_hat;
};

// Plug-in (invariance) estimates: survival and hazard evaluated at the
// fitted parameters. Requires a converged "gixgd" fit.
SurvivalHazardEstimate plug_in_survival_hazard(const FitResult& fit,
                                               double y);

struct ComparisonRow {
  std::string model_name;
  std::vector<double> mle;
  double neg_log_l = 0.0;
  double aic = 0.0;
  double bic = 0.0;
  double hqic = 0.0;
  double aicc = 0.0;
  double ks = 0.0;
  bool converged = false;
  std::string note;  // nonempty when the fit failed or did not converge
};

// One row per requested model name (see model_registry for valid names),
// in the requested order. Per-model failures are recorded in the row and
// do not abort the table. Throws std::invalid_argument for unknown names.
std::vector<ComparisonRow> comparison_table(
    const Dataset& data, std::span<const std::string> models);

// All registry models, registry order.
std::vector<ComparisonRow> comparison_table(const Dataset& data);

struct BestModels {
  std::string aic;
  std::string bic;
  std::string hqic;
  std::string aicc;
  std::string ks;
};

// Name of the minimizing model per criterion, among converged rows.
// Ties break toward registry order.
BestModels best_models(std::span<const ComparisonRow> rows);

}  // namespace gixgd
