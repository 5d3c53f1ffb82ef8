#pragma once

#include <functional>
#include <vector>

namespace gixgd::detail {

struct SimplexResult {
  std::vector<double> x;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Deterministic Nelder-Mead minimizer. The initial simplex is x0 plus
// `step` along each coordinate. Converged means simplex diameter
// (L-inf, relative to the best vertex) < diameter_tol AND the function
// spread across vertices < value_tol. Non-finite objective values are
// treated as +inf so the simplex retreats from invalid regions.
SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& x0, double step, double diameter_tol,
    double value_tol, int max_iterations);

}  // namespace gixgd::detail
