#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gixgd::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sanitize(double v) { return std::isnan(v) ? kInf : v; }

}  // namespace

SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& x0, double step, double diameter_tol,
    double value_tol, int max_iterations) {
  const std::size_t n = x0.size();
  const auto eval = [&](const std::vector<double>& x) {
    return sanitize(objective(x));
  };

  std::vector<std::vector<double>> verts(n + 1, x0);
  for (std::size_t j = 0; j < n; ++j) verts[j + 1][j] += step;
  std::vector<double> fv(n + 1);
  for (std::size_t j = 0; j <= n; ++j) fv[j] = eval(verts[j]);

  // index sort keeps tie handling stable, hence deterministic
  std::vector<std::size_t> order(n + 1);
  const auto sort_order = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  };

  SimplexResult result;
  int it = 0;
  for (; it < max_iterations; ++it) {
    sort_order();
    const std::size_t best = order[0];
    const std::size_t worst = order[n];
    const std::size_t second_worst = order[n - 1];

    double diameter = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter =
            std::max(diameter, std::fabs(verts[j][k] - verts[best][k]));
      }
    }
    const double spread = fv[worst] - fv[best];
    if (diameter < diameter_tol && spread < value_tol &&
        std::isfinite(fv[best])) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += verts[j][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = centroid[k] + coef * (verts[worst][k] - centroid[k]);
      return x;
    };

    const std::vector<double> xr = blend(-1.0);  // reflection
    const double fr = eval(xr);
    if (fr < fv[order[0]]) {
      const std::vector<double> xe = blend(-2.0);  // expansion
      const double fe = eval(xe);
      if (fe < fr) {
        verts[worst] = xe;
        fv[worst] = fe;
      } else {
        verts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      verts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const std::vector<double> xc = blend(outside ? -0.5 : 0.5);
    const double fc = eval(xc);
    if (fc < std::min(fr, fv[worst])) {
      verts[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    // shrink toward the best vertex
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == best) continue;
      for (std::size_t k = 0; k < n; ++k)
        verts[j][k] = verts[best][k] + 0.5 * (verts[j][k] - verts[best][k]);
      fv[j] = eval(verts[j]);
    }
  }

  sort_order();
  result.x = verts[order[0]];
  result.fx = fv[order[0]];
  result.iterations = it;
  return result;
}

}  // namespace gixgd::detail
