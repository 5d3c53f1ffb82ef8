#pragma once

#include <functional>

namespace gixgd::detail {

// Adaptive Simpson on [a, b] to absolute tolerance tol. The integrand must
// be finite everywhere on [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol);

}  // namespace gixgd::detail
