#pragma once

#include <functional>

// Test-side numerics, written independently of the library under test:
// a separate adaptive integrator and a naive density, used to check the
// closed forms against their defining integrals.
namespace oracle {

// Adaptive Simpson quadrature with an explicit work stack (absolute
// tolerance), structurally unrelated to the library's recursive version.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

// The density written straight from its formula with std::pow/std::exp.
// Only safe for moderate parameters (no overflow shielding).
double naive_pdf(double alpha, double theta, double y);

// E[w(Y)] over the full support by substituting y = e^u, which makes both
// tails decay at least exponentially. `growth` bounds w: |w(y)| <= y^growth
// for large y (use 0 for bounded weights); growth < alpha required.
// `y_lo` restricts the integral to (y_lo, inf) when positive.
double expectation(double alpha, double theta,
                   const std::function<double(double)>& weight, double growth,
                   double y_lo = 0.0);

}  // namespace oracle
