#pragma once

#include <functional>

namespace wres::quad {

// 1e-10 unless WRES_QUAD_TOL holds a positive number.
double default_tolerance();

struct Result {
  double value = 0;
  double error = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (15 point) with relative tolerance; a, b may be infinite.
Result integrate(const std::function<double(double)>& f, double a, double b, double tol = -1);

// Double-exponential rule for integrable endpoint singularities (tanh-sinh on
// a finite interval, exp-sinh when b is infinite).
Result integrate_singular(const std::function<double(double)>& f, double a, double b, double tol = -1);

// Repeats the integral with the 31-point rule (about twice the nodes per panel)
// and reports whether both agree within tolerance.
bool stable_under_refinement(const std::function<double(double)>& f, double a, double b,
                             double tol = -1);

}  // namespace wres::quad
