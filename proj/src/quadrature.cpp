#include "wres/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace wres::quad {

double default_tolerance() {
  if (const char* env = std::getenv("WRES_QUAD_TOL")) {
    try {
      double v = std::stod(env);
      if (v > 0 && std::isfinite(v)) return v;
    } catch (...) {
    }
  }
  return 1e-10;
}

Result integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (tol <= 0) tol = default_tolerance();
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  Result r;
  double l1 = 0;
  r.value = GK::integrate(f, a, b, 18, tol, &r.error, &l1);
  double scale = std::max(std::abs(r.value), l1);
  r.converged = std::isfinite(r.value) &&
                (r.error <= tol * scale * 10 || r.error <= std::numeric_limits<double>::min() * 1e10);
  return r;
}

Result integrate_singular(const std::function<double(double)>& f, double a, double b, double tol) {
  if (tol <= 0) tol = default_tolerance();
  Result r;
  double l1 = 0;
  try {
    if (std::isinf(b)) {
      boost::math::quadrature::exp_sinh<double> rule;
      r.value = rule.integrate([&](double s) { return f(a + s); }, 0.0, INFINITY, tol, &r.error, &l1);
    } else {
      boost::math::quadrature::tanh_sinh<double> rule;
      r.value = rule.integrate(f, a, b, tol, &r.error, &l1);
    }
  } catch (const std::exception&) {
    r.value = NAN;
  }
  double scale = std::max(std::abs(r.value), l1);
  r.converged = std::isfinite(r.value) && r.error <= tol * scale * 10 + 1e-300;
  return r;
}

bool stable_under_refinement(const std::function<double(double)>& f, double a, double b,
                             double tol) {
  if (tol <= 0) tol = default_tolerance();
  Result fine = integrate(f, a, b, tol);
  using GK31 = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0, l1 = 0;
  double coarse = GK31::integrate(f, a, b, 18, tol, &err, &l1);
  double scale = std::max({std::abs(fine.value), l1, 1e-300});
  return std::abs(fine.value - coarse) <= std::max(tol * scale * 100, 1e-14);
}

}  // namespace wres::quad
