#pragma once

#include <array>
#include <map>
#include <string>

#include "wres/heat.hpp"
#include "wres/warp_expr.hpp"

namespace wres {

// Contractions of the 3-dimensional base. constant(c): r = 6c,
// R_ijik R_ljlk = |R|^2 = ||R^perp||^2 = 12 c^2.
struct BaseCurvature {
  double c = 0;
  double r = 0;
  double ric2 = 0;
  double riem2 = 0;
  double rperp2 = 0;

  static BaseCurvature constant(double c);
};

// I x_f M with metric dt^2 + f(t)^2 g, dim M = 3.
struct RWModel {
  double a = 0;
  double b = 1;
  WarpFunction f = WarpFunction::parse("1");
  BaseCurvature base;
  double base_vol = 1;

  void validate() const;
};

// Sectional curvatures of the Riemannian warped metric with
// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]: planes containing d_t and planes
// tangent to the slice. For these R(d_t, X) d_t = (f''/f) X and
// R(X, Y) Z = R^M(X, Y) Z - (f'/f)^2 (<Y,Z> X - <X,Z> Y).
struct FrameCurvature {
  double radial = 0;  // -f''/f
  double slice = 0;   // (c - f'^2) / f^2

  double scalar() const { return 6 * radial + 6 * slice; }
  double ricci2() const;
  double riemann2() const { return 12 * radial * radial + 12 * slice * slice; }
};

FrameCurvature frame_curvature(const RWModel& m, double t);

// <R(e_i, e_j) e_k, e_l> in the frame d_t, e_1..e_3.
using FrameTensor = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;
FrameTensor frame_tensor(const FrameCurvature& k);

// Same tensor from the coordinate metric dt^2 + f^2 (1 + c|x|^2/4)^{-2} dx^2 by
// fourth-order central differences of the metric and Christoffel symbols.
FrameTensor numeric_frame_tensor(const RWModel& m, double t, const std::array<double, 3>& x, double h = 1e-2);

// The listed warped-product contractions at t, with normal N = normal_sign * d_t
// (+1 at the lower end, -1 at the upper end; odd derivatives of f flip).
// Scalar curvature r_M/f^2 + 6(f''/f + (f'/f)^2) as listed; its t-derivatives
// give r_{;N} and r_{;kk} = r'' + 3 (f'/f) r'.
struct WarpedPoint {
  std::map<std::string, double> fields;  // keyed by CurvatureData::field_names()

  CurvatureData to_curvature_data() const;
  // Values keyed by the symbols of CurvatureData::symbolic(), volumes excluded.
  std::map<std::string, double> symbol_values() const;
};

WarpedPoint warped_geometry(const RWModel& m, double t, int normal_sign = 1);

struct RWTerm {
  Radical factor;
  double integral = 0;
  double error = 0;
  bool converged = true;

  double value() const { return factor.value() * integral; }
};

enum class RWReading {
  Printed,     // closed-form brackets as displayed for the warped product
  Simplified,  // simplified Dirichlet coefficients (r_{;N} weight -51) on the listed data
  General      // general Dirichlet coefficients (r_{;N} weight 12, r_{;kk} kept) on the listed data
};

std::string reading_name(RWReading r);

struct RWSpectral {
  std::map<RWReading, std::array<RWTerm, 5>> a;
  // |printed - simplified| / max(|printed|, |simplified|), per coefficient.
  std::array<double, 5> residual{};
};

// sig must have p + q = 4 and a numeric totalDim.
RWSpectral rw_spectral_coeffs(const RWModel& m, const AlgebraSignature& sig);

struct RWLowerVolumes {
  RWTerm vol_n_minus_3;    // v_{4,0} times the a4 bracket; v_{4,0} is outside 1 <= k <= n
  RWTerm vol_n_minus_1;    // v_{4,2} times the a2 bracket
  RWTerm vol_top_literal;  // int f^3 dvol, dvol = f^3 dt dvol_M
  RWTerm vol_top_density;  // f^3 read as the volume density itself
  bool k_outside_range = true;
};

// Closed S^1 x_f M with the circle parametrized by [a, b].
RWLowerVolumes rw_lower_volumes(const RWModel& m, const AlgebraSignature& sig);

}  // namespace wres
