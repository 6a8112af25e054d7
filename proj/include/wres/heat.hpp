#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/radical.hpp"

namespace wres {

// Pointwise curvature invariants, constant over the manifold (or already
// averaged), together with the volumes they are integrated against.
// Values are exact rationals or named symbols. Sign conventions: r > 0 on
// the round sphere, L_ab = <nabla_{e_a} e_b, N> for the inward normal N.
struct CurvatureData {
  // interior
  ScalarPoly r;       // scalar curvature r_M
  ScalarPoly lap_r;   // r_{;kk}
  ScalarPoly r2;      // r^2
  ScalarPoly ric2;    // R_ijik R_ljlk
  ScalarPoly riem2;   // R_ijkl R_ijkl
  ScalarPoly rperp2;  // ||R^{F perp}||^2
  // boundary
  ScalarPoly L;           // L_aa
  ScalarPoly LL;          // L_ab L_ab
  ScalarPoly L_L;         // L_aa L_bb
  ScalarPoly L3_trace;    // L_aa L_bb L_cc
  ScalarPoly L3_mixed;    // L_ab L_ab L_cc
  ScalarPoly L3_cyclic;   // L_ab L_bc L_ac
  ScalarPoly RaNaN;       // R_aNaN
  ScalarPoly RaNaN_L;     // R_aNaN L_bb
  ScalarPoly RaNbN_L;     // R_aNbN L_ab
  ScalarPoly Rabcb_L;     // R_abcb L_ac
  ScalarPoly r_N;         // r_{;N}
  ScalarPoly r_L;         // r L_aa
  ScalarPoly L_aabb;      // L_{aa;bb}
  ScalarPoly vol{1};
  ScalarPoly vol_boundary;

  bool has_boundary() const;
  // Every field replaced by a symbol of its own name, except r -> "r_M",
  // vol -> "Vol" and vol_boundary -> "Vol_dM".
  static CurvatureData symbolic();
  // Field names in declaration order (also the flat config keys).
  static const std::vector<std::string>& field_names();
  ScalarPoly* field(const std::string& name);
  const ScalarPoly* field(const std::string& name) const;
};

// Placeholder <R^{F perp}(X, Y) h_t, h_s>, antisymmetric in (X, Y) and in (t, s).
// X, Y run over the frame f_1..f_p, h_1..h_q; t, s over 1..q.
ScalarPoly rperp(const Generator& x, const Generator& y, int t, int s);
// Placeholder R^M_{ijkl}, antisymmetric in (i, j) and in (k, l).
ScalarPoly riemann(const Generator& i, const Generator& j, const Generator& k, const Generator& l);

inline const std::string r_symbol = "r_M";

// E with -E = r_M/4 + I1 + I2 + I3 (curvature endomorphism of D_F^2).
CliffordElement lichnerowicz_E(const AlgebraSignature& sig);
// ||R^{F perp}||^2 from the placeholders, summed over ordered index tuples.
ScalarPoly rperp_norm2(const AlgebraSignature& sig);
// sum_{ij} Omega_ij Omega_ij for the twisted connection, with R^M placeholders.
CliffordElement omega_square(const AlgebraSignature& sig);
ScalarPoly riemann_norm2(const AlgebraSignature& sig);

// Rational constants of the heat coefficients, derived from the traces of
// E, E^2 and Omega^2 (each divided by totalDim). The general coefficients use
// R_ijij = -r, as in the standard heat-invariant normalization.
struct HeatConstants {
  Rational trE;      // tr E = trE * totalDim * r
  Rational trE2;     // tr E^2 = trE2 * totalDim * (r^2 + ||R^perp||^2)
  Rational trOmega2; // tr Omega^2 = trOmega2 * totalDim * (|R|^2 + ||R^perp||^2)
  // a2 interior: r; a4 interior: r^2, Ric^2, |R|^2, ||R^perp||^2, r_{;kk}
  Rational a2_r;
  Rational a4_r2, a4_ric2, a4_riem2, a4_rperp2, a4_lap_r;
  // boundary: a2 L_aa, a3 r, a4 r_{;N}, a4 r L_aa
  Rational a2_L, a3_r, a4_rN, a4_rL;
};

HeatConstants derive_heat_constants(const AlgebraSignature& sig);

// factor * bracket; factor carries the powers of 4 pi.
struct HeatTerm {
  Radical factor;
  ScalarPoly bracket;

  bool is_zero() const { return factor.is_zero() || bracket.is_zero(); }
  // Needs every symbol of the bracket in `values` (pi is known).
  std::optional<double> numeric(const std::map<std::string, double>& values = {}) const;
  std::string str() const;
};

struct HeatCoeffs {
  std::array<HeatTerm, 5> a;
};

// Closed manifold: a1 = a3 = 0, divergence terms dropped.
HeatCoeffs interior_coeffs(const AlgebraSignature& sig, const CurvatureData& d);

// Printed: the r_{;N} coefficient -51 as in the simplified Dirichlet a4.
// Derived: coefficients from the general Dirichlet formula (r_{;N} 12) plus
// the interior divergence term -3 r_{;kk} kept as an input.
enum class BoundaryReading { Printed, Derived };

HeatCoeffs boundary_coeffs(const AlgebraSignature& sig, const CurvatureData& d,
                           BoundaryReading reading = BoundaryReading::Derived);

struct VConstant {
  Radical value;
  bool parity_zero = false;
  bool k_outside_range = false;
};

// v_{n,k}; mixed parity gives 0 with parity_zero set.
VConstant v_nk(int n, int k);

struct LowerVolume {
  HeatTerm value;
  bool parity_zero = false;
  bool k_outside_range = false;
};

// v_{n,k} * a_{n-k} on a closed manifold of dimension n = p + q.
LowerVolume lower_volume(const AlgebraSignature& sig, int n, int k, const CurvatureData& d);

// c0 with Wres(D_F^{-n+2}) = c0 * int r_M; n even, n >= 4.
HeatTerm wres_power(const AlgebraSignature& sig, int n);

// Cutoff F^(s) on [0, inf); breakpoints mark kinks or jumps for the quadrature.
struct Cutoff {
  std::function<double(double)> f;
  std::vector<double> breakpoints;
  // Support ends here; infinity when the tail extends.
  double support_end = INFINITY;

  // Linear interpolation of samples, zero past the last abscissa.
  static Cutoff tabulated(std::vector<double> s, std::vector<double> v);
};

struct Moments {
  std::array<double, 5> F{};  // F_0 .. F_4
  bool converged = true;
};

// F_k = Gamma(k/2)^{-1} int_0^inf F^(s) s^{k/2-1} ds, F_0 = F^(0).
Moments spectral_moments(const Cutoff& c);

}  // namespace wres
