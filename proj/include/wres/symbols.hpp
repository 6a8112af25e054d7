#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/rational_xi.hpp"

namespace wres {

// Clifford-valued rational function of xi_n at the boundary point x0.
using SymbolExpr = CliffordSum<RationalXi>;

// Orthonormal frame vector: f_i (leaf) or h_s (normal to the leaves).
struct FrameVec {
  bool leaf = true;
  int index = 1;

  std::string str() const;
  friend bool operator<(const FrameVec& a, const FrameVec& b) {
    return a.leaf != b.leaf ? a.leaf : a.index < b.index;
  }
  friend bool operator==(const FrameVec& a, const FrameVec& b) {
    return a.leaf == b.leaf && a.index == b.index;
  }
};

inline FrameVec fvec(int i) { return {true, i}; }
inline FrameVec hvec(int s) { return {false, s}; }

// Placeholder for omega_{A,B}(X) = <nabla_X B, A>. Antisymmetric in A, B; the
// symbol is named after the ordered pair, e.g. "w(f1,h2;f1)".
ScalarPoly omega(const FrameVec& a, const FrameVec& b, const FrameVec& x);

// Collar metric g = g_dM / h(x_n) + dx_n^2 near x0 with dx_n = h_q^*.
// The cotangent vector on the cosphere is
//   xi' = sum_j a_j f_j^* + sum_{u<q} b_u h_u^*,  sum a^2 + sum b^2 = 1.
struct BoundaryModel {
  int n = 4;
  AlgebraSignature sig;
  Rational gamma_n{5, 2};  // Gamma^n(x0) / h'(0)

  static BoundaryModel make(int n, const AlgebraSignature& sig);

  std::vector<FrameVec> frame() const;           // f_1..f_p, h_1..h_q
  std::vector<FrameVec> boundary_frame() const;  // without h_q
  FrameVec normal() const { return hvec(sig.q); }
  Generator clifford_of(const FrameVec& v) const;
  // Cosphere coordinate of a boundary frame vector ("a1", "b2"), or the
  // string "xi_n" for the normal.
  std::string coord_of(const FrameVec& v) const;
  std::vector<std::string> sphere_coords() const;
  // Imposes sum_C omega_{B,C}(e_C) = 0 for every B (normal coordinates on dM).
  ScalarPoly normal_coordinate_reduce(const ScalarPoly& p) const;
};

// Value at x0 plus the first x_n-derivative when the formulas supply it.
struct SymbolJet {
  SymbolExpr value;
  std::optional<SymbolExpr> dxn;
};

SymbolJet operator+(const SymbolJet& a, const SymbolJet& b);
SymbolJet operator-(const SymbolJet& a, const SymbolJet& b);
SymbolJet operator*(const SymbolJet& a, const SymbolJet& b);
SymbolJet scale(const SymbolJet& a, const RationalXi& s);

SymbolExpr to_symbol(const CliffordElement& x);

// Building blocks on |xi'| = 1.
SymbolJet clifford_xi(const BoundaryModel& m);        // c(xi)
SymbolJet clifford_xi_prime(const BoundaryModel& m);  // c(xi')
SymbolJet inv_norm_jet(const BoundaryModel& m, int k);  // |xi|^{-2k}

// Zeroth-order symbol p0 of the sub-Dirac operator with omega placeholders.
CliffordElement sigma0_DF(const BoundaryModel& m);

SymbolJet sigma_minus1_Dinv(const BoundaryModel& m);
// Includes the p0 term; the x_n-derivative is not available.
SymbolJet sigma_minus2_Dinv(const BoundaryModel& m);
SymbolJet sigma_minus2_Dsq(const BoundaryModel& m);
// A1 + A2 with Gamma^n(x0) = gamma_n h'(0), Gamma^k(x0) = 0 for k < n.
SymbolJet sigma_minus3_Dsq(const BoundaryModel& m);

// sigma_{order}(D^{-power}); power 1 supports orders -1, -2 and power 2 orders -2, -3.
SymbolJet symbol_of(const BoundaryModel& m, int power, int order);

enum class Deriv { Xi, Xn, XTangential };

// Derivatives at x0. XTangential is zero (normal coordinates on dM); Xn needs
// the jet to carry it and yields a jet without further x_n-derivative.
SymbolJet derive(const SymbolJet& s, Deriv which, int order = 1);
SymbolExpr derive_xi(const SymbolExpr& s, int order = 1);
SymbolExpr pi_plus(const SymbolExpr& s);

}  // namespace wres
