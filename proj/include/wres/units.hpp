#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wres/poly.hpp"

namespace wres {

namespace unit {
inline const std::string pi = "pi";
inline const std::string h1 = "h'(0)";
inline const std::string vol_boundary = "Vol_dM";
inline const std::string total_dim = "ltilde*2^q";
inline const std::string dx = "dx'";
std::string omega(int k);  // "Omega<k>", volume of the unit k-sphere
}  // namespace unit

// Exact coefficient times a multiset of opaque units.
class UnitValue {
 public:
  UnitValue() = default;
  UnitValue(GaussianRational coef, std::map<std::string, int> units);

  // Single-term polynomials only; every symbol is taken as a unit.
  static UnitValue from_poly(const ScalarPoly& p);
  ScalarPoly to_poly() const;

  const GaussianRational& coef() const { return coef_; }
  const std::map<std::string, int>& units() const { return units_; }
  bool is_zero() const { return coef_.is_zero(); }
  // Units in display order, repeated by multiplicity.
  std::vector<std::string> unit_list() const;

  // Numeric rendering; nullopt when a unit has no numeric value (e.g. ltilde*2^q).
  std::optional<std::complex<double>> numeric(
      const std::map<std::string, double>& extra = {}) const;

  std::string str() const;

  friend UnitValue operator+(const UnitValue& a, const UnitValue& b);
  friend UnitValue operator*(const UnitValue& a, const UnitValue& b);
  friend bool operator==(const UnitValue& a, const UnitValue& b);
  friend bool operator!=(const UnitValue& a, const UnitValue& b) { return !(a == b); }

 private:
  GaussianRational coef_;
  std::map<std::string, int> units_;
};

// Numeric value of a unit symbol where one exists.
std::optional<double> unit_numeric(const std::string& name);

// Rational r with  int_{S^{m-1}} x^alpha dsigma = r * Omega_{m-1}.
Rational sphere_moment_ratio(const std::vector<int>& alpha, int m);
UnitValue sphere_moment(const std::vector<int>& alpha, int m);
// Total measure of S^{m-1} as a polynomial in units: Omega_1 = 2 pi, S^0 = 2 points.
ScalarPoly sphere_measure(int m);
// Integrates every monomial of p over S^{m-1}, m = coords.size(), against
// the given measure polynomial (normally sphere_measure(m)).
ScalarPoly integrate_sphere(const ScalarPoly& p, const std::vector<std::string>& coords,
                            const ScalarPoly& measure);

}  // namespace wres
