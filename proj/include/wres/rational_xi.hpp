#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wres/poly.hpp"

namespace wres {

// N(xi) / ((xi - i)^mp (xi + i)^mm) with ScalarPoly coefficients.
// Kept canonical: N shares no factor (xi -+ i) with the denominator.
// Improper values are representable so symbols can be assembled from
// pieces; pi_plus and integrate_line reject them.
class RationalXi {
 public:
  RationalXi() = default;
  RationalXi(const ScalarPoly& c);  // NOLINT(implicit)
  RationalXi(long c) : RationalXi(ScalarPoly(c)) {}  // NOLINT(implicit)

  static RationalXi make(std::vector<ScalarPoly> num, int mp, int mm);
  static RationalXi xi();
  // (1 + xi^2)^(-k)
  static RationalXi inv_norm(int k);

  const std::vector<ScalarPoly>& numerator() const { return num_; }
  int pole_plus() const { return mp_; }
  int pole_minus() const { return mm_; }
  bool is_zero() const { return num_.empty(); }
  // -1 for the zero polynomial.
  int num_degree() const { return static_cast<int>(num_.size()) - 1; }
  // mp + mm - deg N; infinite (large) for zero.
  int degree_gap() const;
  bool proper() const { return degree_gap() >= 1; }

  RationalXi& operator+=(const RationalXi& o);
  RationalXi& operator-=(const RationalXi& o);
  RationalXi& operator*=(const RationalXi& o);
  RationalXi scaled(const ScalarPoly& c) const;

  RationalXi derivative(int order = 1) const;
  RationalXi pi_plus() const;
  RationalXi pi_minus() const;
  // Integral over the real line as a polynomial multiple of the symbol "pi".
  ScalarPoly integrate_line() const;
  // Applies a linear map to every numerator coefficient.
  RationalXi map_coeffs(const std::function<ScalarPoly(const ScalarPoly&)>& fn) const;

  std::complex<double> eval(
      std::complex<double> x,
      const std::function<std::complex<double>(const std::string&)>& value) const;
  // Exact value at a point away from the poles, coefficients left symbolic.
  ScalarPoly eval_at(const GaussianRational& x) const;

  std::string str() const;

  friend bool operator==(const RationalXi& a, const RationalXi& b);

 private:
  void canonicalize();

  std::vector<ScalarPoly> num_;
  int mp_ = 0;
  int mm_ = 0;
};

RationalXi operator+(RationalXi a, const RationalXi& b);
RationalXi operator-(RationalXi a, const RationalXi& b);
RationalXi operator-(const RationalXi& a);
RationalXi operator*(RationalXi a, const RationalXi& b);

}  // namespace wres
