#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace wres {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "n" or "n/d", always canonical.
std::string rat_str(const Rational& q);

// Accepts "3", "-3/4", "0.125", "1e-3" is rejected. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

Rational rat_pow(const Rational& base, int e);

// Exact complex number re + im*i over the rationals.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT(implicit)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

GaussianRational gpow(const GaussianRational& z, int e);

}  // namespace wres
