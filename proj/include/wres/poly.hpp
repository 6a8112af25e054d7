#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wres/rational.hpp"

namespace wres {

// Product of named symbols with positive exponents, kept sorted by name.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& name, int power = 1);

  const std::vector<std::pair<std::string, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree_of(const std::string& name) const;
  int total_degree() const;
  Monomial without(const std::string& name) const;
  Monomial with_power(const std::string& name, int power) const;
  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

 private:
  std::vector<std::pair<std::string, int>> f_;
};

// Sparse polynomial over the Gaussian rationals in named formal symbols.
class ScalarPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  ScalarPoly() = default;
  ScalarPoly(const GaussianRational& c);  // NOLINT(implicit)
  ScalarPoly(long c) : ScalarPoly(GaussianRational(c)) {}  // NOLINT(implicit)
  ScalarPoly(const Rational& c) : ScalarPoly(GaussianRational(c)) {}  // NOLINT(implicit)

  static ScalarPoly var(const std::string& name, int power = 1);
  static ScalarPoly term(const GaussianRational& c, const Monomial& m);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  std::optional<GaussianRational> as_constant() const;
  GaussianRational constant_term() const;
  std::set<std::string> symbols() const;
  int degree_of(const std::string& name) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  ScalarPoly& operator*=(const ScalarPoly& o);
  ScalarPoly& operator*=(const GaussianRational& c);
  ScalarPoly& operator*=(long c) { return *this *= GaussianRational(c); }
  void add_term(const Monomial& m, const GaussianRational& c);

  ScalarPoly scaled(const GaussianRational& c) const;
  ScalarPoly pow(unsigned e) const;
  ScalarPoly diff(const std::string& name) const;
  ScalarPoly substitute(const std::string& name, const ScalarPoly& value) const;
  ScalarPoly substitute(const std::map<std::string, ScalarPoly>& values) const;
  // Applies a linear map defined on monomials.
  ScalarPoly map_monomials(
      const std::function<ScalarPoly(const Monomial&)>& fn) const;

  std::complex<double> eval(
      const std::function<std::complex<double>(const std::string&)>& value) const;
  GaussianRational eval_exact(const std::map<std::string, GaussianRational>& values) const;

  std::string str() const;

  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

 private:
  Terms t_;
};

ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b);
ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b);
ScalarPoly operator-(const ScalarPoly& a);
ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);

// Eliminates eliminate^2 using sum(coords^2) = 1 until its degree is < 2.
ScalarPoly reduce_unit_constraint(const ScalarPoly& p, const std::vector<std::string>& coords,
                                  const std::string& eliminate);

}  // namespace wres
