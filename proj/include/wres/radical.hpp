#pragma once

#include <map>
#include <string>

#include "wres/rational.hpp"

namespace wres {

// coef * prod_p p^{e_p} * pi^{pi_exp}, with 0 < e_p < 1 for every stored prime.
// Closed under products, quotients and rational powers of positive values,
// which covers Gamma(k/2 + 1), (2 pi)^{r} and their fractional powers.
class Radical {
 public:
  Radical() = default;
  Radical(Rational c);  // NOLINT(implicit)
  Radical(long c) : Radical(Rational(c)) {}  // NOLINT(implicit)

  static Radical pi_power(const Rational& e);
  // base^e for base > 0.
  static Radical power(const Rational& base, const Rational& e);
  // Gamma(k/2 + 1) for integer k >= 0.
  static Radical gamma_half(int k);

  bool is_zero() const { return sgn(coef_) == 0; }
  const Rational& coef() const { return coef_; }
  const Rational& pi_exponent() const { return pi_exp_; }
  const std::map<long, Rational>& roots() const { return roots_; }

  // Requires a positive value unless e is an integer.
  Radical pow(const Rational& e) const;
  double value() const;
  std::string str() const;

  friend Radical operator*(const Radical& a, const Radical& b);
  friend Radical operator/(const Radical& a, const Radical& b);
  friend Radical operator-(const Radical& a);
  friend bool operator==(const Radical& a, const Radical& b);

 private:
  void canonicalize();

  Rational coef_{0};
  Rational pi_exp_{0};
  std::map<long, Rational> roots_;
};

}  // namespace wres
