#include "wres/radical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wres {

namespace {

// Trial division; the integers met here are small factorials and powers.
std::map<long, long> factor(mpz_class n) {
  std::map<long, long> f;
  if (n < 0) n = -n;
  for (long p = 2; n > 1; ++p) {
    if (mpz_class(p) * p > n) {
      if (!n.fits_slong_p()) throw std::overflow_error("radical base too large to factor");
      f[n.get_si()] += 1;
      break;
    }
    while (n % p == 0) {
      f[p] += 1;
      n /= p;
    }
  }
  return f;
}

Rational floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

Radical::Radical(Rational c) : coef_(std::move(c)) { coef_.canonicalize(); }

Radical Radical::pi_power(const Rational& e) {
  Radical r(1);
  r.pi_exp_ = e;
  return r;
}

Radical Radical::power(const Rational& base, const Rational& e) {
  if (sgn(base) <= 0) throw std::domain_error("radical power of a nonpositive base");
  return Radical(base).pow(e);
}

Radical Radical::gamma_half(int k) {
  if (k < 0) throw std::domain_error("gamma_half needs k >= 0");
  if (k % 2 == 0) {
    Rational f(1);
    for (int j = 2; j <= k / 2; ++j) f *= j;
    return Radical(f);
  }
  // Gamma(k/2 + 1) = (k!! / 2^{(k+1)/2}) sqrt(pi)
  Rational f(1);
  for (int j = k; j > 1; j -= 2) f *= j;
  f /= Rational(mpz_class(1) << ((k + 1) / 2));
  return Radical(f) * pi_power(Rational(1, 2));
}

void Radical::canonicalize() {
  coef_.canonicalize();
  pi_exp_.canonicalize();
  if (sgn(coef_) == 0) {
    pi_exp_ = 0;
    roots_.clear();
    return;
  }
  for (auto it = roots_.begin(); it != roots_.end();) {
    it->second.canonicalize();
    Rational whole = floor_q(it->second);
    if (sgn(whole) != 0) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), mpz_class(it->first).get_mpz_t(), std::abs(whole.get_num().get_si()));
      if (sgn(whole) > 0) coef_ *= Rational(pk);
      else coef_ /= Rational(pk);
      it->second -= whole;
    }
    if (sgn(it->second) == 0) it = roots_.erase(it);
    else ++it;
  }
}

Radical Radical::pow(const Rational& e) const {
  if (is_zero()) {
    if (sgn(e) <= 0) throw std::domain_error("zero to a nonpositive power");
    return {};
  }
  Radical r;
  r.pi_exp_ = pi_exp_ * e;
  for (const auto& [p, x] : roots_) r.roots_[p] = x * e;
  if (is_integer(e)) {
    r.coef_ = rat_pow(coef_, static_cast<int>(e.get_num().get_si()));
  } else {
    if (sgn(coef_) < 0) throw std::domain_error("fractional power of a negative value");
    r.coef_ = 1;
    for (const auto& [p, k] : factor(coef_.get_num())) r.roots_[p] += Rational(k) * e;
    for (const auto& [p, k] : factor(coef_.get_den())) r.roots_[p] -= Rational(k) * e;
  }
  r.canonicalize();
  return r;
}

double Radical::value() const {
  double v = coef_.get_d() * std::pow(std::numbers::pi, pi_exp_.get_d());
  for (const auto& [p, e] : roots_) v *= std::pow(static_cast<double>(p), e.get_d());
  return v;
}

std::string Radical::str() const {
  std::ostringstream os;
  os << rat_str(coef_);
  for (const auto& [p, e] : roots_) os << "*" << p << "^(" << rat_str(e) << ")";
  if (sgn(pi_exp_) != 0 && !is_zero()) {
    if (is_integer(pi_exp_)) os << "*pi^" << rat_str(pi_exp_);
    else os << "*pi^(" << rat_str(pi_exp_) << ")";
  }
  return os.str();
}

Radical operator*(const Radical& a, const Radical& b) {
  Radical r;
  r.coef_ = a.coef_ * b.coef_;
  r.pi_exp_ = a.pi_exp_ + b.pi_exp_;
  r.roots_ = a.roots_;
  for (const auto& [p, e] : b.roots_) r.roots_[p] += e;
  r.canonicalize();
  return r;
}

Radical operator/(const Radical& a, const Radical& b) {
  if (b.is_zero()) throw std::domain_error("radical division by zero");
  return a * b.pow(Rational(-1));
}

Radical operator-(const Radical& a) {
  Radical r = a;
  r.coef_ = -r.coef_;
  return r;
}

bool operator==(const Radical& a, const Radical& b) {
  return a.coef_ == b.coef_ && a.pi_exp_ == b.pi_exp_ && a.roots_ == b.roots_;
}

}  // namespace wres
