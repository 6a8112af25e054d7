#include "wres/rational.hpp"

#include <stdexcept>

namespace wres {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("malformed number '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    Rational num = parse_rational(a), den = parse_rational(b);
    if (sgn(den) == 0) throw std::domain_error("zero denominator in '" + s + "'");
    return num / den;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string ip, fp;
  bool dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      (dot ? fp : ip) += c;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      throw bad();
    }
  }
  if (ip.empty() && fp.empty()) throw bad();
  if (dot && fp.empty()) throw bad();
  mpz_class num(ip + fp, 10);
  mpz_class den = 1;
  for (std::size_t k = 0; k < fp.size(); ++k) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational rat_pow(const Rational& base, int e) {
  Rational b = base;
  if (e < 0) {
    if (sgn(b) == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    e = -e;
  }
  Rational r = 1;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Rational n = o.norm();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

GaussianRational gpow(const GaussianRational& z, int e) {
  GaussianRational b = z;
  if (e < 0) {
    b = GaussianRational(1) / b;
    e = -e;
  }
  GaussianRational r(1);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string GaussianRational::str() const {
  if (sgn(im) == 0) return rat_str(re);
  std::string i_part = rat_str(im) + "*i";
  if (im == 1) i_part = "i";
  if (im == -1) i_part = "-i";
  if (sgn(re) == 0) return i_part;
  return rat_str(re) + (sgn(im) > 0 ? "+" : "") + i_part;
}

}  // namespace wres
