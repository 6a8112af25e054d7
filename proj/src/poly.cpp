#include "wres/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wres {

Monomial::Monomial(const std::string& name, int power) {
  if (power < 0) throw std::invalid_argument("negative exponent on " + name);
  if (power > 0) f_.emplace_back(name, power);
}

int Monomial::degree_of(const std::string& name) const {
  for (const auto& [n, e] : f_)
    if (n == name) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& fe : f_) d += fe.second;
  return d;
}

Monomial Monomial::without(const std::string& name) const { return with_power(name, 0); }

Monomial Monomial::with_power(const std::string& name, int power) const {
  Monomial m;
  bool placed = false;
  for (const auto& fe : f_) {
    if (!placed && name < fe.first) {
      if (power > 0) m.f_.emplace_back(name, power);
      placed = true;
    }
    if (fe.first == name) {
      if (power > 0) m.f_.emplace_back(name, power);
      placed = true;
      continue;
    }
    m.f_.push_back(fe);
  }
  if (!placed && power > 0) m.f_.emplace_back(name, power);
  return m;
}

std::string Monomial::str() const {
  std::string s;
  for (const auto& [n, e] : f_) {
    if (!s.empty()) s += "*";
    s += n;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.f_.begin(), j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->first == j->first) {
      m.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      m.f_.push_back(*i++);
    } else {
      m.f_.push_back(*j++);
    }
  }
  m.f_.insert(m.f_.end(), i, a.f_.end());
  m.f_.insert(m.f_.end(), j, b.f_.end());
  return m;
}

ScalarPoly::ScalarPoly(const GaussianRational& c) {
  if (!c.is_zero()) t_.emplace(Monomial(), c);
}

ScalarPoly ScalarPoly::var(const std::string& name, int power) {
  return term(GaussianRational(1), Monomial(name, power));
}

ScalarPoly ScalarPoly::term(const GaussianRational& c, const Monomial& m) {
  ScalarPoly p;
  p.add_term(m, c);
  return p;
}

std::optional<GaussianRational> ScalarPoly::as_constant() const {
  if (t_.empty()) return GaussianRational(0);
  if (t_.size() == 1 && t_.begin()->first.is_one()) return t_.begin()->second;
  return std::nullopt;
}

GaussianRational ScalarPoly::constant_term() const {
  auto it = t_.find(Monomial());
  return it == t_.end() ? GaussianRational(0) : it->second;
}

std::set<std::string> ScalarPoly::symbols() const {
  std::set<std::string> s;
  for (const auto& [m, c] : t_)
    for (const auto& fe : m.factors()) s.insert(fe.first);
  return s;
}

int ScalarPoly::degree_of(const std::string& name) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree_of(name));
  return d;
}

void ScalarPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(const ScalarPoly& o) {
  *this = *this * o;
  return *this;
}

ScalarPoly& ScalarPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

ScalarPoly ScalarPoly::scaled(const GaussianRational& c) const {
  ScalarPoly r = *this;
  r *= c;
  return r;
}

ScalarPoly ScalarPoly::pow(unsigned e) const {
  ScalarPoly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

ScalarPoly ScalarPoly::diff(const std::string& name) const {
  ScalarPoly r;
  for (const auto& [m, c] : t_) {
    int d = m.degree_of(name);
    if (d == 0) continue;
    r.add_term(m.with_power(name, d - 1), c * GaussianRational(d));
  }
  return r;
}

ScalarPoly ScalarPoly::substitute(const std::string& name, const ScalarPoly& value) const {
  return substitute(std::map<std::string, ScalarPoly>{{name, value}});
}

ScalarPoly ScalarPoly::substitute(const std::map<std::string, ScalarPoly>& values) const {
  return map_monomials([&](const Monomial& m) {
    Monomial rest;
    ScalarPoly factor(1);
    for (const auto& [n, e] : m.factors()) {
      auto it = values.find(n);
      if (it == values.end()) {
        rest = rest * Monomial(n, e);
      } else {
        factor = factor * it->second.pow(static_cast<unsigned>(e));
      }
    }
    return factor * term(GaussianRational(1), rest);
  });
}

ScalarPoly ScalarPoly::map_monomials(const std::function<ScalarPoly(const Monomial&)>& fn) const {
  ScalarPoly r;
  for (const auto& [m, c] : t_) r += fn(m).scaled(c);
  return r;
}

std::complex<double> ScalarPoly::eval(
    const std::function<std::complex<double>(const std::string&)>& value) const {
  std::complex<double> s = 0;
  for (const auto& [m, c] : t_) {
    std::complex<double> v = c.to_complex();
    for (const auto& [n, e] : m.factors()) {
      std::complex<double> x = value(n);
      for (int k = 0; k < e; ++k) v *= x;
    }
    s += v;
  }
  return s;
}

GaussianRational ScalarPoly::eval_exact(const std::map<std::string, GaussianRational>& values) const {
  GaussianRational s;
  for (const auto& [m, c] : t_) {
    GaussianRational v = c;
    for (const auto& [n, e] : m.factors()) {
      auto it = values.find(n);
      if (it == values.end()) throw std::invalid_argument("no value for symbol " + n);
      v *= gpow(it->second, e);
    }
    s += v;
  }
  return s;
}

std::string ScalarPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c.str();
    } else if (c == GaussianRational(1)) {
      os << m.str();
    } else {
      os << "(" << c.str() << ")*" << m.str();
    }
  }
  return os.str();
}

bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto i = a.t_.begin();
  for (auto j = b.t_.begin(); j != b.t_.end(); ++i, ++j)
    if (!(i->first == j->first) || i->second != j->second) return false;
  return true;
}

ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
ScalarPoly operator-(const ScalarPoly& a) { return a.scaled(GaussianRational(-1)); }

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

ScalarPoly reduce_unit_constraint(const ScalarPoly& p, const std::vector<std::string>& coords,
                                  const std::string& eliminate) {
  if (std::find(coords.begin(), coords.end(), eliminate) == coords.end())
    throw std::invalid_argument("eliminated symbol is not a sphere coordinate");
  ScalarPoly rest(1);
  for (const auto& c : coords)
    if (c != eliminate) rest -= ScalarPoly::var(c, 2);
  ScalarPoly cur = p;
  for (;;) {
    ScalarPoly next;
    bool changed = false;
    for (const auto& [m, c] : cur.terms()) {
      int d = m.degree_of(eliminate);
      if (d < 2) {
        next.add_term(m, c);
        continue;
      }
      changed = true;
      next += ScalarPoly::term(c, m.with_power(eliminate, d % 2)) * rest.pow(d / 2);
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

}  // namespace wres
