#include "wres/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wres {

std::string unit::omega(int k) { return "Omega" + std::to_string(k); }

UnitValue::UnitValue(GaussianRational coef, std::map<std::string, int> units)
    : coef_(std::move(coef)), units_(std::move(units)) {
  if (coef_.is_zero()) units_.clear();
}

UnitValue UnitValue::from_poly(const ScalarPoly& p) {
  if (p.is_zero()) return {};
  if (p.size() != 1) throw std::invalid_argument("not a single-unit value: " + p.str());
  const auto& [m, c] = *p.terms().begin();
  std::map<std::string, int> u;
  for (const auto& [n, e] : m.factors()) u[n] = e;
  return {c, u};
}

ScalarPoly UnitValue::to_poly() const {
  Monomial m;
  for (const auto& [n, e] : units_) m = m * Monomial(n, e);
  return ScalarPoly::term(coef_, m);
}

namespace {
int unit_rank(const std::string& n) {
  if (n == unit::total_dim) return 0;
  if (n == unit::pi) return 1;
  if (n == unit::h1) return 2;
  if (n.rfind("Omega", 0) == 0) return 3;
  if (n == unit::vol_boundary) return 4;
  if (n == unit::dx) return 5;
  return 6;
}
}  // namespace

std::vector<std::string> UnitValue::unit_list() const {
  std::vector<std::pair<int, std::string>> keyed;
  for (const auto& [n, e] : units_)
    for (int k = 0; k < e; ++k) keyed.emplace_back(unit_rank(n), n);
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

std::optional<double> unit_numeric(const std::string& name) {
  const double pi = std::numbers::pi;
  if (name == unit::pi) return pi;
  if (name.rfind("Omega", 0) == 0) {
    int k = std::stoi(name.substr(5));
    return 2 * std::pow(pi, (k + 1) / 2.0) / std::tgamma((k + 1) / 2.0);
  }
  return std::nullopt;
}

std::optional<std::complex<double>> UnitValue::numeric(
    const std::map<std::string, double>& extra) const {
  std::complex<double> v = coef_.to_complex();
  for (const auto& [n, e] : units_) {
    std::optional<double> x;
    if (auto it = extra.find(n); it != extra.end()) x = it->second;
    else x = unit_numeric(n);
    if (!x) return std::nullopt;
    v *= std::pow(*x, e);
  }
  return v;
}

std::string UnitValue::str() const {
  std::ostringstream os;
  os << "(" << coef_.str() << ")";
  for (const auto& u : unit_list()) os << "*" << u;
  return os.str();
}

UnitValue operator+(const UnitValue& a, const UnitValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.units_ != b.units_)
    throw std::invalid_argument("adding values with different units: " + a.str() + " and " + b.str());
  return {a.coef_ + b.coef_, a.units_};
}

UnitValue operator*(const UnitValue& a, const UnitValue& b) {
  std::map<std::string, int> u = a.units_;
  for (const auto& [n, e] : b.units_) u[n] += e;
  return {a.coef_ * b.coef_, u};
}

bool operator==(const UnitValue& a, const UnitValue& b) {
  return a.coef_ == b.coef_ && a.units_ == b.units_;
}

Rational sphere_moment_ratio(const std::vector<int>& alpha, int m) {
  if (m < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  if (static_cast<int>(alpha.size()) > m) throw std::invalid_argument("more exponents than coordinates");
  // prod (a_i - 1)!! / prod_{j < |a|/2} (m + 2j)
  Rational r = 1;
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent");
    if (a % 2) return 0;
    for (int k = a - 1; k > 1; k -= 2) r *= k;
    total += a;
  }
  for (int j = 0; j < total / 2; ++j) r /= (m + 2 * j);
  return r;
}

ScalarPoly sphere_measure(int m) {
  if (m == 1) return ScalarPoly(2);
  if (m == 2) return ScalarPoly::var(unit::pi).scaled(GaussianRational(2));
  return ScalarPoly::var(unit::omega(m - 1));
}

UnitValue sphere_moment(const std::vector<int>& alpha, int m) {
  Rational r = sphere_moment_ratio(alpha, m);
  return UnitValue(GaussianRational(r), {{unit::omega(m - 1), 1}});
}

ScalarPoly integrate_sphere(const ScalarPoly& p, const std::vector<std::string>& coords,
                            const ScalarPoly& measure) {
  const int m = static_cast<int>(coords.size());
  ScalarPoly out = p.map_monomials([&](const Monomial& mono) {
    std::vector<int> alpha;
    Monomial rest = mono;
    for (const auto& c : coords) {
      alpha.push_back(mono.degree_of(c));
      rest = rest.without(c);
    }
    Rational r = sphere_moment_ratio(alpha, m);
    return ScalarPoly::term(GaussianRational(r), rest);
  });
  return out * measure;
}

}  // namespace wres
