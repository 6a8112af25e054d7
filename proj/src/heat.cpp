#include "wres/heat.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "wres/quadrature.hpp"
#include "wres/units.hpp"

namespace wres {

namespace {

struct FieldRef {
  const char* name;
  ScalarPoly CurvatureData::*member;
};

const std::vector<FieldRef>& field_table() {
  static const std::vector<FieldRef> t = {
      {"r", &CurvatureData::r},
      {"lap_r", &CurvatureData::lap_r},
      {"r2", &CurvatureData::r2},
      {"ric2", &CurvatureData::ric2},
      {"riem2", &CurvatureData::riem2},
      {"rperp2", &CurvatureData::rperp2},
      {"L", &CurvatureData::L},
      {"LL", &CurvatureData::LL},
      {"L_L", &CurvatureData::L_L},
      {"L3_trace", &CurvatureData::L3_trace},
      {"L3_mixed", &CurvatureData::L3_mixed},
      {"L3_cyclic", &CurvatureData::L3_cyclic},
      {"RaNaN", &CurvatureData::RaNaN},
      {"RaNaN_L", &CurvatureData::RaNaN_L},
      {"RaNbN_L", &CurvatureData::RaNbN_L},
      {"Rabcb_L", &CurvatureData::Rabcb_L},
      {"r_N", &CurvatureData::r_N},
      {"r_L", &CurvatureData::r_L},
      {"L_aabb", &CurvatureData::L_aabb},
      {"vol", &CurvatureData::vol},
      {"vol_boundary", &CurvatureData::vol_boundary},
  };
  return t;
}

std::string frame_name(const Generator& g) {
  switch (g.kind) {
    case GenKind::Cf: return "f" + std::to_string(g.index);
    case GenKind::Ch: return "h" + std::to_string(g.index);
    case GenKind::Hh: break;
  }
  throw std::invalid_argument("curvature placeholder needs a tangent frame vector");
}

std::vector<Generator> tangent_frame(const AlgebraSignature& sig) {
  std::vector<Generator> e;
  for (int i = 1; i <= sig.p; ++i) e.push_back(cf(i));
  for (int s = 1; s <= sig.q; ++s) e.push_back(ch(s));
  return e;
}

// Coefficient of a single monomial.
GaussianRational coef_of(const ScalarPoly& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? GaussianRational() : it->second;
}

Rational real_of(const GaussianRational& g, const char* what) {
  if (!g.is_real()) throw std::logic_error(std::string("non-real trace constant: ") + what);
  return g.re;
}

ScalarPoly scaled(const ScalarPoly& p, const Rational& c) { return p.scaled(GaussianRational(c)); }

Radical four_pi_power(const Rational& e) { return Radical::power(4, e) * Radical::pi_power(e); }

}  // namespace

bool CurvatureData::has_boundary() const {
  for (const auto& f : field_table()) {
    std::string n = f.name;
    if (n == "r" || n == "lap_r" || n == "r2" || n == "ric2" || n == "riem2" || n == "rperp2" || n == "vol")
      continue;
    if (!(this->*f.member).is_zero()) return true;
  }
  return false;
}

CurvatureData CurvatureData::symbolic() {
  CurvatureData d;
  for (const auto& f : field_table()) d.*f.member = ScalarPoly::var(f.name);
  d.r = ScalarPoly::var(r_symbol);
  d.vol = ScalarPoly::var("Vol");
  d.vol_boundary = ScalarPoly::var(unit::vol_boundary);
  return d;
}

const std::vector<std::string>& CurvatureData::field_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& f : field_table()) n.push_back(f.name);
    return n;
  }();
  return names;
}

ScalarPoly* CurvatureData::field(const std::string& name) {
  for (const auto& f : field_table())
    if (name == f.name) return &(this->*f.member);
  return nullptr;
}

const ScalarPoly* CurvatureData::field(const std::string& name) const {
  return const_cast<CurvatureData*>(this)->field(name);
}

ScalarPoly rperp(const Generator& x, const Generator& y, int t, int s) {
  if (x == y || t == s) return {};
  int sign = 1;
  Generator a = x, b = y;
  if (b < a) {
    std::swap(a, b);
    sign = -sign;
  }
  if (s < t) {
    std::swap(s, t);
    sign = -sign;
  }
  ScalarPoly v = ScalarPoly::var("Rperp(" + frame_name(a) + "," + frame_name(b) + ";h" + std::to_string(t) +
                                 ",h" + std::to_string(s) + ")");
  return sign > 0 ? v : -v;
}

ScalarPoly riemann(const Generator& i, const Generator& j, const Generator& k, const Generator& l) {
  if (i == j || k == l) return {};
  int sign = 1;
  Generator a = i, b = j, c = k, d = l;
  if (b < a) {
    std::swap(a, b);
    sign = -sign;
  }
  if (d < c) {
    std::swap(c, d);
    sign = -sign;
  }
  ScalarPoly v = ScalarPoly::var("Rm(" + frame_name(a) + "," + frame_name(b) + ";" + frame_name(c) + "," +
                                 frame_name(d) + ")");
  return sign > 0 ? v : -v;
}

CliffordElement lichnerowicz_E(const AlgebraSignature& sig) {
  const int p = sig.p, q = sig.q;
  CliffordElement minus_e(ScalarPoly::var(r_symbol).scaled(GaussianRational(Rational(1, 4))));
  const GaussianRational quarter(Rational(1, 4)), eighth(Rational(1, 8));
  for (int s = 1; s <= q; ++s)
    for (int t = 1; t <= q; ++t) {
      if (s == t) continue;
      for (int i = 1; i <= p; ++i)
        for (int r = 1; r <= q; ++r)
          minus_e += CliffordElement::word({cf(i), ch(r), hh(s), hh(t)}, rperp(cf(i), ch(r), t, s).scaled(quarter));
      for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
          if (i != j)
            minus_e += CliffordElement::word({cf(i), cf(j), hh(s), hh(t)}, rperp(cf(i), cf(j), t, s).scaled(eighth));
      for (int r = 1; r <= q; ++r)
        for (int l = 1; l <= q; ++l)
          if (r != l)
            minus_e += CliffordElement::word({ch(r), ch(l), hh(s), hh(t)}, rperp(ch(r), ch(l), t, s).scaled(eighth));
    }
  return -minus_e;
}

ScalarPoly rperp_norm2(const AlgebraSignature& sig) {
  ScalarPoly acc;
  const int p = sig.p, q = sig.q;
  for (int s = 1; s <= q; ++s)
    for (int t = 1; t <= q; ++t) {
      for (int i = 1; i <= p; ++i)
        for (int r = 1; r <= q; ++r) acc += (rperp(cf(i), ch(r), t, s) * rperp(cf(i), ch(r), t, s)).scaled(2);
      for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j) acc += rperp(cf(i), cf(j), t, s) * rperp(cf(i), cf(j), t, s);
      for (int r = 1; r <= q; ++r)
        for (int l = 1; l <= q; ++l) acc += rperp(ch(r), ch(l), t, s) * rperp(ch(r), ch(l), t, s);
    }
  return acc;
}

CliffordElement omega_square(const AlgebraSignature& sig) {
  const auto e = tangent_frame(sig);
  const GaussianRational mq(Rational(-1, 4));
  CliffordElement acc;
  for (const auto& ei : e)
    for (const auto& ej : e) {
      if (ei == ej) continue;
      CliffordElement om;
      for (const auto& ek : e)
        for (const auto& el : e)
          if (!(ek == el)) om += CliffordElement::word({ek, el}, riemann(ei, ej, ek, el).scaled(mq));
      for (int s = 1; s <= sig.q; ++s)
        for (int t = 1; t <= sig.q; ++t)
          if (s != t) om += CliffordElement::word({hh(s), hh(t)}, rperp(ei, ej, s, t).scaled(mq));
      acc += om * om;
    }
  return acc;
}

ScalarPoly riemann_norm2(const AlgebraSignature& sig) {
  const auto e = tangent_frame(sig);
  ScalarPoly acc;
  for (const auto& a : e)
    for (const auto& b : e)
      for (const auto& c : e)
        for (const auto& d : e) acc += riemann(a, b, c, d) * riemann(a, b, c, d);
  return acc;
}

HeatConstants derive_heat_constants(const AlgebraSignature& sig) {
  const ScalarPoly r = ScalarPoly::var(r_symbol);
  const CliffordElement E = lichnerowicz_E(sig);
  const ScalarPoly perp = rperp_norm2(sig);

  HeatConstants h;
  ScalarPoly tr1 = E.identity_coef();
  h.trE = real_of(coef_of(tr1, Monomial(r_symbol)), "tr E");
  if (tr1 != scaled(r, h.trE)) throw std::logic_error("tr E is not proportional to r_M");

  ScalarPoly tr2 = identity_coef_of_product(E, E);
  h.trE2 = real_of(coef_of(tr2, Monomial(r_symbol, 2)), "tr E^2");
  if (tr2 != scaled(r * r + perp, h.trE2)) throw std::logic_error("tr E^2 is not proportional to r^2 + |R^perp|^2");

  ScalarPoly tro = omega_square(sig).identity_coef();
  ScalarPoly riem = riemann_norm2(sig);
  const Monomial probe = riem.terms().begin()->first;
  h.trOmega2 = real_of(coef_of(tro, probe), "tr Omega^2") / real_of(coef_of(riem, probe), "|R|^2");
  if (tro != scaled(riem + perp, h.trOmega2))
    throw std::logic_error("tr Omega^2 is not proportional to |R|^2 + |R^perp|^2");

  // R_ijij = sigma r with sigma = -1.
  const Rational sigma(-1);
  h.a2_r = (1 + 6 * h.trE) / 6;
  h.a4_r2 = 5 - 60 * sigma * h.trE + 180 * h.trE2;
  h.a4_ric2 = -2;
  h.a4_riem2 = 2 + 30 * h.trOmega2;
  h.a4_rperp2 = 180 * h.trE2 + 30 * h.trOmega2;
  h.a4_lap_r = -12 * sigma + 60 * h.trE;
  h.a2_L = Rational(2, 6);
  h.a3_r = 96 * h.trE + 16;
  h.a4_rN = -120 * h.trE - 18;
  h.a4_rL = 120 * h.trE + 20;
  for (Rational* x : {&h.a2_r, &h.a4_r2, &h.a4_riem2, &h.a4_rperp2, &h.a4_lap_r, &h.a2_L, &h.a3_r, &h.a4_rN, &h.a4_rL})
    x->canonicalize();
  return h;
}

std::optional<double> HeatTerm::numeric(const std::map<std::string, double>& values) const {
  if (factor.is_zero()) return 0.0;
  bool missing = false;
  auto v = bracket.eval([&](const std::string& name) -> std::complex<double> {
    if (auto it = values.find(name); it != values.end()) return it->second;
    if (name == unit::pi) return std::numbers::pi;
    missing = true;
    return 0.0;
  });
  if (missing) return std::nullopt;
  return factor.value() * v.real();
}

std::string HeatTerm::str() const {
  if (is_zero()) return "0";
  return factor.str() + " * (" + bracket.str() + ")";
}

namespace {

// The constants are the same for every signature (tests check this); deriving
// them on a capped signature keeps large inputs cheap.
HeatConstants constants_for(const AlgebraSignature& sig) {
  return derive_heat_constants(AlgebraSignature::make(std::min(sig.p, 3), std::min(sig.q, 3)));
}

ScalarPoly interior_a4(const HeatConstants& h, const CurvatureData& d) {
  return scaled(d.r2, h.a4_r2) + scaled(d.ric2, h.a4_ric2) + scaled(d.riem2, h.a4_riem2) +
         scaled(d.rperp2, h.a4_rperp2);
}

}  // namespace

HeatCoeffs interior_coeffs(const AlgebraSignature& sig, const CurvatureData& d) {
  const HeatConstants h = constants_for(sig);
  const ScalarPoly T = sig.total_dim();
  const int m = sig.p + sig.q;
  const Radical f = four_pi_power(Rational(-m, 2));
  HeatCoeffs c;
  c.a[0] = {f, T * d.vol};
  c.a[1] = {Radical(), {}};
  c.a[2] = {f, T * scaled(d.r, h.a2_r) * d.vol};
  c.a[3] = {Radical(), {}};
  c.a[4] = {f * Radical(Rational(1, 360)), T * interior_a4(h, d) * d.vol};
  return c;
}

HeatCoeffs boundary_coeffs(const AlgebraSignature& sig, const CurvatureData& d, BoundaryReading reading) {
  const HeatConstants h = constants_for(sig);
  const ScalarPoly T = sig.total_dim();
  const int m = sig.p + sig.q;
  const Radical f = four_pi_power(Rational(-m, 2));
  const Radical g = four_pi_power(Rational(-(m - 1), 2));
  HeatCoeffs c;
  c.a[0] = {f, T * d.vol};
  c.a[1] = {g, scaled(T * d.vol_boundary, Rational(-1, 4))};
  c.a[2] = {f, T * (scaled(d.r, h.a2_r) * d.vol + scaled(d.L, h.a2_L) * d.vol_boundary)};
  ScalarPoly b3 = scaled(d.r, h.a3_r) + scaled(d.RaNaN, 8) + scaled(d.L_L, 7) + scaled(d.LL, -10);
  c.a[3] = {g, scaled(T * b3 * d.vol_boundary, Rational(-1, 384))};
  ScalarPoly interior = interior_a4(h, d);
  const Rational rN = reading == BoundaryReading::Printed ? Rational(-51) : h.a4_rN;
  if (reading == BoundaryReading::Derived) interior += scaled(d.lap_r, h.a4_lap_r);
  ScalarPoly b4 = scaled(d.r_N, rN) + scaled(d.r_L, h.a4_rL) + scaled(d.RaNaN_L, 4) + scaled(d.RaNbN_L, -12) +
                  scaled(d.Rabcb_L, 4) + scaled(d.L_aabb, 24) + scaled(d.L3_trace, Rational(40, 21)) +
                  scaled(d.L3_mixed, Rational(-88, 7)) + scaled(d.L3_cyclic, Rational(320, 21));
  c.a[4] = {f * Radical(Rational(1, 360)), T * (interior * d.vol + b4 * d.vol_boundary)};
  return c;
}

VConstant v_nk(int n, int k) {
  if (n < 1) throw std::invalid_argument("v_nk needs n >= 1");
  VConstant v;
  if (k < 1 || k > n) {
    v.k_outside_range = true;
    return v;
  }
  if ((n - k) % 2 != 0) {
    v.parity_zero = true;
    return v;
  }
  const Rational e(k - n, 2);
  Radical core = Radical(Rational(k, n)) * Radical::gamma_half(n).pow(Rational(k, n)) / Radical::gamma_half(k);
  if (n % 2 == 0) {
    v.value = core * Radical::power(2, e) * Radical::pi_power(e);
  } else {
    v.value = core * Radical::power(2, Rational((k - n) * (n + 1), 2 * n)) * Radical::pi_power(e);
  }
  return v;
}

LowerVolume lower_volume(const AlgebraSignature& sig, int n, int k, const CurvatureData& d) {
  if (n != sig.p + sig.q) throw std::invalid_argument("lower_volume: n must equal p + q");
  VConstant v = v_nk(n, k);
  LowerVolume out;
  out.parity_zero = v.parity_zero;
  out.k_outside_range = v.k_outside_range;
  if (v.value.is_zero()) return out;
  const int j = n - k;
  if (j > 4) throw std::invalid_argument("heat coefficient a_" + std::to_string(j) + " unavailable");
  HeatCoeffs a = interior_coeffs(sig, d);
  out.value = {v.value * a.a[j].factor, a.a[j].bracket};
  return out;
}

HeatTerm wres_power(const AlgebraSignature& sig, int n) {
  if (n % 2 != 0 || n < 4) throw std::invalid_argument("wres_power needs an even n >= 4");
  Rational fact(1);
  for (int i = 2; i <= n / 2 - 2; ++i) fact *= i;
  return {Radical(Rational(-1) / (6 * fact)) * four_pi_power(Rational(-n, 2)), sig.total_dim()};
}

Cutoff Cutoff::tabulated(std::vector<double> s, std::vector<double> v) {
  if (s.size() != v.size() || s.size() < 2) throw std::invalid_argument("tabulated cutoff needs matching samples");
  if (!std::is_sorted(s.begin(), s.end()) || s.front() != 0.0)
    throw std::invalid_argument("tabulated cutoff abscissae must start at 0 and increase");
  for (double y : v)
    if (!(y >= 0)) throw std::invalid_argument("cutoff values must be nonnegative");
  Cutoff c;
  c.breakpoints = s;
  c.support_end = s.back();
  c.f = [s = std::move(s), v = std::move(v)](double x) {
    if (x < 0 || x > s.back()) return 0.0;
    auto it = std::upper_bound(s.begin(), s.end(), x);
    if (it == s.end()) return v.back();
    std::size_t i = static_cast<std::size_t>(it - s.begin());
    double w = (x - s[i - 1]) / (s[i] - s[i - 1]);
    return v[i - 1] * (1 - w) + v[i] * w;
  };
  return c;
}

Moments spectral_moments(const Cutoff& c) {
  Moments m;
  m.F[0] = c.f(0.0);
  std::vector<double> pts{0.0};
  for (double b : c.breakpoints)
    if (b > 0 && b < c.support_end) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (std::isfinite(c.support_end) && c.support_end > pts.back()) pts.push_back(c.support_end);
  for (int k = 1; k <= 4; ++k) {
    const double e = k / 2.0 - 1;
    auto g = [&](double s) { return s <= 0 && e < 0 ? 0.0 : c.f(s) * std::pow(s, e); };
    double total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto r = quad::integrate_singular(g, pts[i], pts[i + 1]);
      m.converged = m.converged && r.converged;
      total += r.value;
    }
    if (!std::isfinite(c.support_end)) {
      auto r = quad::integrate_singular(g, pts.back(), INFINITY);
      if (!std::isfinite(r.value) || !r.converged) throw std::runtime_error("non-integrable tail");
      total += r.value;
    }
    m.F[k] = total / std::tgamma(k / 2.0);
  }
  return m;
}

}  // namespace wres
