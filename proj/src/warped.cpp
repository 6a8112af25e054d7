#include "wres/warped.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "wres/quadrature.hpp"
#include "wres/units.hpp"

namespace wres {

BaseCurvature BaseCurvature::constant(double c) {
  BaseCurvature b;
  b.c = c;
  b.r = 6 * c;
  b.ric2 = 12 * c * c;
  b.riem2 = 12 * c * c;
  b.rperp2 = 12 * c * c;
  return b;
}

void RWModel::validate() const {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("interval needs a < b");
  if (!(base_vol > 0)) throw std::invalid_argument("base volume must be positive");
}

double FrameCurvature::ricci2() const {
  double tangential = radial + 2 * slice;
  return 9 * radial * radial + 3 * tangential * tangential;
}

namespace {

WarpJet checked_jet(const RWModel& m, double t) {
  WarpJet j = m.f.derivatives(t);
  if (!(j[0] > 0)) throw WarpDomainError("nonpositive warp f(" + std::to_string(t) + ") = " + std::to_string(j[0]));
  for (double v : j)
    if (!std::isfinite(v)) throw WarpDomainError("warp not finite at t = " + std::to_string(t));
  return j;
}

}  // namespace

FrameCurvature frame_curvature(const RWModel& m, double t) {
  WarpJet j = checked_jet(m, t);
  return {-j[2] / j[0], (m.base.c - j[1] * j[1]) / (j[0] * j[0])};
}

FrameTensor frame_tensor(const FrameCurvature& k) {
  FrameTensor r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      double sec = (i == 0 || j == 0) ? k.radial : k.slice;
      r[i][j][j][i] += sec;
      r[i][j][i][j] -= sec;
    }
  return r;
}

FrameTensor numeric_frame_tensor(const RWModel& m, double t, const std::array<double, 3>& x, double h) {
  using LD = long double;
  using Point = std::array<LD, 4>;
  const LD c = m.base.c;
  auto metric = [&](const Point& u) {
    LD f = m.f.eval<LD>(u[0]);
    LD lam = 1 / (1 + c * (u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) / 4);
    return std::array<LD, 4>{1, f * f * lam * lam, f * f * lam * lam, f * f * lam * lam};
  };
  // Fourth-order central difference of a vector-valued map along direction l.
  auto diff = [&](auto fn, const Point& u, int l) {
    auto at = [&](LD s) {
      Point v = u;
      v[l] += s;
      return fn(v);
    };
    auto p2 = at(2 * h), p1 = at(h), m1 = at(-h), m2 = at(-2 * h);
    auto out = p1;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (-p2[i] + 8 * p1[i] - 8 * m1[i] + m2[i]) / (12 * h);
    return out;
  };
  // Gamma^i_{jk} flattened as 16 i + 4 j + k; the metric is diagonal.
  auto gamma = [&](const Point& u) {
    auto g = metric(u);
    std::array<std::array<LD, 4>, 4> dg;  // dg[l][i] = d_l g_ii
    for (int l = 0; l < 4; ++l) dg[l] = diff(metric, u, l);
    std::array<LD, 64> G{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          LD s = 0;
          if (i == k) s += dg[j][i];
          if (i == j) s += dg[k][i];
          if (j == k) s -= dg[i][j];
          G[16 * i + 4 * j + k] = s / (2 * g[i]);
        }
    return G;
  };
  Point u{static_cast<LD>(t), x[0], x[1], x[2]};
  auto g = metric(u);
  auto G = gamma(u);
  std::array<std::array<LD, 64>, 4> dG;
  for (int l = 0; l < 4; ++l) dG[l] = diff(gamma, u, l);
  auto Gm = [&](int i, int j, int k) { return G[16 * i + 4 * j + k]; };
  // R^i_{jkl} with R(d_k, d_l) d_j = R^i_{jkl} d_i.
  auto R = [&](int i, int j, int k, int l) {
    LD v = dG[k][16 * i + 4 * l + j] - dG[l][16 * i + 4 * k + j];
    for (int n = 0; n < 4; ++n) v += Gm(i, k, n) * Gm(n, l, j) - Gm(i, l, n) * Gm(n, k, j);
    return v;
  };
  FrameTensor out{};
  std::array<LD, 4> s;
  for (int i = 0; i < 4; ++i) s[i] = 1 / std::sqrt(g[i]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          out[i][j][k][l] = static_cast<double>(s[i] * s[j] * s[k] * s[l] * g[l] * R(l, k, i, j));
  return out;
}

CurvatureData WarpedPoint::to_curvature_data() const {
  CurvatureData d;
  for (const auto& [name, v] : fields) *d.field(name) = ScalarPoly(Rational(v));
  return d;
}

namespace {

const std::map<std::string, std::string>& field_symbols() {
  static const std::map<std::string, std::string> m = [] {
    std::map<std::string, std::string> out;
    CurvatureData s = CurvatureData::symbolic();
    for (const auto& name : CurvatureData::field_names()) out[name] = *s.field(name)->symbols().begin();
    return out;
  }();
  return m;
}

}  // namespace

std::map<std::string, double> WarpedPoint::symbol_values() const {
  std::map<std::string, double> out;
  for (const auto& [name, v] : fields)
    if (name != "vol" && name != "vol_boundary") out[field_symbols().at(name)] = v;
  return out;
}

WarpedPoint warped_geometry(const RWModel& m, double t, int normal_sign) {
  if (normal_sign != 1 && normal_sign != -1) throw std::invalid_argument("normal sign must be +1 or -1");
  WarpJet j = checked_jet(m, t);
  const double F = j[0];
  const double x = normal_sign * j[1] / F, y = j[2] / F, z = normal_sign * j[3] / F, w = j[4] / F;
  const double rM = m.base.r;
  const double r = rM / (F * F) + 6 * (y + x * x);
  const double r1 = -2 * rM * x / (F * F) + 6 * (z + x * y - 2 * x * x * x);
  const double r2 = -2 * rM * (y - 3 * x * x) / (F * F) + 6 * (w + y * y - 8 * x * x * y + 6 * x * x * x * x);
  const double L = -3 * x;
  WarpedPoint p;
  p.fields = {
      {"r", r},
      {"lap_r", r2 + 3 * x * r1},
      {"r2", r * r},
      {"ric2", m.base.ric2 + 12 * y * y},
      {"riem2", m.base.riem2 + 12 * y * y},
      {"rperp2", m.base.rperp2},
      {"L", L},
      {"LL", 3 * x * x},
      {"L_L", 9 * x * x},
      {"L3_trace", -27 * x * x * x},
      {"L3_mixed", -9 * x * x * x},
      {"L3_cyclic", -3 * x * x * x},
      {"RaNaN", 3 * y},
      {"RaNaN_L", -9 * x * y},
      {"RaNbN_L", -3 * x * y},
      {"Rabcb_L", 3 * x * rM - 18 * x * y},
      {"r_N", r1},
      {"r_L", r * L},
      {"L_aabb", 0},
      {"vol", 1},
      {"vol_boundary", 1},
  };
  return p;
}

std::string reading_name(RWReading r) {
  switch (r) {
    case RWReading::Printed: return "printed";
    case RWReading::Simplified: return "simplified";
    case RWReading::General: return "general";
  }
  return "?";
}

namespace {

struct Integrator {
  const RWModel& m;

  // base_vol * int_a^b g(t) f(t)^3 dt
  RWTerm interior(const std::function<double(double)>& g, RWTerm term) const {
    auto h = [&](double t) {
      double f = checked_jet(m, t)[0];
      return g(t) * f * f * f;
    };
    auto r = quad::integrate(h, m.a, m.b);
    term.integral += m.base_vol * r.value;
    term.error += m.base_vol * r.error;
    term.converged = term.converged && r.converged && quad::stable_under_refinement(h, m.a, m.b);
    if (!std::isfinite(r.value)) throw std::runtime_error("quadrature did not converge");
    return term;
  }

  // base_vol * sum over the two ends of f^3 h(t, normal sign)
  RWTerm ends(const std::function<double(double, int)>& h, RWTerm term) const {
    for (auto [t, s] : {std::pair{m.a, 1}, std::pair{m.b, -1}}) {
      double f = checked_jet(m, t)[0];
      term.integral += m.base_vol * f * f * f * h(t, s);
    }
    return term;
  }
};

Rational numeric_total(const AlgebraSignature& sig) {
  auto c = sig.total_dim().as_constant();
  if (!c || !c->is_real()) throw std::invalid_argument("warped coefficients need a numeric totalDim");
  return c->re;
}

Radical four_pi(const Rational& e) { return Radical::power(4, e) * Radical::pi_power(e); }

double eval_bracket(const ScalarPoly& b, const std::map<std::string, double>& v) {
  return b
      .eval([&](const std::string& name) -> std::complex<double> {
        if (auto it = v.find(name); it != v.end()) return it->second;
        if (name == unit::pi) return std::numbers::pi;
        throw std::logic_error("warped data lacks symbol " + name);
      })
      .real();
}

std::array<RWTerm, 5> printed_coeffs(const RWModel& m, const Rational& T) {
  Integrator in{m};
  const double rM = m.base.r;
  std::array<RWTerm, 5> a;
  auto jet = [&](double t, int s) {
    WarpJet j = checked_jet(m, t);
    return std::array<double, 4>{j[0], s * j[1] / j[0], j[2] / j[0], s * j[3] / j[0]};
  };
  auto rt = [&](double t) {
    auto [F, x, y, z] = jet(t, 1);
    return rM / (F * F) + 6 * (y + x * x);
  };

  a[0].factor = four_pi(-2) * Radical(T);
  a[0] = in.interior([](double) { return 1.0; }, a[0]);

  a[1].factor = four_pi(Rational(-3, 2)) * Radical(T) * Radical(Rational(-1, 4));
  a[1] = in.ends([](double, int) { return 1.0; }, a[1]);

  a[2].factor = four_pi(-2) * Radical(T) * Radical(Rational(1, 12));
  a[2] = in.interior([&](double t) { return -rt(t); }, a[2]);
  a[2] = in.ends([&](double t, int s) { return -12 * jet(t, s)[1]; }, a[2]);

  a[3].factor = four_pi(Rational(-3, 2)) * Radical(T) * Radical(Rational(-1, 384));
  a[3] = in.ends(
      [&](double t, int s) {
        auto [F, x, y, z] = jet(t, s);
        return -8 * rM / (F * F) - 24 * y - 15 * x * x;
      },
      a[3]);

  a[4].factor = four_pi(-2) * Radical(T) * Radical(Rational(1, 360));
  a[4] = in.interior(
      [&](double t) {
        double y = jet(t, 1)[2], r = rt(t);
        return 1.25 * r * r - 2 * m.base.ric2 + 5.75 * m.base.riem2 - 45 * y * y;
      },
      a[4]);
  a[4] = in.ends(
      [&](double t, int s) {
        auto [F, x, y, z] = jet(t, s);
        return (102 / (F * F * F) + 30 / (F * F) + 12 * x) * rM - 306 * z - 378 * x * y + 180 * x * x + 180 * y +
               628 * x * x * x;
      },
      a[4]);
  return a;
}

std::array<RWTerm, 5> heat_coeffs(const RWModel& m, const AlgebraSignature& sig, BoundaryReading reading) {
  Integrator in{m};
  HeatCoeffs sym = boundary_coeffs(sig, CurvatureData::symbolic(), reading);
  std::array<RWTerm, 5> a;
  for (int k = 0; k < 5; ++k) {
    a[k].factor = sym.a[k].factor;
    if (sym.a[k].is_zero()) continue;
    const ScalarPoly& b = sym.a[k].bracket;
    auto density = [&](double t, int s, bool boundary) {
      auto v = warped_geometry(m, t, s).symbol_values();
      v[unit::vol_boundary] = boundary ? 1 : 0;
      v["Vol"] = boundary ? 0 : 1;
      return eval_bracket(b, v);
    };
    a[k] = in.interior([&](double t) { return density(t, 1, false); }, a[k]);
    a[k] = in.ends([&](double t, int s) { return density(t, s, true); }, a[k]);
  }
  return a;
}

}  // namespace

RWSpectral rw_spectral_coeffs(const RWModel& m, const AlgebraSignature& sig) {
  m.validate();
  if (sig.p + sig.q != 4) throw std::invalid_argument("warped coefficients need p + q = 4");
  Rational T = numeric_total(sig);
  RWSpectral out;
  out.a[RWReading::Printed] = printed_coeffs(m, T);
  out.a[RWReading::Simplified] = heat_coeffs(m, sig, BoundaryReading::Printed);
  out.a[RWReading::General] = heat_coeffs(m, sig, BoundaryReading::Derived);
  for (int k = 0; k < 5; ++k) {
    double p = out.a[RWReading::Printed][k].value(), s = out.a[RWReading::Simplified][k].value();
    double scale = std::max(std::abs(p), std::abs(s));
    out.residual[k] = scale == 0 ? 0 : std::abs(p - s) / scale;
  }
  return out;
}

RWLowerVolumes rw_lower_volumes(const RWModel& m, const AlgebraSignature& sig) {
  m.validate();
  if (sig.p + sig.q != 4) throw std::invalid_argument("warped volumes need p + q = 4");
  Rational T = numeric_total(sig);
  Integrator in{m};
  const double rM = m.base.r;
  auto rt = [&](double t) {
    WarpJet j = checked_jet(m, t);
    double x = j[1] / j[0], y = j[2] / j[0];
    return rM / (j[0] * j[0]) + 6 * (y + x * x);
  };
  const Radical a0 = four_pi(-2) * Radical(T);
  RWLowerVolumes v;
  VConstant v40 = v_nk(4, 0);
  v.k_outside_range = v40.k_outside_range;
  v.vol_n_minus_3.factor = v40.value * a0 * Radical(Rational(1, 360));
  v.vol_n_minus_3 = in.interior(
      [&](double t) {
        WarpJet j = checked_jet(m, t);
        double y = j[2] / j[0], r = rt(t);
        return 1.25 * r * r - 2 * m.base.ric2 + 5.75 * m.base.riem2 - 45 * y * y;
      },
      v.vol_n_minus_3);
  v.vol_n_minus_1.factor = -v_nk(4, 2).value * a0 * Radical(Rational(1, 12));
  v.vol_n_minus_1 = in.interior(rt, v.vol_n_minus_1);
  v.vol_top_literal.factor = v_nk(4, 4).value * a0;
  v.vol_top_literal = in.interior(
      [&](double t) {
        double f = checked_jet(m, t)[0];
        return f * f * f;
      },
      v.vol_top_literal);
  v.vol_top_density.factor = v.vol_top_literal.factor;
  v.vol_top_density = in.interior([](double) { return 1.0; }, v.vol_top_density);
  return v;
}

}  // namespace wres
