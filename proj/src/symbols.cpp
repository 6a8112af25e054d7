#include "wres/symbols.hpp"

#include <stdexcept>

#include "wres/units.hpp"

namespace wres {

std::string FrameVec::str() const { return (leaf ? "f" : "h") + std::to_string(index); }

ScalarPoly omega(const FrameVec& a, const FrameVec& b, const FrameVec& x) {
  if (a == b) return ScalarPoly();
  if (b < a) return -omega(b, a, x);
  return ScalarPoly::var("w(" + a.str() + "," + b.str() + ";" + x.str() + ")");
}

BoundaryModel BoundaryModel::make(int n, const AlgebraSignature& sig) {
  if (sig.p + sig.q != n) throw std::invalid_argument("boundary model needs p + q = n");
  if (sig.q < 1) throw std::invalid_argument("boundary model needs q >= 1 (dx_n = h_q^*)");
  if (n < 2) throw std::invalid_argument("boundary model needs n >= 2");
  BoundaryModel m;
  m.n = n;
  m.sig = sig;
  return m;
}

std::vector<FrameVec> BoundaryModel::frame() const {
  std::vector<FrameVec> v;
  for (int i = 1; i <= sig.p; ++i) v.push_back(fvec(i));
  for (int s = 1; s <= sig.q; ++s) v.push_back(hvec(s));
  return v;
}

std::vector<FrameVec> BoundaryModel::boundary_frame() const {
  auto v = frame();
  v.pop_back();
  return v;
}

Generator BoundaryModel::clifford_of(const FrameVec& v) const { return v.leaf ? cf(v.index) : ch(v.index); }

std::string BoundaryModel::coord_of(const FrameVec& v) const {
  if (v == normal()) return "xi_n";
  return (v.leaf ? "a" : "b") + std::to_string(v.index);
}

std::vector<std::string> BoundaryModel::sphere_coords() const {
  std::vector<std::string> c;
  for (const auto& v : boundary_frame()) c.push_back(coord_of(v));
  return c;
}

ScalarPoly BoundaryModel::normal_coordinate_reduce(const ScalarPoly& p) const {
  // Each symbol omega_{B,C}(e_C) occurs in exactly one identity (the one for B),
  // so eliminating one term per identity is consistent.
  auto fr = frame();
  std::map<std::string, ScalarPoly> subst;
  for (const auto& b : fr) {
    FrameVec last = fr.back() == b ? fr[fr.size() - 2] : fr.back();
    ScalarPoly rest;
    for (const auto& c : fr)
      if (!(c == b) && !(c == last)) rest += omega(b, c, c);
    ScalarPoly target = omega(b, last, last);
    // target = s * var, s = +-1
    const auto& [mono, coef] = *target.terms().begin();
    std::string name = mono.factors().front().first;
    subst[name] = coef.re > 0 ? -rest : rest;
  }
  return p.substitute(subst);
}

SymbolJet operator+(const SymbolJet& a, const SymbolJet& b) {
  SymbolJet r{a.value + b.value, std::nullopt};
  if (a.dxn && b.dxn) r.dxn = *a.dxn + *b.dxn;
  return r;
}

SymbolJet operator-(const SymbolJet& a, const SymbolJet& b) {
  SymbolJet r{a.value - b.value, std::nullopt};
  if (a.dxn && b.dxn) r.dxn = *a.dxn - *b.dxn;
  return r;
}

SymbolJet operator*(const SymbolJet& a, const SymbolJet& b) {
  SymbolJet r{a.value * b.value, std::nullopt};
  if (a.dxn && b.dxn) r.dxn = *a.dxn * b.value + a.value * *b.dxn;
  return r;
}

SymbolJet scale(const SymbolJet& a, const RationalXi& s) {
  SymbolJet r{a.value.scaled(s), std::nullopt};
  if (a.dxn) r.dxn = a.dxn->scaled(s);
  return r;
}

SymbolExpr to_symbol(const CliffordElement& x) {
  return x.map_coeffs([](const ScalarPoly& c) { return RationalXi(c); });
}

namespace {

const ScalarPoly& h1() {
  static const ScalarPoly v = ScalarPoly::var(unit::h1);
  return v;
}

RationalXi half_h1() { return RationalXi(h1().scaled(GaussianRational(Rational(1, 2)))); }

SymbolExpr cxi_prime_value(const BoundaryModel& m) {
  SymbolExpr s;
  for (const auto& v : m.boundary_frame())
    s += SymbolExpr::generator(m.clifford_of(v), RationalXi(ScalarPoly::var(m.coord_of(v))));
  return s;
}

}  // namespace

SymbolJet clifford_xi_prime(const BoundaryModel& m) {
  SymbolExpr v = cxi_prime_value(m);
  return {v, v.scaled(half_h1())};
}

SymbolJet clifford_xi(const BoundaryModel& m) {
  SymbolJet p = clifford_xi_prime(m);
  p.value += SymbolExpr::generator(m.clifford_of(m.normal()), RationalXi::xi());
  return p;
}

SymbolJet inv_norm_jet(const BoundaryModel& /*m*/, int k) {
  SymbolExpr v(RationalXi::inv_norm(k));
  SymbolExpr d(RationalXi::inv_norm(k + 1).scaled(h1().scaled(GaussianRational(-k))));
  return {v, d};
}

CliffordElement sigma0_DF(const BoundaryModel& m) {
  const int p = m.sig.p, q = m.sig.q;
  const GaussianRational quarter(Rational(1, 4)), half(Rational(1, 2));
  CliffordElement r;
  auto W = [](std::vector<Generator> raw, const ScalarPoly& c) { return CliffordElement::word(raw, c); };
  // Exterior-factor combination chat(h_r)chat(h_t) - c(h_r)c(h_t).
  auto ext = [&](int rr, int t, const ScalarPoly& c, std::vector<Generator> prefix) {
    auto a = prefix, b = prefix;
    a.insert(a.end(), {hh(rr), hh(t)});
    b.insert(b.end(), {ch(rr), ch(t)});
    return W(a, c) - W(b, c);
  };
  for (int i = 1; i <= p; ++i)
    for (int k = 1; k <= p; ++k)
      for (int l = 1; l <= p; ++l)
        r += W({cf(i), cf(k), cf(l)}, omega(fvec(k), fvec(l), fvec(i)).scaled(-quarter));
  for (int s = 1; s <= q; ++s)
    for (int k = 1; k <= p; ++k)
      for (int l = 1; l <= p; ++l)
        r += W({cf(k), cf(l), ch(s)}, omega(fvec(k), fvec(l), hvec(s)).scaled(-quarter));
  for (int i = 1; i <= p; ++i)
    for (int rr = 1; rr <= q; ++rr)
      for (int t = 1; t <= q; ++t)
        r += ext(rr, t, omega(hvec(rr), hvec(t), fvec(i)).scaled(quarter), {cf(i)});
  for (int s = 1; s <= q; ++s)
    for (int rr = 1; rr <= q; ++rr)
      for (int t = 1; t <= q; ++t)
        r += ext(rr, t, omega(hvec(rr), hvec(t), hvec(s)).scaled(quarter), {ch(s)});
  // <nabla_{f_i} f_j, h_s> = omega_{h_s,f_j}(f_i), <nabla_{h_s} h_t, f_i> = omega_{f_i,h_t}(h_s)
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j)
      for (int s = 1; s <= q; ++s)
        r += W({cf(i), cf(j), ch(s)}, omega(hvec(s), fvec(j), fvec(i)).scaled(half));
  for (int s = 1; s <= q; ++s)
    for (int t = 1; t <= q; ++t)
      for (int i = 1; i <= p; ++i)
        r += W({ch(s), ch(t), cf(i)}, omega(fvec(i), hvec(t), hvec(s)).scaled(half));
  return r;
}

SymbolJet sigma_minus1_Dinv(const BoundaryModel& m) {
  return scale(clifford_xi(m) * inv_norm_jet(m, 1), RationalXi(ScalarPoly(GaussianRational::i())));
}

SymbolJet sigma_minus2_Dinv(const BoundaryModel& m) {
  SymbolJet cx = clifford_xi(m);
  SymbolExpr p0 = to_symbol(sigma0_DF(m));
  SymbolExpr cn = SymbolExpr::generator(m.clifford_of(m.normal()), RationalXi(1));
  // d_{x_n}|xi|^2 = h'(0) |xi'|^2 = h'(0)
  SymbolExpr v = (cx.value * p0 * cx.value).scaled(RationalXi::inv_norm(2)) +
                 (cx.value * cn * *cx.dxn).scaled(RationalXi::inv_norm(2)) -
                 (cx.value * cn * cx.value).scaled(RationalXi::inv_norm(3).scaled(h1()));
  return {v, std::nullopt};
}

SymbolJet sigma_minus2_Dsq(const BoundaryModel& m) { return inv_norm_jet(m, 1); }

SymbolJet sigma_minus3_Dsq(const BoundaryModel& m) {
  const GaussianRational I = GaussianRational::i();
  const int p = m.sig.p, q = m.sig.q;
  const RationalXi xi = RationalXi::xi();
  // A1 = -i |xi|^{-6} 2 xi^j xi_a xi_b d_j g^{ab}, d_n g^{ab} = h'(0) delta on dM
  RationalXi a1 = (xi * RationalXi::inv_norm(3)).scaled(h1().scaled(I * GaussianRational(-2)));
  // A2 = -i |xi|^{-4} xi_k (Gamma^k + connection(e_k))
  SymbolExpr inner(xi.scaled(h1().scaled(GaussianRational(m.gamma_n))));
  const GaussianRational half(Rational(1, 2));
  for (const auto& x : m.frame()) {
    RationalXi xk = x == m.normal() ? xi : RationalXi(ScalarPoly::var(m.coord_of(x)));
    CliffordElement conn;
    for (int k = 1; k <= p; ++k)
      for (int l = 1; l <= p; ++l)
        conn += CliffordElement::word({cf(k), cf(l)}, omega(fvec(k), fvec(l), x).scaled(half));
    for (int r = 1; r <= q; ++r)
      for (int t = 1; t <= q; ++t) {
        ScalarPoly c = omega(hvec(r), hvec(t), x).scaled(-half);
        conn += CliffordElement::word({hh(r), hh(t)}, c) - CliffordElement::word({ch(r), ch(t)}, c);
      }
    for (int j = 1; j <= p; ++j)
      for (int s = 1; s <= q; ++s)
        conn += CliffordElement::word({cf(j), ch(s)}, -omega(hvec(s), fvec(j), x));
    inner += to_symbol(conn).scaled(xk);
  }
  SymbolExpr v = SymbolExpr(a1) + inner.scaled(RationalXi::inv_norm(2).scaled(ScalarPoly(-I)));
  return {v, std::nullopt};
}

SymbolJet symbol_of(const BoundaryModel& m, int power, int order) {
  if (power == 1 && order == -1) return sigma_minus1_Dinv(m);
  if (power == 1 && order == -2) return sigma_minus2_Dinv(m);
  if (power == 2 && order == -2) return sigma_minus2_Dsq(m);
  if (power == 2 && order == -3) return sigma_minus3_Dsq(m);
  throw std::invalid_argument("symbol sigma_" + std::to_string(order) + "(D^-" + std::to_string(power) +
                              ") unavailable");
}

SymbolExpr derive_xi(const SymbolExpr& s, int order) {
  return s.map_coeffs([order](const RationalXi& c) { return c.derivative(order); });
}

SymbolExpr pi_plus(const SymbolExpr& s) {
  return s.map_coeffs([](const RationalXi& c) { return c.pi_plus(); });
}

SymbolJet derive(const SymbolJet& s, Deriv which, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order == 0) return s;
  switch (which) {
    case Deriv::Xi: {
      SymbolJet r{derive_xi(s.value, order), std::nullopt};
      if (s.dxn) r.dxn = derive_xi(*s.dxn, order);
      return r;
    }
    case Deriv::XTangential:
      return {SymbolExpr(), SymbolExpr()};
    case Deriv::Xn:
      if (order > 1 || !s.dxn)
        throw std::invalid_argument("x_n-derivative of order " + std::to_string(order) + " unavailable");
      return {*s.dxn, std::nullopt};
  }
  return s;
}

}  // namespace wres
