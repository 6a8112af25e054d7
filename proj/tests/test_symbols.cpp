#include "doctest.h"

#include <cmath>
#include <random>

#include "wres/symbols.hpp"
#include "wres/units.hpp"

using namespace wres;

namespace {

const GaussianRational I = GaussianRational::i();

BoundaryModel model(int p, int q) { return BoundaryModel::make(p + q, AlgebraSignature::make(p, q)); }

SymbolExpr subst(const SymbolExpr& s, const std::map<std::string, ScalarPoly>& v) {
  return s.map_coeffs([&](const RationalXi& c) {
    return c.map_coeffs([&](const ScalarPoly& x) { return x.substitute(v); });
  });
}

// Eliminates the last cosphere coordinate's square so |xi'|^2 = 1 is applied.
SymbolExpr on_cosphere(const SymbolExpr& s, const BoundaryModel& m) {
  auto coords = m.sphere_coords();
  return s.map_coeffs([&](const RationalXi& c) {
    return c.map_coeffs([&](const ScalarPoly& x) { return reduce_unit_constraint(x, coords, coords.back()); });
  });
}

ScalarPoly on_cosphere(const ScalarPoly& x, const BoundaryModel& m) {
  auto coords = m.sphere_coords();
  return reduce_unit_constraint(x, coords, coords.back());
}

RationalXi on_cosphere(const RationalXi& x, const BoundaryModel& m) {
  return x.map_coeffs([&](const ScalarPoly& c) { return on_cosphere(c, m); });
}

SymbolExpr gen(const Generator& g, const RationalXi& c) { return SymbolExpr::generator(g, c); }

RationalXi poly_xi(std::vector<GaussianRational> coefs) {
  std::vector<ScalarPoly> num;
  for (auto& c : coefs) num.emplace_back(c);
  return RationalXi::make(num, 0, 0);
}

// (xi - i)^{-k}
RationalXi over_minus_i(int k) { return RationalXi::make({ScalarPoly(1)}, k, 0); }

ScalarPoly h1() { return ScalarPoly::var(unit::h1); }

RationalXi rx(const ScalarPoly& p) { return RationalXi(p); }

}  // namespace

TEST_CASE("sigma_-1 at a1 = 1") {
  auto m = model(2, 2);
  SymbolExpr s = subst(sigma_minus1_Dinv(m).value, {{"a1", 1}, {"a2", 0}, {"b1", 0}});
  SymbolExpr want = (gen(cf(1), 1) + gen(ch(2), RationalXi::xi())).scaled(RationalXi::inv_norm(1).scaled(ScalarPoly(I)));
  CHECK(s == want);
}

TEST_CASE("second xi-derivative of sigma_-1") {
  auto m = model(2, 2);
  SymbolExpr cxp = clifford_xi_prime(m).value;
  SymbolExpr cn = gen(ch(2), 1);
  SymbolExpr cxi = clifford_xi(m).value;
  RationalXi xi = RationalXi::xi();
  // i( -(6 xi c(dx_n) + 2 c(xi')) / |xi|^4 + 8 xi^2 c(xi) / |xi|^6 )
  SymbolExpr want = (cn.scaled(xi.scaled(ScalarPoly(6))) + cxp.scaled(RationalXi(2))).scaled(RationalXi::inv_norm(2).scaled(ScalarPoly(-I))) +
                    cxi.scaled((xi * xi * RationalXi::inv_norm(3)).scaled(ScalarPoly(I * GaussianRational(8))));
  CHECK(derive(sigma_minus1_Dinv(m), Deriv::Xi, 2).value == want);
}

TEST_CASE("pi+ of the x_n-derivative of sigma_-1") {
  auto m = model(2, 2);
  SymbolExpr got = pi_plus(derive(sigma_minus1_Dinv(m), Deriv::Xn).value);
  SymbolExpr cxp = clifford_xi_prime(m).value;
  SymbolExpr dcxp = *clifford_xi_prime(m).dxn;
  SymbolExpr cn = gen(ch(2), 1);
  // d c(xi') / (2(xi - i)) + i h'(0) [ i c(xi') / (4(xi - i)) + (c(xi') + i c(dx_n)) / (4(xi - i)^2) ]
  SymbolExpr want = dcxp.scaled(over_minus_i(1).scaled(ScalarPoly(GaussianRational(Rational(1, 2))))) +
                    (cxp.scaled(over_minus_i(1).scaled(ScalarPoly(I))) + (cxp + cn.scaled(rx(ScalarPoly(I)))).scaled(over_minus_i(2)))
                        .scaled(rx(h1().scaled(I * GaussianRational(Rational(1, 4)))));
  CHECK(got == want);
  // tr[d c(xi') c(xi')] = -4 h'(0) with totalDim 8
  ScalarPoly t = (identity_coef_of_product(dcxp, cxp).numerator()[0]) * m.sig.total_dim();
  CHECK(on_cosphere(t, m) == h1().scaled(GaussianRational(-4)));
}

TEST_CASE("D^-2 symbols: x_n-derivative and its projection") {
  auto m = model(4, 2);
  SymbolJet s = sigma_minus2_Dsq(m);
  RationalXi d = derive(s, Deriv::Xn).value.identity_coef();
  CHECK(d == RationalXi::inv_norm(2).scaled(-h1()));
  // h'(0)(i xi + 2) / (4 (xi - i)^2)
  RationalXi want = (poly_xi({2, I}) * over_minus_i(2)).scaled(h1().scaled(GaussianRational(Rational(1, 4))));
  CHECK(d.pi_plus() == want);
  CHECK(derive(s, Deriv::Xi).value.identity_coef() ==
        (RationalXi::xi() * RationalXi::inv_norm(2)).scaled(ScalarPoly(-2)));
  CHECK(derive(s, Deriv::Xi, 2).value.identity_coef() ==
        (poly_xi({-2, 0, 6}) * RationalXi::inv_norm(3)));
  CHECK(s.value.identity_coef().pi_plus().derivative(2) == over_minus_i(3).scaled(ScalarPoly(-I)));
}

TEST_CASE("tangential derivatives vanish at x0") {
  auto m = model(2, 2);
  for (auto s : {sigma_minus1_Dinv(m), sigma_minus2_Dinv(m), sigma_minus2_Dsq(m), sigma_minus3_Dsq(m)}) {
    CHECK(derive(s, Deriv::XTangential).value.is_zero());
  }
}

TEST_CASE("x_n-derivatives beyond the supplied jets are errors") {
  auto m = model(2, 2);
  CHECK_THROWS_WITH(derive(sigma_minus2_Dinv(m), Deriv::Xn), "x_n-derivative of order 1 unavailable");
  CHECK_THROWS(derive(sigma_minus3_Dsq(m), Deriv::Xn));
  CHECK_THROWS(derive(sigma_minus1_Dinv(m), Deriv::Xn, 2));
  CHECK_THROWS(symbol_of(m, 1, -3));
  CHECK_THROWS(BoundaryModel::make(4, AlgebraSignature::make(4, 0)));
}

TEST_CASE("flat data: p0 and sigma_-3 vanish") {
  auto m = model(2, 2);
  CliffordElement p0 = sigma0_DF(m);
  CHECK_FALSE(p0.is_zero());
  CliffordElement flat = p0.map_coeffs([](const ScalarPoly& c) {
    std::map<std::string, ScalarPoly> zero;
    for (const auto& s : c.symbols()) zero[s] = ScalarPoly();
    return c.substitute(zero);
  });
  CHECK(flat.is_zero());
  SymbolExpr s3 = sigma_minus3_Dsq(m).value;
  SymbolExpr s3flat = s3.map_coeffs([](const RationalXi& c) {
    return c.map_coeffs([](const ScalarPoly& x) {
      std::map<std::string, ScalarPoly> zero;
      for (const auto& s : x.symbols())
        if (s == unit::h1 || s.rfind("w(", 0) == 0) zero[s] = ScalarPoly();
      return x.substitute(zero);
    });
  });
  CHECK(s3flat.is_zero());
}

TEST_CASE("sigma_-3 scalar part is A1 plus the Gamma^n term") {
  auto m = model(4, 2);
  RationalXi xi = RationalXi::xi();
  RationalXi a1 = (xi * RationalXi::inv_norm(3)).scaled(h1().scaled(I * GaussianRational(-2)));
  RationalXi a2 = (xi * RationalXi::inv_norm(2)).scaled(h1().scaled(I * GaussianRational(Rational(-5, 2))));
  CHECK(sigma_minus3_Dsq(m).value.identity_coef() == a1 + a2);
}

TEST_CASE("C1 bracket reduces to traces of p0 c(dx_n) and p0 c(xi')") {
  auto m = model(2, 2);
  SymbolExpr p0 = to_symbol(sigma0_DF(m));
  SymbolExpr cxp = clifford_xi_prime(m).value;
  SymbolExpr cn = gen(ch(2), 1);
  RationalXi xi = RationalXi::xi();
  RationalXi iI = rx(ScalarPoly(I));
  SymbolExpr bracket = (cxp * p0 * cxp).scaled(poly_xi({2, I})) + (cn * p0 * cn).scaled(xi.scaled(ScalarPoly(I))) +
                       (cn * p0 * cxp).scaled(iI) + (cxp * p0 * cn).scaled(iI);
  SymbolExpr dsig = derive(sigma_minus1_Dinv(m), Deriv::Xi).value;
  // Both sides carry the common factor -1 / (4 (xi - i)^2).
  RationalXi lhs = identity_coef_of_product(bracket, dsig);
  RationalXi tr_n = identity_coef_of_product(p0, cn);
  RationalXi tr_x = identity_coef_of_product(p0, cxp);
  RationalXi rhs = (tr_n * poly_xi({2 * I, -4, -2 * I}) + tr_x * poly_xi({2, 4 * I, -2})) * RationalXi::inv_norm(2);
  CHECK(on_cosphere(lhs - rhs, m).is_zero());

  // After the cosphere integral the normal-coordinate identity removes it.
  auto coords = m.sphere_coords();
  RationalXi integrated = lhs.map_coeffs([&](const ScalarPoly& c) { return integrate_sphere(c, coords, sphere_measure(3)); });
  CHECK_FALSE(integrated.is_zero());
  CHECK(integrated.map_coeffs([&](const ScalarPoly& c) { return m.normal_coordinate_reduce(c); }).is_zero());
}

TEST_CASE("normal-coordinate identity") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 2}, {4, 2}}) {
    auto m = model(p, q);
    for (const auto& b : m.frame()) {
      ScalarPoly sum;
      for (const auto& c : m.frame()) sum += omega(b, c, c);
      CHECK_FALSE(sum.is_zero());
      CHECK(m.normal_coordinate_reduce(sum).is_zero());
    }
    // Off-identity symbols are untouched.
    ScalarPoly other = omega(fvec(1), hvec(1), hvec(2));
    CHECK(m.normal_coordinate_reduce(other) == other);
  }
  CHECK(omega(hvec(1), fvec(2), fvec(1)) == -omega(fvec(2), hvec(1), fvec(1)));
  CHECK(omega(fvec(1), fvec(1), hvec(1)).is_zero());
}

TEST_CASE("leading symbol inverts sigma_1(D) = i c(xi)") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 2}}) {
    auto m = model(p, q);
    SymbolExpr s1 = clifford_xi(m).value.scaled(rx(ScalarPoly(I)));
    SymbolExpr prod = sigma_minus1_Dinv(m).value * s1;
    CHECK(on_cosphere(prod, m) == SymbolExpr(RationalXi(1)));
  }
}

TEST_CASE("every symbol has poles only at +-i and is proper") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}}) {
    auto m = model(p, q);
    for (auto s : {sigma_minus1_Dinv(m), sigma_minus2_Dinv(m), sigma_minus2_Dsq(m), sigma_minus3_Dsq(m)})
      for (const auto& [w, c] : s.value.terms()) CHECK(c.proper());
  }
}

TEST_CASE("xi-derivatives agree with finite differences at xi = 1/3") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto m = model(2, 2);
  std::map<std::string, double> vals;
  auto value = [&](const std::string& s) -> std::complex<double> {
    auto it = vals.find(s);
    if (it == vals.end()) it = vals.emplace(s, u(rng)).first;
    return it->second;
  };
  const double x0 = 1.0 / 3.0, h = 1e-3;
  int checked = 0;
  for (auto s : {sigma_minus1_Dinv(m), sigma_minus2_Dinv(m), sigma_minus3_Dsq(m)}) {
    for (int order = 1; order <= 2; ++order) {
      SymbolExpr d = derive(s, Deriv::Xi, order).value;
      for (const auto& [w, c] : s.value.terms()) {
        auto f = [&](double x) { return c.eval(x, value); };
        std::complex<double> fd;
        // five-point stencils
        if (order == 1) fd = (-f(x0 + 2 * h) + 8.0 * f(x0 + h) - 8.0 * f(x0 - h) + f(x0 - 2 * h)) / (12 * h);
        else fd = (-f(x0 + 2 * h) + 16.0 * f(x0 + h) - 30.0 * f(x0) + 16.0 * f(x0 - h) - f(x0 - 2 * h)) / (12 * h * h);
        auto it = d.terms().find(w);
        std::complex<double> exact = it == d.terms().end() ? 0.0 : it->second.eval(x0, value);
        CHECK(std::abs(exact - fd) <= 1e-9 * std::max(1.0, std::abs(exact)) + (order == 2 ? 1e-8 : 0.0));
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("jet arithmetic follows the Leibniz rule") {
  auto m = model(2, 2);
  SymbolJet a = clifford_xi(m), b = inv_norm_jet(m, 2);
  SymbolJet ab = a * b;
  CHECK(*ab.dxn == *a.dxn * b.value + a.value * *b.dxn);
  SymbolJet sum = a + b;
  CHECK(*sum.dxn == *a.dxn + *b.dxn);
  SymbolJet no{a.value, std::nullopt};
  CHECK_FALSE((no * b).dxn.has_value());
}
