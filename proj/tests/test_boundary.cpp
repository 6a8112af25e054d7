#include "doctest.h"

#include <cmath>

#include "wres/boundary.hpp"
#include "wres/quadrature.hpp"

using namespace wres;

namespace {

UnitValue uv(Rational c, std::vector<std::string> units, bool imag = false) {
  std::map<std::string, int> u;
  for (const auto& s : units) u[s] += 1;
  return {imag ? GaussianRational(0, c) : GaussianRational(c), u};
}

const CaseResult& by_label(const BoundaryReport& r, const std::string& label) {
  for (const auto& c : r.cases)
    if (c.label == label) return c;
  throw std::runtime_error("no case " + label);
}

}  // namespace

TEST_CASE("case enumeration") {
  CHECK(enumerate_cases(4, 1, 1).size() == 5);
  CHECK(enumerate_cases(6, 2, 2).size() == 5);
  CHECK(enumerate_cases(5, 2, 1).size() == 5);
  CHECK(enumerate_cases(3, 1, 1).size() == 1);
  CHECK(enumerate_cases(5, 2, 2).size() == 1);
  CHECK(enumerate_cases(4, 2, 1).size() == 1);
  auto c4 = enumerate_cases(4, 1, 1);
  CHECK(c4.front() == CaseIndex{-1, -1, 0, 0, 1});
  for (const auto& c : c4) CHECK(c.r - c.k - c.alpha + c.l - c.j - 1 == -4);
  // n = 5 with (1,1): 6 cases at r + l = -2, 2 x 3 at -3, 3 at -4.
  CHECK(enumerate_cases(5, 1, 1).size() == 15);
}

TEST_CASE("case weights") {
  CHECK(case_weight({-1, -1, 0, 0, 0}, WeightConvention::General) == -GaussianRational::i());
  CHECK(case_weight({-1, -1, 0, 1, 0}, WeightConvention::General) == GaussianRational(Rational(-1, 2)));
  CHECK(case_weight({-1, -1, 1, 1, 0}, WeightConvention::General) == GaussianRational(0, Rational(1, 6)));
  CHECK(case_weight({-1, -1, 1, 1, 0}, WeightConvention::Displayed) == GaussianRational(1));
}

TEST_CASE("dimension 4, (1,1): case table and cancellation") {
  auto r = phi_total(find_scenario(4, 1, 1));
  const std::vector<std::string> u{unit::pi, unit::h1, unit::omega(3), unit::dx};
  CHECK(by_label(r, "aI").value.is_zero());
  CHECK(by_label(r, "aII").value == uv(Rational(-3, 4), u));
  CHECK(by_label(r, "aIII").value == uv(Rational(3, 4), u));
  CHECK(by_label(r, "b").value == uv(Rational(3, 4), u));
  CHECK(by_label(r, "c").value == uv(Rational(-3, 4), u));
  CHECK((by_label(r, "aII").value + by_label(r, "aIII").value).is_zero());
  CHECK((by_label(r, "b").value + by_label(r, "c").value).is_zero());
  CHECK(r.total.is_zero());
  CHECK(r.all_pass());
  CHECK(r.cases.size() == 5);
  CHECK(r.cases[0].label == "aI");
  CHECK(r.cases[4].label == "c");
}

TEST_CASE("dimension 6, (2,2): case table and cancellation") {
  auto r = phi_total(find_scenario(6, 2, 2));
  const std::vector<std::string> u{unit::total_dim, unit::pi, unit::h1, unit::omega(4), unit::dx};
  CHECK(by_label(r, "aII").value == uv(Rational(-5, 64), u));
  CHECK(by_label(r, "aIII").value == uv(Rational(5, 64), u));
  CHECK(by_label(r, "b").value == uv(Rational(-15, 64), u));
  CHECK(by_label(r, "c").value == uv(Rational(15, 64), u));
  CHECK(r.total.is_zero());
  CHECK(r.all_pass());
}

TEST_CASE("dimension 3 and 5 boundary terms") {
  auto r3 = phi_total(find_scenario(3, 1, 1));
  CHECK(r3.total == uv(2, {unit::pi, unit::pi, unit::vol_boundary}, true));
  REQUIRE(r3.alternative_total);
  CHECK(*r3.alternative_total == uv(2, {unit::pi, unit::pi, unit::vol_boundary}));
  CHECK(r3.all_pass());

  auto r5 = phi_total(find_scenario(5, 2, 2));
  CHECK(r5.total == uv(Rational(1, 8), {unit::total_dim, unit::pi, unit::omega(3), unit::vol_boundary}, true));
  CHECK(r5.all_pass());

  auto r51 = phi_total(find_scenario(5, 2, 1));
  for (const auto& c : r51.cases) CHECK(c.value.is_zero());
  CHECK(r51.all_pass());
  CHECK(phi_total(find_scenario(4, 2, 1)).total.is_zero());
}

TEST_CASE("nonzero cases are proportional to h'(0)") {
  for (auto s : {find_scenario(4, 1, 1), find_scenario(6, 2, 2)}) {
    auto r = phi_total(s);
    for (const auto& c : r.cases) {
      if (c.value.is_zero()) continue;
      CHECK(c.value.units().count(unit::h1) == 1);
    }
  }
}

TEST_CASE("matrix trace path reproduces the symbolic path") {
  for (auto s : {find_scenario(4, 1, 1), find_scenario(3, 1, 1), find_scenario(5, 2, 1)}) {
    auto sym = phi_total(s, TracePath::Symbolic);
    auto mat = phi_total(s, TracePath::Matrix);
    REQUIRE(sym.cases.size() == mat.cases.size());
    for (std::size_t i = 0; i < sym.cases.size(); ++i) CHECK(sym.cases[i].value == mat.cases[i].value);
  }
}

TEST_CASE("signature override keeps the table structure") {
  auto s = with_signature(find_scenario(4, 1, 1), 1, 3);
  auto r = phi_total(s);
  CHECK(r.p == 1);
  CHECK(r.q == 3);
  CHECK(r.total.is_zero());
  CHECK_THROWS(with_signature(find_scenario(4, 1, 1), 2, 3));
}

TEST_CASE("connection placeholders survive without normal coordinates") {
  Scenario s = find_scenario(4, 1, 1);
  BoundaryModel m = s.model();
  CaseIndex c{-2, -1, 0, 0, 0};
  EvalOptions raw = s.options;
  raw.normal_coordinates = false;
  RationalXi with_w = case_integrand(m, c, 1, 1, raw);
  bool has_w = false;
  for (const auto& coef : with_w.numerator())
    for (const auto& sym : coef.symbols()) has_w |= sym.rfind("w(", 0) == 0;
  CHECK(has_w);
  RationalXi reduced = case_integrand(m, c, 1, 1, s.options);
  for (const auto& coef : reduced.numerator())
    for (const auto& sym : coef.symbols()) CHECK(sym.rfind("w(", 0) != 0);
}

TEST_CASE("line integrals agree with adaptive quadrature") {
  Scenario s = find_scenario(4, 1, 1);
  BoundaryModel m = s.model();
  auto one = [](const std::string&) { return std::complex<double>(1.0); };
  for (const auto& c : enumerate_cases(4, 1, 1)) {
    RationalXi f = case_integrand(m, c, 1, 1, s.options);
    if (f.is_zero()) continue;
    auto exact = f.integrate_line().eval([](const std::string& name) {
      return std::complex<double>(name == unit::pi ? M_PI : 1.0);
    });
    auto re = quad::integrate([&](double x) { return f.eval(x, one).real(); }, -INFINITY, INFINITY);
    auto im = quad::integrate([&](double x) { return f.eval(x, one).imag(); }, -INFINITY, INFINITY);
    CHECK(std::abs(re.value - exact.real()) < 1e-9);
    CHECK(std::abs(im.value - exact.imag()) < 1e-9);
  }
}

TEST_CASE("res-partials") {
  auto r11 = res_partial(ResKind::Res11);
  auto r21 = res_partial(ResKind::Res21);
  CHECK(r11.value == uv(Rational(-3, 4), {unit::pi, unit::h1, unit::omega(3), unit::vol_boundary}));
  CHECK(r11.igrb_multiple == uv(Rational(1, 4), {unit::pi, unit::omega(3), igrb_unit}));
  CHECK(r21.igrb_multiple == uv(Rational(-1, 4), {unit::pi, unit::omega(3), igrb_unit}));
  CHECK((r11.value + r21.value).is_zero());
  auto r22 = res_partial(ResKind::Res22);
  auto r23 = res_partial(ResKind::Res23);
  CHECK(r22.igrb_multiple == uv(Rational(1, 64), {unit::total_dim, unit::pi, unit::omega(4), igrb_unit}));
  CHECK(r23.igrb_multiple == uv(Rational(3, 64), {unit::total_dim, unit::pi, unit::omega(4), igrb_unit}));
  CHECK(res_partial(ResKind::Res21_51).value.is_zero());
  CHECK(res_partial(ResKind::Res22_51).value.is_zero());
  CHECK(parse_res_kind("res22") == ResKind::Res22);
  CHECK_FALSE(parse_res_kind("res99"));
  CHECK(res_kind_name(ResKind::Res21_51) == "res21_51");
}

TEST_CASE("unregistered scenarios are rejected") {
  CHECK_THROWS_WITH(find_scenario(7, 1, 1), doctest::Contains("unregistered scenario"));
  CHECK(all_scenarios().size() == 6);
}
