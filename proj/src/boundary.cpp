#include "wres/boundary.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "wres/matrix_rep.hpp"

namespace wres {

std::string CaseIndex::str() const {
  return "r=" + std::to_string(r) + ",l=" + std::to_string(l) + ",k=" + std::to_string(k) +
         ",j=" + std::to_string(j) + ",|alpha|=" + std::to_string(alpha);
}

std::vector<CaseIndex> enumerate_cases(int n, int p1, int p2) {
  if (n < 2) throw std::invalid_argument("enumerate_cases needs n >= 2");
  if (p1 < 1 || p2 < 1) throw std::invalid_argument("enumerate_cases needs p1, p2 >= 1");
  std::vector<CaseIndex> out;
  // k + j + |alpha| = r + l - 1 + n >= 0
  for (int r = -p1; r + (-p2) - 1 + n >= 0; --r)
    for (int l = -p2; r + l - 1 + n >= 0; --l) {
      int d = r + l - 1 + n;
      for (int alpha = d; alpha >= 0; --alpha)
        for (int j = d - alpha; j >= 0; --j) out.push_back({r, l, d - alpha - j, j, alpha});
    }
  auto key = [](const CaseIndex& c) { return std::make_tuple(-(c.r + c.l), -c.alpha, -c.j, -c.k, -c.r); };
  std::stable_sort(out.begin(), out.end(),
                   [&](const CaseIndex& a, const CaseIndex& b) { return key(a) < key(b); });
  return out;
}

GaussianRational case_weight(const CaseIndex& c, WeightConvention w) {
  if (w == WeightConvention::Displayed) return GaussianRational(1);
  // alpha! is 1 for |alpha| <= 1; larger |alpha| only multiplies vanishing terms.
  int e = c.alpha + c.j + c.k + 1;
  GaussianRational v = gpow(GaussianRational(0, -1), e);
  Rational f = 1;
  for (int t = 2; t <= c.j + c.k + 1; ++t) f *= t;
  return v / GaussianRational(f);
}

namespace {

RationalXi trace_product(const BoundaryModel& m, const SymbolExpr& left, const SymbolExpr& right,
                         TracePath path) {
  if (path == TracePath::Symbolic) return identity_coef_of_product(left, right);
  MatrixRep rep(AlgebraSignature::make(m.sig.p, m.sig.q));
  SymbolExpr prod = left * right;
  RationalXi acc;
  for (const auto& [w, c] : prod.terms()) {
    GaussianRational t = rep.normalized_trace(rep.of_word(w));
    if (!t.is_zero()) acc += c.scaled(ScalarPoly(t));
  }
  return acc;
}

}  // namespace

RationalXi case_integrand(const BoundaryModel& m, const CaseIndex& c, int p1, int p2,
                          const EvalOptions& opt) {
  if (c.alpha > 0) return RationalXi();  // tangential x-derivatives vanish at x0
  SymbolJet sr = symbol_of(m, p1, c.r);
  SymbolJet sl = symbol_of(m, p2, c.l);
  SymbolExpr left = pi_plus(derive_xi(derive(sr, Deriv::Xn, c.j).value, c.k));
  SymbolExpr right = derive_xi(derive(sl, Deriv::Xn, c.k).value, c.j + 1);
  RationalXi tr = trace_product(m, left, right, opt.trace);
  const ScalarPoly measure = opt.cosphere_measure ? *opt.cosphere_measure
                                                  : sphere_measure(static_cast<int>(m.sphere_coords().size()));
  const auto coords = m.sphere_coords();
  const ScalarPoly total = m.sig.total_dim();
  return tr.map_coeffs([&](const ScalarPoly& p) {
    ScalarPoly v = integrate_sphere(p, coords, measure);
    if (opt.normal_coordinates) v = m.normal_coordinate_reduce(v);
    return v * total;
  });
}

UnitValue eval_case(const BoundaryModel& m, const CaseIndex& c, int p1, int p2, const EvalOptions& opt) {
  RationalXi f = case_integrand(m, c, p1, p2, opt);
  if (f.is_zero()) return {};
  ScalarPoly v = f.integrate_line().scaled(case_weight(c, opt.weight));
  v *= ScalarPoly::var(opt.integrate_boundary ? unit::vol_boundary : unit::dx);
  if (v.size() > 1) throw std::runtime_error("case " + c.str() + " does not reduce to one unit: " + v.str());
  return UnitValue::from_poly(v);
}

std::string Scenario::label_of(const CaseIndex& c) const {
  for (const auto& [idx, lab] : labels)
    if (idx == c) return lab;
  return c.str();
}

BoundaryModel Scenario::model() const { return BoundaryModel::make(n, sig); }

namespace {

UnitValue uv(long num, long den, std::vector<std::string> units, bool imag = false) {
  std::map<std::string, int> u;
  for (const auto& s : units) u[s] += 1;
  Rational r = make_rational(num, den);
  return {imag ? GaussianRational(0, r) : GaussianRational(r), u};
}

ExpectedValue ev(UnitValue v, std::string src) { return {std::move(v), std::move(src)}; }

std::vector<std::pair<CaseIndex, std::string>> a_labels(int r, int l) {
  return {{{r, l, 0, 0, 1}, "aI"}, {{r, l, 0, 1, 0}, "aII"}, {{r, l, 1, 0, 0}, "aIII"}};
}

Scenario dim4_11() {
  Scenario s;
  s.name = "dim4-(1,1)";
  s.n = 4;
  s.p1 = s.p2 = 1;
  s.sig = AlgebraSignature::make(2, 2);
  // The four-dimensional case table labels the cosphere measure Omega3.
  s.options.cosphere_measure = ScalarPoly::var(unit::omega(3));
  s.labels = a_labels(-1, -1);
  s.labels.push_back({{-2, -1, 0, 0, 0}, "b"});
  s.labels.push_back({{-1, -2, 0, 0, 0}, "c"});
  const std::vector<std::string> u{unit::pi, unit::h1, unit::omega(3), unit::dx};
  s.expected_cases["aI"] = ev({}, "n=4 case aI: tangential derivatives vanish");
  s.expected_cases["aII"] = ev(uv(-3, 4, u), "n=4 case aII");
  s.expected_cases["aIII"] = ev(uv(3, 4, u), "n=4 case aIII");
  s.expected_cases["b"] = ev(uv(3, 4, u), "n=4 case b");
  s.expected_cases["c"] = ev(uv(-3, 4, u), "n=4 case c");
  s.expected_total = ev({}, "n=4 boundary term vanishes");
  return s;
}

Scenario dim6_22() {
  Scenario s;
  s.name = "dim6-(2,2)";
  s.n = 6;
  s.p1 = s.p2 = 2;
  s.sig = AlgebraSignature::with_total(4, 2, ScalarPoly::var(unit::total_dim));
  s.labels = a_labels(-2, -2);
  s.labels.push_back({{-2, -3, 0, 0, 0}, "b"});
  s.labels.push_back({{-3, -2, 0, 0, 0}, "c"});
  const std::vector<std::string> u{unit::total_dim, unit::pi, unit::h1, unit::omega(4), unit::dx};
  s.expected_cases["aI"] = ev({}, "n=6 case aI: tangential derivatives vanish");
  s.expected_cases["aII"] = ev(uv(-5, 64, u), "n=6 case aII");
  s.expected_cases["aIII"] = ev(uv(5, 64, u), "n=6 case aIII");
  s.expected_cases["b"] = ev(uv(-15, 64, u), "n=6 case b");
  s.expected_cases["c"] = ev(uv(15, 64, u), "n=6 case c = -case b");
  s.expected_total = ev({}, "n=6 boundary term vanishes");
  return s;
}

Scenario dim3_11() {
  Scenario s;
  s.name = "dim3-(1,1)";
  s.n = 3;
  s.p1 = s.p2 = 1;
  s.sig = AlgebraSignature::make(1, 2);  // totalDim 4, tr[c(dx_n)^2] = -4
  s.options.weight = WeightConvention::Displayed;
  s.options.integrate_boundary = true;
  s.alternative_weight = WeightConvention::General;
  s.labels = {{{-1, -1, 0, 0, 0}, "phi"}};
  s.expected_total = ev(uv(2, 1, {unit::pi, unit::pi, unit::vol_boundary}, true), "n=3 boundary term");
  return s;
}

Scenario dim5_22() {
  Scenario s;
  s.name = "dim5-(2,2)";
  s.n = 5;
  s.p1 = s.p2 = 2;
  s.sig = AlgebraSignature::with_total(3, 2, ScalarPoly::var(unit::total_dim));
  s.options.weight = WeightConvention::Displayed;
  s.options.integrate_boundary = true;
  s.alternative_weight = WeightConvention::General;
  s.labels = {{{-2, -2, 0, 0, 0}, "phi"}};
  s.expected_total =
      ev(uv(1, 8, {unit::total_dim, unit::pi, unit::omega(3), unit::vol_boundary}, true), "n=5 (2,2) boundary term");
  return s;
}

Scenario dim5_21() {
  Scenario s;
  s.name = "dim5-(2,1)";
  s.n = 5;
  s.p1 = 2;
  s.p2 = 1;
  s.sig = AlgebraSignature::with_total(3, 2, ScalarPoly::var(unit::total_dim));
  s.labels = a_labels(-2, -1);
  s.labels.push_back({{-2, -2, 0, 0, 0}, "b"});
  s.labels.push_back({{-3, -1, 0, 0, 0}, "c"});
  for (const char* c : {"aI", "aII", "aIII", "b", "c"}) s.expected_cases[c] = ev({}, std::string("n=5 (2,1) case ") + c);
  s.expected_total = ev({}, "n=5 (2,1) boundary term vanishes");
  return s;
}

Scenario dim4_21() {
  Scenario s;
  s.name = "dim4-(2,1)";
  s.n = 4;
  s.p1 = 2;
  s.p2 = 1;
  s.sig = AlgebraSignature::make(2, 2);
  s.options.cosphere_measure = ScalarPoly::var(unit::omega(3));
  s.labels = {{{-2, -1, 0, 0, 0}, "phi"}};
  s.expected_total = ev({}, "n=4 (2,1) boundary term vanishes");
  return s;
}

std::string show(const UnitValue& v) { return v.str(); }

}  // namespace

std::vector<Scenario> all_scenarios() { return {dim3_11(), dim4_11(), dim4_21(), dim5_21(), dim5_22(), dim6_22()}; }

Scenario find_scenario(int n, int p1, int p2) {
  for (auto& s : all_scenarios())
    if (s.n == n && s.p1 == p1 && s.p2 == p2) return s;
  throw std::invalid_argument("unregistered scenario: dim " + std::to_string(n) + " powers " +
                              std::to_string(p1) + "," + std::to_string(p2));
}

Scenario with_signature(Scenario s, int p, int q) {
  if (p + q != s.n) throw std::invalid_argument("signature needs p + q = " + std::to_string(s.n));
  if (s.sig.symbolic_total()) s.sig = AlgebraSignature::with_total(p, q, *s.sig.total_override);
  else s.sig = AlgebraSignature::make(p, q);
  return s;
}

bool BoundaryReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

BoundaryReport phi_total(const Scenario& s, TracePath path) {
  BoundaryModel m = s.model();
  EvalOptions opt = s.options;
  opt.trace = path;
  auto cases = enumerate_cases(s.n, s.p1, s.p2);
  auto rank = [&](const CaseIndex& c) {
    for (std::size_t k = 0; k < s.labels.size(); ++k)
      if (s.labels[k].first == c) return k;
    return s.labels.size();
  };
  std::stable_sort(cases.begin(), cases.end(),
                   [&](const CaseIndex& a, const CaseIndex& b) { return rank(a) < rank(b); });

  // Cases are independent; evaluate concurrently, merge in enumeration order.
  std::vector<std::future<std::pair<UnitValue, std::optional<UnitValue>>>> jobs;
  for (const auto& c : cases)
    jobs.push_back(std::async(std::launch::async, [&, c] {
      UnitValue v = eval_case(m, c, s.p1, s.p2, opt);
      std::optional<UnitValue> alt;
      if (s.alternative_weight) {
        EvalOptions o2 = opt;
        o2.weight = *s.alternative_weight;
        alt = eval_case(m, c, s.p1, s.p2, o2);
      }
      return std::make_pair(v, alt);
    }));

  BoundaryReport rep;
  rep.scenario = s.name;
  rep.n = s.n;
  rep.p1 = s.p1;
  rep.p2 = s.p2;
  rep.p = s.sig.p;
  rep.q = s.sig.q;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    auto [v, alt] = jobs[k].get();
    CaseResult cr{cases[k], s.label_of(cases[k]), v, alt};
    rep.total = rep.total + v;
    if (alt) rep.alternative_total = rep.alternative_total.value_or(UnitValue()) + *alt;
    rep.cases.push_back(cr);
  }
  for (const auto& cr : rep.cases) {
    auto it = s.expected_cases.find(cr.label);
    if (it == s.expected_cases.end()) continue;
    rep.checks.push_back({"case " + cr.label + " [" + it->second.source + "]", show(it->second.value),
                          show(cr.value), it->second.value == cr.value});
  }
  if (s.expected_total)
    rep.checks.push_back({"total [" + s.expected_total->source + "]", show(s.expected_total->value),
                          show(rep.total), s.expected_total->value == rep.total});
  return rep;
}

BoundaryReport phi_total(const Scenario& s) { return phi_total(s, TracePath::Symbolic); }

std::optional<ResKind> parse_res_kind(const std::string& name) {
  static const std::map<std::string, ResKind> k{{"res11", ResKind::Res11},       {"res21", ResKind::Res21},
                                                {"res22", ResKind::Res22},       {"res23", ResKind::Res23},
                                                {"res21_51", ResKind::Res21_51}, {"res22_51", ResKind::Res22_51}};
  auto it = k.find(name);
  if (it == k.end()) return std::nullopt;
  return it->second;
}

std::string res_kind_name(ResKind k) {
  switch (k) {
    case ResKind::Res11: return "res11";
    case ResKind::Res21: return "res21";
    case ResKind::Res22: return "res22";
    case ResKind::Res23: return "res23";
    case ResKind::Res21_51: return "res21_51";
    case ResKind::Res22_51: return "res22_51";
  }
  return "?";
}

ResPartial res_partial(ResKind kind) {
  Scenario s;
  CaseIndex c;
  switch (kind) {
    case ResKind::Res11: s = dim4_11(); c = {-1, -1, 0, 1, 0}; break;
    case ResKind::Res21: s = dim4_11(); c = {-2, -1, 0, 0, 0}; break;
    case ResKind::Res22: s = dim6_22(); c = {-2, -2, 0, 1, 0}; break;
    case ResKind::Res23: s = dim6_22(); c = {-2, -3, 0, 0, 0}; break;
    case ResKind::Res21_51: s = dim5_21(); c = {-2, -1, 0, 1, 0}; break;
    case ResKind::Res22_51: s = dim5_21(); c = {-2, -2, 0, 0, 0}; break;
  }
  s.options.integrate_boundary = true;
  UnitValue v = eval_case(s.model(), c, s.p1, s.p2, s.options);
  // I_Gr,b = -(n-1) h'(0) Vol_dM
  UnitValue multiple;
  if (!v.is_zero()) {
    std::map<std::string, int> u = v.units();
    for (const auto& name : {unit::h1, unit::vol_boundary}) {
      auto it = u.find(name);
      if (it == u.end()) throw std::runtime_error("res-partial value lacks " + name + ": " + v.str());
      if (--it->second == 0) u.erase(it);
    }
    u[igrb_unit] += 1;
    multiple = UnitValue(v.coef() / GaussianRational(-(s.n - 1)), u);
  }
  return {kind, v, multiple};
}

}  // namespace wres
