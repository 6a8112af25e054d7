#include "wres/cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wres/boundary.hpp"
#include "wres/oracle.hpp"
#include "wres/warped.hpp"

namespace wres {

using nlohmann::json;

ConfigError::ConfigError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

// Exact value first, then the double fallback for exponent notation.
std::optional<Rational> parse_value(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
  }
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return Rational(v);
}

std::string trim(const std::string& s, std::size_t& lead) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    lead = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  lead = b;
  return s.substr(b, e - b + 1);
}

}  // namespace

HeatConfig parse_heat_config(const std::string& text) {
  HeatConfig cfg;
  cfg.data.vol = ScalarPoly();
  std::map<std::string, int> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    std::size_t lead = 0;
    if (trim(body, lead).empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, static_cast<int>(body.find_last_not_of(" \t\r") + 2), "expected '='");
    std::size_t key_col = 0, val_col = 0;
    std::string key = trim(body.substr(0, eq), key_col);
    std::string val = trim(body.substr(eq + 1), val_col);
    val_col += eq + 1;
    if (key.empty()) throw ConfigError(line, static_cast<int>(eq + 1), "missing key");
    if (key == "r_M") key = "r";
    if (seen.count(key)) throw ConfigError(line, static_cast<int>(key_col + 1), "duplicate key '" + key + "'");
    seen[key] = line;
    if (val.empty()) throw ConfigError(line, static_cast<int>(val_col + 1), "missing value for '" + key + "'");

    if (key == "reading") {
      if (val == "printed") cfg.reading = BoundaryReading::Printed;
      else if (val == "derived") cfg.reading = BoundaryReading::Derived;
      else throw ConfigError(line, static_cast<int>(val_col + 1), "reading must be printed or derived");
      continue;
    }
    ScalarPoly* field = cfg.data.field(key);
    bool integral = key == "p" || key == "q" || key == "leaf_dim";
    if (!field && !integral) throw ConfigError(line, static_cast<int>(key_col + 1), "unknown key '" + key + "'");
    auto v = parse_value(val);
    if (!v) throw ConfigError(line, static_cast<int>(val_col + 1), "malformed value '" + val + "'");
    if (integral) {
      if (v->get_den() != 1 || sgn(*v) < 0 || *v > 64)
        throw ConfigError(line, static_cast<int>(val_col + 1), key + " must be an integer in 0..64");
      long n = v->get_num().get_si();
      if (key == "q") cfg.q = static_cast<int>(n);
      else if (key == "p") cfg.leaf_dim = 2 * n;
      else cfg.leaf_dim = n;
      continue;
    }
    *field = ScalarPoly(*v);
  }
  if (seen.count("p") && seen.count("leaf_dim"))
    throw ConfigError(seen["leaf_dim"], 1, "give either p or leaf_dim, not both");
  if (!seen.count("p") && !seen.count("leaf_dim")) throw ConfigError(line + 1, 1, "missing key 'p'");
  if (!seen.count("q")) throw ConfigError(line + 1, 1, "missing key 'q'");
  if (cfg.leaf_dim + cfg.q == 0) throw ConfigError(seen["q"], 1, "p + q must be positive");
  if (!seen.count("r2")) cfg.data.r2 = cfg.data.r * cfg.data.r;
  return cfg;
}

namespace {

json exact_gauss(const GaussianRational& g) {
  if (sgn(g.im) == 0) return rat_str(g.re);
  return json{{"re", rat_str(g.re)}, {"im", rat_str(g.im)}};
}

json numeric_complex(const std::complex<double>& z) {
  if (z.imag() == 0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json unit_json(const UnitValue& v) {
  auto n = v.numeric();
  return json{{"coef", exact_gauss(v.coef())},
              {"unit", v.unit_list()},
              {"numeric", n ? numeric_complex(*n) : json(nullptr)}};
}

std::vector<std::string> radical_units(const Radical& r) {
  std::vector<std::string> u;
  for (const auto& [p, e] : r.roots()) u.push_back(std::to_string(p) + "^(" + rat_str(e) + ")");
  const Rational& pe = r.pi_exponent();
  if (sgn(pe) != 0) {
    if (pe == 1) u.push_back("pi");
    else if (pe.get_den() == 1) u.push_back("pi^" + rat_str(pe));
    else u.push_back("pi^(" + rat_str(pe) + ")");
  }
  return u;
}

json radical_json(const Radical& r) {
  return json{{"coef", rat_str(r.coef())}, {"unit", radical_units(r)}, {"numeric", r.value()}};
}

json heat_term_json(const HeatTerm& t) {
  if (t.bracket.symbols().empty()) {
    GaussianRational c = t.bracket.constant_term();
    if (sgn(c.im) == 0) return radical_json(t.factor * Radical(c.re));
  }
  auto n = t.numeric();
  return json{{"factor", radical_json(t.factor)},
              {"bracket", t.bracket.str()},
              {"numeric", n ? json(*n) : json(nullptr)}};
}

json rw_term_json(const RWTerm& t) {
  return json{{"factor", radical_json(t.factor)},
              {"converged", t.converged},
              {"numeric", {{"integral", t.integral}, {"error", t.error}, {"value", t.value()}}}};
}

json check_json(const Check& c) {
  return json{{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}};
}

std::pair<std::string, std::string> split_pair(const std::string& s, const std::string& what) {
  std::size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument(what + " expects two comma-separated values, got '" + s + "'");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": malformed integer '" + s + "'");
  return v;
}

double to_double(const std::string& s, const std::string& what) {
  auto v = parse_value(s);
  if (!v) throw std::invalid_argument(what + ": malformed number '" + s + "'");
  return v->get_d();
}

// "-" sends the document to out; otherwise it goes to the file and a summary to out.
void emit(const json& doc, const std::string& path, std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void print_checks(const json& checks, std::ostream& out) {
  for (const auto& c : checks)
    out << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ": expected "
        << c["expected"].get<std::string>() << ", got " << c["got"].get<std::string>() << "\n";
}

Check make_check(std::string name, std::string expected, std::string got) {
  bool pass = expected == got;
  return {std::move(name), std::move(expected), std::move(got), pass};
}

struct BoundaryArgs {
  int dim = 0;
  std::string powers;
  std::optional<int> p, q;
  std::string json_path;
};

int cmd_verify_boundary(const BoundaryArgs& a, std::ostream& out) {
  auto [s1, s2] = split_pair(a.powers, "--powers");
  int p1 = to_int(s1, "--powers"), p2 = to_int(s2, "--powers");
  Scenario s = find_scenario(a.dim, p1, p2);
  if (a.p.has_value() != a.q.has_value()) throw std::invalid_argument("--p and --q go together");
  if (a.p) s = with_signature(s, *a.p, *a.q);
  BoundaryReport r = phi_total(s);

  json cases = json::array();
  for (const auto& c : r.cases) {
    json item{{"index", {{"r", c.index.r}, {"l", c.index.l}, {"k", c.index.k}, {"j", c.index.j}, {"alpha", c.index.alpha}}},
              {"label", c.label},
              {"value", unit_json(c.value)}};
    if (c.alternative) item["alternative"] = unit_json(*c.alternative);
    cases.push_back(item);
  }
  json totals{{"phi", unit_json(r.total)}};
  if (r.alternative_total) totals["alternative"] = unit_json(*r.alternative_total);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  json doc{{"command", "verify-boundary"},
           {"inputs", {{"dim", r.n}, {"powers", {r.p1, r.p2}}, {"p", r.p}, {"q", r.q}}},
           {"scenario", r.scenario},
           {"cases", cases},
           {"totals", totals},
           {"checks", checks},
           {"pass", r.all_pass()}};
  if (a.json_path == "-") {
    emit(doc, "-", out);
  } else {
    if (!a.json_path.empty()) emit(doc, a.json_path, out);
    out << "scenario " << r.scenario << " (p=" << r.p << ", q=" << r.q << ")\n";
    for (const auto& c : r.cases) out << "  " << c.label << " " << c.index.str() << ": " << c.value.str() << "\n";
    out << "total: " << r.total.str() << "\n";
    if (r.alternative_total) out << "total (alternative weight): " << r.alternative_total->str() << "\n";
    print_checks(checks, out);
  }
  return r.all_pass() ? 0 : 1;
}

struct HeatArgs {
  std::string config;
  std::string json_path;
};

int cmd_heat(const HeatArgs& a, std::ostream& out) {
  std::ifstream f(a.config, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read config " + a.config);
  std::stringstream buf;
  buf << f.rdbuf();
  HeatConfig cfg = parse_heat_config(buf.str());
  AlgebraSignature sig = cfg.signature();
  bool boundary = cfg.data.has_boundary();
  HeatCoeffs co = boundary ? boundary_coeffs(sig, cfg.data, cfg.reading) : interior_coeffs(sig, cfg.data);
  HeatConstants k = derive_heat_constants(sig);

  std::vector<Check> checks{
      make_check("tr E per unit trace", "-1/4 r", rat_str(k.trE) + " r"),
      make_check("tr E^2 per unit trace", "1/16 (r^2 + ||R^perp||^2)", rat_str(k.trE2) + " (r^2 + ||R^perp||^2)"),
      make_check("tr Omega^2 per unit trace", "-1/8 (|R|^2 + ||R^perp||^2)",
                 rat_str(k.trOmega2) + " (|R|^2 + ||R^perp||^2)"),
      make_check("a2 interior r weight", "-1/12", rat_str(k.a2_r)),
  };
  if (!boundary) {
    checks.push_back(make_check("a1 vanishes without boundary", "0", co.a[1].is_zero() ? "0" : co.a[1].str()));
    checks.push_back(make_check("a3 vanishes without boundary", "0", co.a[3].is_zero() ? "0" : co.a[3].str()));
  }
  json coeffs = json::array();
  for (const auto& t : co.a) coeffs.push_back(heat_term_json(t));
  json inputs = json::object();
  for (const auto& name : CurvatureData::field_names()) {
    const ScalarPoly* v = cfg.data.field(name);
    if (!v->is_zero()) inputs[name] = exact_gauss(v->constant_term());
  }
  inputs["leaf_dim"] = cfg.leaf_dim;
  inputs["q"] = cfg.q;
  inputs["reading"] = cfg.reading == BoundaryReading::Printed ? "printed" : "derived";
  json jchecks = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    jchecks.push_back(check_json(c));
    pass = pass && c.pass;
  }
  json doc{{"command", "heat"},
           {"inputs", inputs},
           {"boundary", boundary},
           {"total_dim", sig.total_dim().str()},
           {"coefficients", coeffs},
           {"checks", jchecks},
           {"pass", pass}};
  if (a.json_path == "-") {
    emit(doc, "-", out);
  } else {
    if (!a.json_path.empty()) emit(doc, a.json_path, out);
    out << "dim F = " << cfg.leaf_dim << ", q = " << cfg.q << (boundary ? ", with boundary\n" : ", closed\n");
    for (int i = 0; i < 5; ++i) out << "  a" << i << " = " << co.a[i].str() << "\n";
    print_checks(jchecks, out);
  }
  return pass ? 0 : 1;
}

struct RWArgs {
  std::string f;
  std::string interval;
  std::string curv = "0";
  std::string base_vol = "1";
  std::optional<std::string> lambda;
  std::string json_path;
};

int cmd_rw(const RWArgs& a, std::ostream& out) {
  RWModel m;
  m.f = WarpFunction::parse(a.f);
  auto [sa, sb] = split_pair(a.interval, "--interval");
  m.a = to_double(sa, "--interval");
  m.b = to_double(sb, "--interval");
  double curv = to_double(a.curv, "--curv");
  m.base = BaseCurvature::constant(curv);
  m.base_vol = to_double(a.base_vol, "--base-vol");
  std::optional<double> lambda;
  if (a.lambda) lambda = to_double(*a.lambda, "--lambda");
  m.validate();
  AlgebraSignature sig = AlgebraSignature::make(1, 3);
  RWSpectral sp = rw_spectral_coeffs(m, sig);
  RWLowerVolumes lv = rw_lower_volumes(m, sig);

  double mid = (m.a + m.b) / 2;
  FrameTensor exact = frame_tensor(frame_curvature(m, mid));
  FrameTensor fd = numeric_frame_tensor(m, mid, {0.1, -0.2, 0.15});
  double fd_err = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) fd_err = std::max(fd_err, std::abs(exact[i][j][k][l] - fd[i][j][k][l]));

  bool converged = true;
  json readings = json::object();
  for (const auto& [reading, terms] : sp.a) {
    json arr = json::array();
    for (const auto& t : terms) {
      arr.push_back(rw_term_json(t));
      converged = converged && t.converged;
    }
    readings[reading_name(reading)] = arr;
  }
  for (const RWTerm* t : {&lv.vol_n_minus_3, &lv.vol_n_minus_1, &lv.vol_top_literal, &lv.vol_top_density})
    converged = converged && t->converged;

  std::ostringstream err_text;
  err_text << std::setprecision(3) << std::scientific << fd_err;
  double worst = *std::max_element(sp.residual.begin(), sp.residual.begin() + 3);
  std::ostringstream res_text;
  res_text << std::setprecision(3) << std::scientific << worst;
  std::vector<Check> checks{
      {"quadrature converged", "true", converged ? "true" : "false", converged},
      {"curvature vs finite differences at midpoint", "<= 1e-6", err_text.str(), fd_err <= 1e-6},
      {"a0..a2 printed vs simplified", "<= 1e-9", res_text.str(), worst <= 1e-9},
  };

  json doc{{"command", "rw"},
           {"inputs",
            {{"f", m.f.str()},
             {"interval", {sa, sb}},
             {"curv", a.curv},
             {"base_vol", a.base_vol},
             {"lambda", a.lambda ? json(*a.lambda) : json(nullptr)}}},
           {"readings", readings},
           {"numeric", {{"residual", sp.residual}, {"fd_max_error", fd_err}}},
           {"lower_volumes",
            {{"vol_n_minus_3", rw_term_json(lv.vol_n_minus_3)},
             {"vol_n_minus_1", rw_term_json(lv.vol_n_minus_1)},
             {"vol_top_literal", rw_term_json(lv.vol_top_literal)},
             {"vol_top_density", rw_term_json(lv.vol_top_density)},
             {"k_outside_range", lv.k_outside_range}}},
           {"converged", converged}};

  if (lambda) {
    // tr F(D^2/Lambda^2) ~ sum_k Lambda^{4-k} F_{4-k} a_k with F(s) = e^{-s}.
    Cutoff c{[](double s) { return std::exp(-s); }, {}, INFINITY};
    Moments mo = spectral_moments(c);
    json action = json::object();
    for (const auto& [reading, terms] : sp.a) {
      double sum = 0;
      for (int k = 0; k < 5; ++k) sum += std::pow(*lambda, 4 - k) * mo.F[4 - k] * terms[k].value();
      action[reading_name(reading)] = sum;
    }
    doc["numeric"]["spectral_action"] = action;
    doc["numeric"]["cutoff_moments"] = mo.F;
  }

  json jchecks = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    jchecks.push_back(check_json(c));
    pass = pass && c.pass;
  }
  doc["checks"] = jchecks;
  doc["pass"] = pass;
  if (a.json_path == "-") {
    emit(doc, "-", out);
  } else {
    if (!a.json_path.empty()) emit(doc, a.json_path, out);
    out << "f(t) = " << m.f.str() << " on [" << m.a << ", " << m.b << "], c = " << curv << "\n";
    for (const auto& [reading, terms] : sp.a) {
      out << "  " << reading_name(reading) << ":";
      for (const auto& t : terms) out << " " << t.value();
      out << "\n";
    }
    print_checks(jchecks, out);
  }
  return pass ? 0 : 1;
}

struct OracleArgs {
  std::uint64_t seed = 0;
  int count = 100;
  std::string json_path;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  if (a.count < 0) throw std::invalid_argument("--count must be nonnegative");
  json families = json::array();
  bool pass = true;
  if (a.count > 0) {
    for (const auto& f : run_oracles(a.seed, a.count)) {
      families.push_back({{"name", f.name},
                          {"count", f.count},
                          {"passed", f.passed},
                          {"failures", f.failures},
                          {"numeric", {{"max_error", f.max_error}}}});
      pass = pass && f.pass();
    }
  }
  json doc{{"command", "oracle"},
           {"inputs", {{"seed", a.seed}, {"count", a.count}}},
           {"families", families},
           {"pass", pass}};
  if (a.json_path == "-") {
    emit(doc, "-", out);
  } else {
    if (!a.json_path.empty()) emit(doc, a.json_path, out);
    for (const auto& f : families)
      out << (f["passed"] == f["count"] ? "PASS " : "FAIL ") << f["name"].get<std::string>() << ": "
          << f["passed"].get<int>() << "/" << f["count"].get<int>() << "\n";
    if (families.empty()) out << "no oracle cases requested\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residue, heat-coefficient and warped-product calculator", "wres"};
  app.require_subcommand(1);

  BoundaryArgs ba;
  auto* vb = app.add_subcommand("verify-boundary", "Evaluate the boundary term for a registered scenario");
  vb->add_option("--dim", ba.dim, "Manifold dimension")->required();
  vb->add_option("--powers", ba.powers, "Operator powers p1,p2")->required();
  vb->add_option("--p", ba.p, "Leaf dimension override");
  vb->add_option("--q", ba.q, "Codimension override");
  vb->add_option("--json", ba.json_path, "Write the JSON report here ('-' for stdout)");

  HeatArgs ha;
  auto* hc = app.add_subcommand("heat", "Heat coefficients from a flat curvature config");
  hc->add_option("--config", ha.config, "key = value file")->required();
  hc->add_option("--json", ha.json_path, "Write the JSON report here ('-' for stdout)");

  RWArgs ra;
  auto* rw = app.add_subcommand("rw", "Spectral coefficients of I x_f M^3");
  rw->add_option("--f", ra.f, "Warp function of t")->required();
  rw->add_option("--interval", ra.interval, "Interval a,b")->required();
  rw->add_option("--curv", ra.curv, "Constant sectional curvature of M");
  rw->add_option("--base-vol", ra.base_vol, "Volume of M");
  rw->add_option("--lambda", ra.lambda, "Cutoff scale for the spectral action");
  rw->add_option("--json", ra.json_path, "Write the JSON report here ('-' for stdout)");

  OracleArgs oa;
  auto* oc = app.add_subcommand("oracle", "Randomized oracle suite");
  oc->add_option("--seed", oa.seed, "Random seed");
  oc->add_option("--count", oa.count, "Cases per family");
  oc->add_option("--json", oa.json_path, "Write the JSON report here ('-' for stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (*vb) status = cmd_verify_boundary(ba, out);
    else if (*hc) status = cmd_heat(ha, out);
    else if (*rw) status = cmd_rw(ra, out);
    else status = cmd_oracle(oa, out);
  } catch (const WarpParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WarpDomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  err << "wall time " << std::fixed << std::setprecision(3) << took.count() << " s\n";
  return status;
}

}  // namespace wres
