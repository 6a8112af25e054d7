#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wres/cli.hpp"
#include "wres/oracle.hpp"

using namespace wres;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = run_cli(args, out, err);
  return {s, out.str(), err.str()};
}

std::string write_config(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("wres_test_" + name + ".cfg");
  std::ofstream(path) << text;
  return path.string();
}

ConfigError config_error(const std::string& text) {
  try {
    parse_heat_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("no config error for: " << text);
  return ConfigError(0, 0, "");
}

}  // namespace

TEST_CASE("verify-boundary dim 4 powers 1,1") {
  Run r = run({"verify-boundary", "--dim", "4", "--powers", "1,1", "--json", "-"});
  CHECK(r.status == 0);
  json d = r.doc();
  REQUIRE(d["cases"].size() == 5);
  CHECK(d["totals"]["phi"]["coef"] == "0");
  std::vector<std::string> labels;
  for (const auto& c : d["cases"]) labels.push_back(c["label"]);
  CHECK(labels == std::vector<std::string>{"aI", "aII", "aIII", "b", "c"});
  CHECK(d["cases"][1]["value"]["coef"] == "-3/4");
  CHECK(d["cases"][1]["value"]["unit"] == json({"pi", "h'(0)", "Omega3", "dx'"}));
  CHECK(d["pass"] == true);
}

TEST_CASE("verify-boundary dim 5 powers 2,2") {
  Run r = run({"verify-boundary", "--dim", "5", "--powers", "2,2", "--json", "-"});
  CHECK(r.status == 0);
  json phi = r.doc()["totals"]["phi"];
  CHECK(phi["coef"] == json({{"re", "0"}, {"im", "1/8"}}));
  CHECK(phi["unit"] == json({"ltilde*2^q", "pi", "Omega3", "Vol_dM"}));
  CHECK(phi["numeric"].is_null());
}

TEST_CASE("verify-boundary error paths") {
  Run r = run({"verify-boundary", "--dim", "9", "--powers", "1,1"});
  CHECK(r.status != 0);
  CHECK(r.err.find("unregistered scenario") != std::string::npos);
  CHECK(run({"verify-boundary", "--dim", "4", "--powers", "1"}).status != 0);
  CHECK(run({"verify-boundary", "--dim", "4", "--powers", "1,1", "--p", "2"}).status != 0);
  CHECK(run({"no-such-command"}).status != 0);
}

TEST_CASE("verify-boundary signature override") {
  Run r = run({"verify-boundary", "--dim", "4", "--powers", "1,1", "--p", "1", "--q", "3", "--json", "-"});
  CHECK(r.status == 0);
  CHECK(r.doc()["inputs"]["p"] == 1);
  CHECK(r.doc()["inputs"]["q"] == 3);
}

TEST_CASE("heat config parsing") {
  HeatConfig c = parse_heat_config("# comment\np = 2\nq = 2\nr_M = 1/2   # trailing\nvol = 0.25\nric2 = 1e-3\n");
  CHECK(c.leaf_dim == 4);
  CHECK(c.q == 2);
  CHECK(c.data.r == ScalarPoly(Rational(1, 2)));
  CHECK(c.data.r2 == ScalarPoly(Rational(1, 4)));
  CHECK(c.data.vol == ScalarPoly(Rational(1, 4)));
  CHECK(c.data.ric2.constant_term().re == Rational(1e-3));
  CHECK(parse_heat_config("leaf_dim = 3\nq = 1\n").leaf_dim == 3);
  CHECK(parse_heat_config("p = 1\nq = 1\nreading = printed\n").reading == BoundaryReading::Printed);

  ConfigError unknown = config_error("p = 2\nq = 2\n  foo = 1\n");
  CHECK(unknown.line() == 3);
  CHECK(unknown.column() == 3);
  ConfigError bad_value = config_error("p = 2\nq = x1\n");
  CHECK(bad_value.line() == 2);
  CHECK(bad_value.column() == 5);
  CHECK(config_error("p 2\n").line() == 1);
  CHECK(config_error("p = 2\np = 3\nq = 1\n").line() == 2);
  CHECK(config_error("p = 1/2\nq = 1\n").column() == 5);
  CHECK(config_error("q = 1\n").line() == 2);
  CHECK(config_error("p = 1\nq = 1\nreading = other\n").line() == 3);
}

TEST_CASE("heat closed flat config") {
  std::string path = write_config("flat", "p = 2\nq = 2\nvol = 1\n");
  Run r = run({"heat", "--config", path, "--json", "-"});
  CHECK(r.status == 0);
  json a = r.doc()["coefficients"];
  // (4 pi)^{-3} * 16
  CHECK(a[0]["coef"] == "1/4");
  CHECK(a[0]["unit"] == json({"pi^-3"}));
  for (int k = 1; k < 5; ++k) CHECK(a[k]["coef"] == "0");
  CHECK(r.doc()["boundary"] == false);
}

TEST_CASE("heat unit scalar curvature") {
  std::string path = write_config("r1", "p = 2\nq = 2\nr_M = 1\nvol = 1\n");
  Run r = run({"heat", "--config", path, "--json", "-"});
  CHECK(r.status == 0);
  json a2 = r.doc()["coefficients"][2];
  // -1/(12 * 4 * pi^3)
  CHECK(a2["coef"] == "-1/48");
  CHECK(a2["unit"] == json({"pi^-3"}));
  CHECK(a2["numeric"].get<double>() == doctest::Approx(-1 / (48 * std::pow(M_PI, 3))).epsilon(1e-14));
  for (const auto& c : r.doc()["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("heat with boundary data") {
  std::string path = write_config("bd", "p = 2\nq = 2\nvol = 1\nvol_boundary = 1\nL = 3\n");
  Run r = run({"heat", "--config", path, "--json", "-"});
  CHECK(r.status == 0);
  CHECK(r.doc()["boundary"] == true);
  CHECK(r.doc()["coefficients"][1]["coef"] != "0");
}

TEST_CASE("heat error paths") {
  Run bad = run({"heat", "--config", write_config("bad", "p = 2\nq = 2\nfoo = 1\n")});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("line 3, column 1") != std::string::npos);
  CHECK(run({"heat", "--config", "/nonexistent/wres.cfg"}).status == 2);
}

TEST_CASE("rw flat warp") {
  Run r = run({"rw", "--f", "1", "--interval", "0,1", "--curv", "0", "--json", "-"});
  CHECK(r.status == 0);
  for (const auto& [name, terms] : r.doc()["readings"].items())
    CHECK(terms[2]["numeric"]["value"].get<double>() == 0.0);
}

TEST_CASE("rw exponential warp") {
  Run r = run({"rw", "--f", "exp(t)", "--interval", "0,1", "--curv", "1", "--lambda", "10", "--json", "-"});
  CHECK(r.status == 0);
  json d = r.doc();
  CHECK(d["converged"] == true);
  REQUIRE(d["readings"].size() == 3);
  for (const auto& [name, terms] : d["readings"].items())
    for (const auto& t : terms) CHECK(std::isfinite(t["numeric"]["value"].get<double>()));
  // e^{-s}: every moment is 1, so the action is sum_k Lambda^{4-k} a_k.
  for (double m : d["numeric"]["cutoff_moments"]) CHECK(m == doctest::Approx(1).epsilon(1e-9));
  double expect = 0;
  for (int k = 0; k < 5; ++k)
    expect += std::pow(10.0, 4 - k) * d["readings"]["general"][k]["numeric"]["value"].get<double>();
  CHECK(d["numeric"]["spectral_action"]["general"].get<double>() == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("rw error paths") {
  Run ln = run({"rw", "--f", "ln(t)", "--interval", "0,1", "--curv", "1"});
  CHECK(ln.status == 3);
  CHECK(ln.err.find("domain error") != std::string::npos);
  Run parse = run({"rw", "--f", "1+", "--interval", "0,1"});
  CHECK(parse.status == 2);
  CHECK(parse.err.find("at byte 2") != std::string::npos);
  CHECK(run({"rw", "--f", "1", "--interval", "1,0"}).status == 2);
  CHECK(run({"rw", "--f", "1", "--interval", "0,1", "--base-vol", "0"}).status == 2);
}

TEST_CASE("oracle command") {
  Run r = run({"oracle", "--seed", "7", "--count", "100", "--json", "-"});
  CHECK(r.status == 0);
  json f = r.doc()["families"];
  REQUIRE(f.size() == 3);
  for (const auto& fam : f) CHECK(fam["passed"] == 100);
  Run empty = run({"oracle", "--count", "0", "--json", "-"});
  CHECK(empty.status == 0);
  CHECK(empty.doc()["families"].empty());
  CHECK(empty.doc()["pass"] == true);
}

TEST_CASE("oracle families pass on other seeds") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (const auto& f : run_oracles(seed, 150)) {
      INFO(f.name << " seed " << seed);
      CHECK(f.pass());
    }
  }
}

TEST_CASE("json output is byte identical across runs") {
  std::string cfg = write_config("det", "p = 2\nq = 2\nr_M = 1\nvol = 1\n");
  std::vector<std::vector<std::string>> cmds{
      {"verify-boundary", "--dim", "6", "--powers", "2,2", "--json", "-"},
      {"heat", "--config", cfg, "--json", "-"},
      {"rw", "--f", "cosh(t) + t^2/5", "--interval", "0,1", "--curv", "-1/2", "--lambda", "3", "--json", "-"},
      {"oracle", "--seed", "11", "--count", "50", "--json", "-"},
  };
  for (const auto& c : cmds) {
    INFO(c[0]);
    Run a = run(c), b = run(c);
    CHECK(a.status == b.status);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}
