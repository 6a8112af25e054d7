#include "wres/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "wres/matrix_rep.hpp"
#include "wres/quadrature.hpp"
#include "wres/rational_xi.hpp"
#include "wres/warp_expr.hpp"

namespace wres {

namespace {

// Plain modulo keeps the draws identical across standard libraries.
unsigned draw(std::mt19937_64& rng, unsigned n) { return static_cast<unsigned>(rng() % n); }

void record(OracleFamily& f, bool ok, double err, const std::string& what) {
  ++f.count;
  f.max_error = std::max(f.max_error, err);
  if (ok) ++f.passed;
  else if (f.failures.size() < 5) f.failures.push_back(what);
}

}  // namespace

OracleFamily trace_oracle(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  OracleFamily out;
  out.name = "trace_matrix";
  for (int k = 0; k < count; ++k) {
    int p = static_cast<int>(draw(rng, 4)), q = static_cast<int>(draw(rng, 4));
    if (p + q == 0) q = 1;
    std::vector<Generator> pool;
    for (int i = 1; i <= p; ++i) pool.push_back(cf(i));
    for (int s = 1; s <= q; ++s) {
      pool.push_back(ch(s));
      pool.push_back(hh(s));
    }
    std::vector<Generator> raw;
    for (unsigned n = draw(rng, 9); n > 0; --n) raw.push_back(pool[draw(rng, static_cast<unsigned>(pool.size()))]);
    MatrixRep rep(AlgebraSignature::make(p, q));
    CliffordElement x = CliffordElement::word(raw, ScalarPoly(1));
    bool ok = rep.of_element(x) == rep.of_raw(raw) &&
              rep.normalized_trace(rep.of_raw(raw)) == x.identity_coef().constant_term();
    std::ostringstream what;
    what << "p=" << p << " q=" << q << " word of length " << raw.size();
    record(out, ok, ok ? 0 : 1, what.str());
  }
  return out;
}

OracleFamily quadrature_oracle(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  OracleFamily out;
  out.name = "residue_quadrature";
  auto gauss = [&] {
    auto r = [&] { return make_rational(static_cast<long>(draw(rng, 11)) - 5, 1 + draw(rng, 4)); };
    Rational re = r(), im = r();
    return GaussianRational(re, im);
  };
  auto no_symbols = [](const std::string& s) -> std::complex<double> {
    if (s == "pi") return std::numbers::pi;
    throw std::logic_error("unexpected symbol " + s);
  };
  while (out.count < count) {
    int mp = static_cast<int>(draw(rng, 5)), mm = static_cast<int>(draw(rng, 5));
    if (mp + mm < 2) continue;
    int d = static_cast<int>(draw(rng, static_cast<unsigned>(mp + mm - 1)));
    std::vector<ScalarPoly> num;
    for (int k = 0; k <= d; ++k) num.emplace_back(gauss());
    RationalXi f = RationalXi::make(num, mp, mm);
    if (f.is_zero()) continue;
    std::complex<double> exact = f.integrate_line().eval(no_symbols);
    auto part = [&](bool imag) {
      return quad::integrate(
                 [&](double x) {
                   auto v = f.eval(x, no_symbols);
                   return imag ? v.imag() : v.real();
                 },
                 -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), 1e-12)
          .value;
    };
    std::complex<double> numeric(part(false), part(true));
    double err = std::abs(exact - numeric) / std::max(std::abs(exact), 1.0);
    record(out, err <= 1e-8, err, f.str());
  }
  return out;
}

OracleFamily ad_oracle(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  OracleFamily out;
  out.name = "autodiff_differences";
  while (out.count < count) {
    WarpFunction f = random_warp(rng, 3);
    double t = -1 + 2 * static_cast<double>(draw(rng, 10000)) / 10000;
    WarpJet ad;
    std::array<double, 4> fd;
    bool tame = true;
    try {
      ad = f.derivatives(t);
      fd = central_differences(f, t);
      // Keep away from poles and branch points closer than the stencil can resolve.
      for (double s : {-0.01, 0.01}) tame = tame && std::abs(f.eval<long double>(t + s)) < 1e5;
    } catch (const WarpDomainError&) {
      continue;
    }
    for (int k = 0; k < 4; ++k) tame = tame && std::isfinite(ad[k]) && std::abs(ad[k]) < 1e4;
    if (!tame) continue;
    double err = 0;
    for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(ad[k] - fd[k]) / std::max(1.0, std::abs(ad[k])));
    std::ostringstream what;
    what << f.str() << " at t=" << t;
    record(out, err <= 1e-6, err, what.str());
  }
  return out;
}

std::vector<OracleFamily> run_oracles(std::uint64_t seed, int count) {
  return {trace_oracle(seed, count), quadrature_oracle(seed, count), ad_oracle(seed, count)};
}

}  // namespace wres
