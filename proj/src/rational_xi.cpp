#include "wres/rational_xi.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace wres {

namespace {

using UPoly = std::vector<ScalarPoly>;

void trim(UPoly& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

UPoly add(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  trim(a);
  return a;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// v * (xi - root)
UPoly mul_linear(const UPoly& v, const GaussianRational& root) {
  if (v.empty()) return {};
  UPoly r(v.size() + 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    r[k + 1] += v[k];
    r[k] -= v[k].scaled(root);
  }
  trim(r);
  return r;
}

UPoly mul_linear_pow(UPoly v, const GaussianRational& root, int e) {
  for (int k = 0; k < e; ++k) v = mul_linear(v, root);
  return v;
}

ScalarPoly eval_upoly(const UPoly& v, const GaussianRational& x) {
  ScalarPoly s;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    s = s.scaled(x);
    s += *it;
  }
  return s;
}

// Exact quotient by (xi - root); the caller guarantees v(root) = 0.
UPoly div_linear(const UPoly& v, const GaussianRational& root) {
  if (v.size() <= 1) return {};
  UPoly q(v.size() - 1);
  ScalarPoly carry;
  for (std::size_t k = v.size() - 1; k >= 1; --k) {
    carry = v[k] + carry.scaled(root);
    q[k - 1] = carry;
  }
  trim(q);
  return q;
}

// Coefficients of v(root + u) in powers of u.
UPoly taylor_shift(const UPoly& v, const GaussianRational& root) {
  UPoly w = v;
  std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) w[k - 1] += w[k].scaled(root);
  return w;
}

Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Taylor coefficients g_0..g_{count-1} at xi = i of N(xi) / (xi + i)^mm.
std::vector<ScalarPoly> taylor_at_plus_i(const UPoly& num, int mm, int count) {
  const GaussianRational I = GaussianRational::i();
  UPoly shifted = taylor_shift(num, I);
  // (2i + u)^(-mm) = (2i)^(-mm) * sum_j C(mm+j-1, j) (-u/(2i))^j
  std::vector<GaussianRational> s(count);
  GaussianRational two_i(Rational(0), Rational(2));
  GaussianRational lead = gpow(two_i, -mm);
  GaussianRational step = GaussianRational(-1) / two_i;
  for (int j = 0; j < count; ++j) {
    s[j] = mm == 0 ? GaussianRational(j == 0 ? 1 : 0)
                   : lead * GaussianRational(binom(mm + j - 1, j)) * gpow(step, j);
  }
  std::vector<ScalarPoly> g(count);
  for (int k = 0; k < count; ++k)
    for (int j = 0; j <= k; ++j)
      if (static_cast<std::size_t>(k - j) < shifted.size() && !s[j].is_zero())
        g[k] += shifted[k - j].scaled(s[j]);
  return g;
}

}  // namespace

RationalXi::RationalXi(const ScalarPoly& c) {
  if (!c.is_zero()) num_.push_back(c);
}

RationalXi RationalXi::make(std::vector<ScalarPoly> num, int mp, int mm) {
  if (mp < 0 || mm < 0) throw std::invalid_argument("negative pole order");
  RationalXi r;
  r.num_ = std::move(num);
  r.mp_ = mp;
  r.mm_ = mm;
  r.canonicalize();
  return r;
}

RationalXi RationalXi::xi() { return make({ScalarPoly(0), ScalarPoly(1)}, 0, 0); }

RationalXi RationalXi::inv_norm(int k) { return make({ScalarPoly(1)}, k, k); }

void RationalXi::canonicalize() {
  trim(num_);
  if (num_.empty()) {
    mp_ = mm_ = 0;
    return;
  }
  const GaussianRational I = GaussianRational::i();
  while (mp_ > 0 && eval_upoly(num_, I).is_zero()) {
    num_ = div_linear(num_, I);
    --mp_;
  }
  while (mm_ > 0 && eval_upoly(num_, -I).is_zero()) {
    num_ = div_linear(num_, -I);
    --mm_;
  }
}

int RationalXi::degree_gap() const {
  if (num_.empty()) return INT_MAX;
  return mp_ + mm_ - num_degree();
}

RationalXi& RationalXi::operator+=(const RationalXi& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const GaussianRational I = GaussianRational::i();
  int P = std::max(mp_, o.mp_), M = std::max(mm_, o.mm_);
  UPoly a = mul_linear_pow(mul_linear_pow(num_, I, P - mp_), -I, M - mm_);
  UPoly b = mul_linear_pow(mul_linear_pow(o.num_, I, P - o.mp_), -I, M - o.mm_);
  num_ = add(std::move(a), b);
  mp_ = P;
  mm_ = M;
  canonicalize();
  return *this;
}

RationalXi& RationalXi::operator-=(const RationalXi& o) { return *this += -o; }

RationalXi& RationalXi::operator*=(const RationalXi& o) {
  num_ = mul(num_, o.num_);
  mp_ += o.mp_;
  mm_ += o.mm_;
  canonicalize();
  return *this;
}

RationalXi RationalXi::scaled(const ScalarPoly& c) const {
  RationalXi r = *this;
  for (auto& x : r.num_) x *= c;
  r.canonicalize();
  return r;
}

RationalXi RationalXi::derivative(int order) const {
  RationalXi cur = *this;
  for (int step = 0; step < order; ++step) {
    if (cur.is_zero()) return cur;
    UPoly d;
    for (std::size_t k = 1; k < cur.num_.size(); ++k)
      d.push_back(cur.num_[k].scaled(GaussianRational(static_cast<long>(k))));
    trim(d);
    const GaussianRational I = GaussianRational::i();
    UPoly out = mul(d, {ScalarPoly(1), ScalarPoly(0), ScalarPoly(1)});
    if (cur.mp_ > 0) {
      UPoly t = mul_linear(cur.num_, -I);
      for (auto& x : t) x *= GaussianRational(-cur.mp_);
      out = add(out, t);
    }
    if (cur.mm_ > 0) {
      UPoly t = mul_linear(cur.num_, I);
      for (auto& x : t) x *= GaussianRational(-cur.mm_);
      out = add(out, t);
    }
    cur = make(std::move(out), cur.mp_ + 1, cur.mm_ + 1);
  }
  return cur;
}

RationalXi RationalXi::pi_plus() const {
  if (!proper()) throw std::domain_error("divergent symbol");
  if (mp_ == 0) return {};
  std::vector<ScalarPoly> g = taylor_at_plus_i(num_, mm_, mp_);
  // sum_k g_k (xi - i)^k, assembled by Horner in (xi - i).
  const GaussianRational I = GaussianRational::i();
  UPoly p;
  for (int k = mp_ - 1; k >= 0; --k) {
    p = mul_linear(p, I);
    p = add(std::move(p), UPoly{g[k]});
  }
  return make(std::move(p), mp_, 0);
}

RationalXi RationalXi::pi_minus() const { return *this - pi_plus(); }

ScalarPoly RationalXi::integrate_line() const {
  int gap = degree_gap();
  if (gap < 1) throw std::domain_error("divergent symbol");
  if (gap == 1) throw std::domain_error("conditionally convergent, unsupported");
  if (mp_ == 0) return {};
  std::vector<ScalarPoly> g = taylor_at_plus_i(num_, mm_, mp_);
  return g[mp_ - 1].scaled(GaussianRational(Rational(0), Rational(2))) * ScalarPoly::var("pi");
}

RationalXi RationalXi::map_coeffs(const std::function<ScalarPoly(const ScalarPoly&)>& fn) const {
  std::vector<ScalarPoly> n;
  n.reserve(num_.size());
  for (const auto& c : num_) n.push_back(fn(c));
  return make(std::move(n), mp_, mm_);
}

std::complex<double> RationalXi::eval(
    std::complex<double> x,
    const std::function<std::complex<double>(const std::string&)>& value) const {
  std::complex<double> n = 0;
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) n = n * x + it->eval(value);
  const std::complex<double> I(0, 1);
  return n / (std::pow(x - I, mp_) * std::pow(x + I, mm_));
}

ScalarPoly RationalXi::eval_at(const GaussianRational& x) const {
  const GaussianRational I = GaussianRational::i();
  GaussianRational den = gpow(x - I, mp_) * gpow(x + I, mm_);
  if (den.is_zero()) throw std::domain_error("evaluation at a pole");
  return eval_upoly(num_, x).scaled(GaussianRational(1) / den);
}

std::string RationalXi::str() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k].is_zero()) continue;
    if (os.tellp() > 1) os << " + ";
    os << "(" << num_[k].str() << ")";
    if (k > 0) os << "*xi" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  os << ")";
  if (mp_ || mm_) {
    os << "/(";
    if (mp_) os << "(xi-i)^" << mp_;
    if (mp_ && mm_) os << "*";
    if (mm_) os << "(xi+i)^" << mm_;
    os << ")";
  }
  return os.str();
}

bool operator==(const RationalXi& a, const RationalXi& b) {
  return a.mp_ == b.mp_ && a.mm_ == b.mm_ && a.num_ == b.num_;
}

RationalXi operator+(RationalXi a, const RationalXi& b) { return a += b; }
RationalXi operator-(RationalXi a, const RationalXi& b) { return a -= b; }
RationalXi operator-(const RationalXi& a) { return a.scaled(ScalarPoly(-1)); }
RationalXi operator*(RationalXi a, const RationalXi& b) { return a *= b; }

}  // namespace wres
