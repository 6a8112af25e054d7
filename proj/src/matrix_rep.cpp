#include "wres/matrix_rep.hpp"

#include <stdexcept>

namespace wres {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

GaussianRational CMatrix::trace() const {
  GaussianRational t;
  for (int k = 0; k < n_; ++k) t += at(k, k);
  return t;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
  CMatrix r(x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int k = 0; k < x.n_; ++k) {
      const GaussianRational& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < x.n_; ++j) {
        const GaussianRational& ykj = y.at(k, j);
        if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
  CMatrix r = x;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
  return r;
}

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix r(x.n_ * y.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int j = 0; j < x.n_; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int k = 0; k < y.n_; ++k)
        for (int l = 0; l < y.n_; ++l) r.at(i * y.n_ + k, j * y.n_ + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

CMatrix CMatrix::scaled(const GaussianRational& s) const {
  CMatrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

namespace {

CMatrix pauli(char which) {
  const GaussianRational I = GaussianRational::i();
  CMatrix m(2);
  switch (which) {
    case 'x': m.at(0, 1) = 1; m.at(1, 0) = 1; break;
    case 'y': m.at(0, 1) = -I; m.at(1, 0) = I; break;
    case 'z': m.at(0, 0) = 1; m.at(1, 1) = -1; break;
    case '+': m.at(1, 0) = 1; break;  // creation: |0> -> |1>
    case '-': m.at(0, 1) = 1; break;  // annihilation
    default: m = CMatrix::identity(2);
  }
  return m;
}

CMatrix chain(const std::vector<CMatrix>& factors) {
  CMatrix r = CMatrix::identity(1);
  for (const auto& f : factors) r = kron(r, f);
  return r;
}

// Hermitian generators squaring to +1 of Cl(2m) on C^{2^m}.
std::vector<CMatrix> gammas(int m) {
  std::vector<CMatrix> out;
  for (int k = 0; k < m; ++k)
    for (char s : {'x', 'y'}) {
      std::vector<CMatrix> f;
      for (int l = 0; l < m; ++l) f.push_back(l < k ? pauli('z') : l == k ? pauli(s) : pauli('1'));
      out.push_back(chain(f));
    }
  return out;
}

}  // namespace

MatrixRep::MatrixRep(const AlgebraSignature& sig) : sig_(sig) {
  if (sig.p > 8 || sig.q > 6) throw std::invalid_argument("matrix oracle size guard: need p <= 8, q <= 6");
  const GaussianRational I = GaussianRational::i();
  int m = (sig.p + 1) / 2;
  std::vector<CMatrix> g = gammas(m);
  int sdim = 1 << m;
  int ldim = 1 << sig.q;
  dim_ = sdim * ldim;

  std::vector<CMatrix> parity_f;
  for (int l = 0; l < sig.q; ++l) parity_f.push_back(pauli('z'));
  CMatrix parity = chain(parity_f);
  for (int i = 0; i < sig.p; ++i) cf_.push_back(kron(g[i].scaled(I), parity));

  CMatrix idS = CMatrix::identity(sdim);
  for (int s = 0; s < sig.q; ++s) {
    std::vector<CMatrix> up, down;
    for (int l = 0; l < sig.q; ++l) {
      up.push_back(l < s ? pauli('z') : l == s ? pauli('+') : pauli('1'));
      down.push_back(l < s ? pauli('z') : l == s ? pauli('-') : pauli('1'));
    }
    CMatrix a_up = chain(up), a_down = chain(down);
    ch_.push_back(kron(idS, a_up + a_down.scaled(-1)));
    hh_.push_back(kron(idS, a_up + a_down));
  }
}

const CMatrix& MatrixRep::of(const Generator& g) const {
  const std::vector<CMatrix>& v = g.kind == GenKind::Cf ? cf_ : g.kind == GenKind::Ch ? ch_ : hh_;
  if (g.index < 1 || g.index > static_cast<int>(v.size()))
    throw std::out_of_range("generator " + g.str() + " outside signature");
  return v[static_cast<std::size_t>(g.index - 1)];
}

CMatrix MatrixRep::of_raw(const std::vector<Generator>& raw) const {
  CMatrix r = CMatrix::identity(dim_);
  for (const auto& g : raw) r = r * of(g);
  return r;
}

CMatrix MatrixRep::of_word(const CliffordWord& w) const { return of_raw(w); }

CMatrix MatrixRep::of_element(const CliffordElement& x) const {
  CMatrix r(dim_);
  for (const auto& [w, c] : x.terms()) {
    auto k = c.as_constant();
    if (!k) throw std::invalid_argument("matrix oracle needs constant coefficients");
    r = r + of_word(w).scaled(*k);
  }
  return r;
}

GaussianRational MatrixRep::normalized_trace(const CMatrix& m) const {
  return m.trace() / GaussianRational(dim_);
}

}  // namespace wres
