#pragma once

#include <vector>

#include "wres/clifford.hpp"

namespace wres {

// Dense square matrix over the Gaussian rationals.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static CMatrix identity(int n);

  int dim() const { return n_; }
  GaussianRational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const GaussianRational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  GaussianRational trace() const;

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y);
  friend CMatrix operator+(const CMatrix& x, const CMatrix& y);
  friend CMatrix kron(const CMatrix& x, const CMatrix& y);
  CMatrix scaled(const GaussianRational& s) const;
  friend bool operator==(const CMatrix& x, const CMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  int n_ = 0;
  std::vector<GaussianRational> a_;
};

// Concrete matrices for c(f_i), c(h_s), chat(h_s) on S(F) (x) Lambda(F^perp*).
// Lambda uses Jordan-Wigner creation/annihilation operators; c = a^+ - a,
// chat = a^+ + a; c(f_i) carries the Lambda parity so it anticommutes with the
// normal generators. For odd p the spinor factor is the 2^{(p+1)/2}-dimensional
// restriction of Cl(p+1), where no nonempty word is a multiple of the identity.
class MatrixRep {
 public:
  explicit MatrixRep(const AlgebraSignature& sig);

  int dim() const { return dim_; }
  const CMatrix& of(const Generator& g) const;
  CMatrix of_word(const CliffordWord& w) const;
  CMatrix of_raw(const std::vector<Generator>& raw) const;
  // Coefficients must be constants.
  CMatrix of_element(const CliffordElement& x) const;
  // trace / dim, comparable with the symbolic identity coefficient.
  GaussianRational normalized_trace(const CMatrix& m) const;

 private:
  AlgebraSignature sig_;
  int dim_ = 1;
  std::vector<CMatrix> cf_, ch_, hh_;
};

}  // namespace wres
