#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wres/poly.hpp"

namespace wres {

// p = dim F (leaf), q = dim F^perp. totalDim defaults to 2^{floor(p/2)} * 2^q;
// scenarios that keep it opaque set a symbolic override.
struct AlgebraSignature {
  int p = 0;
  int q = 0;
  std::optional<ScalarPoly> total_override;

  static AlgebraSignature make(int p, int q);
  static AlgebraSignature with_total(int p, int q, ScalarPoly total);
  long leaf_dim() const;
  ScalarPoly total_dim() const;
  bool symbolic_total() const { return total_override.has_value(); }
};

// c(f_i), c(h_s) square to -1, chat(h_s) squares to +1; all distinct ones anticommute.
enum class GenKind : unsigned char { Cf = 0, Ch = 1, Hh = 2 };

struct Generator {
  GenKind kind;
  int index;  // 1-based

  int square() const { return kind == GenKind::Hh ? 1 : -1; }
  std::string str() const;
  friend bool operator<(const Generator& a, const Generator& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

inline Generator cf(int i) { return {GenKind::Cf, i}; }
inline Generator ch(int s) { return {GenKind::Ch, s}; }
inline Generator hh(int s) { return {GenKind::Hh, s}; }

// Canonical word: strictly increasing generators (Cf < Ch < Hh, then index).
using CliffordWord = std::vector<Generator>;

std::string word_str(const CliffordWord& w);

// Reduces a raw product to (sign, canonical word).
std::pair<int, CliffordWord> normalize_word(const std::vector<Generator>& raw);
std::pair<int, CliffordWord> multiply_words(const CliffordWord& a, const CliffordWord& b);

// Linear combination of canonical words with coefficients in a commutative ring.
template <class Coef>
class CliffordSum {
 public:
  using Terms = std::map<CliffordWord, Coef>;

  CliffordSum() = default;
  explicit CliffordSum(const Coef& scalar) { add({}, scalar); }
  static CliffordSum generator(const Generator& g, const Coef& c) {
    CliffordSum s;
    s.add({g}, c);
    return s;
  }
  static CliffordSum word(const std::vector<Generator>& raw, const Coef& c) {
    auto [sign, w] = normalize_word(raw);
    CliffordSum s;
    s.add(w, sign > 0 ? c : -c);
    return s;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Coef identity_coef() const {
    auto it = t_.find(CliffordWord{});
    return it == t_.end() ? Coef() : it->second;
  }

  void add(const CliffordWord& w, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  CliffordSum& operator+=(const CliffordSum& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  CliffordSum& operator-=(const CliffordSum& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend CliffordSum operator+(CliffordSum a, const CliffordSum& b) { return a += b; }
  friend CliffordSum operator-(CliffordSum a, const CliffordSum& b) { return a -= b; }
  friend CliffordSum operator-(const CliffordSum& a) {
    CliffordSum r;
    for (const auto& [w, c] : a.t_) r.add(w, -c);
    return r;
  }
  friend CliffordSum operator*(const CliffordSum& a, const CliffordSum& b) {
    CliffordSum r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) {
        auto [sign, w] = multiply_words(wa, wb);
        Coef c = ca * cb;
        r.add(w, sign > 0 ? c : -c);
      }
    return r;
  }
  template <class S>
  CliffordSum scaled(const S& s) const {
    CliffordSum r;
    for (const auto& [w, c] : t_) r.add(w, c * s);
    return r;
  }
  template <class F>
  auto map_coeffs(F&& fn) const {
    using Out = decltype(fn(std::declval<const Coef&>()));
    CliffordSum<Out> r;
    for (const auto& [w, c] : t_) r.add(w, fn(c));
    return r;
  }
  friend bool operator==(const CliffordSum& a, const CliffordSum& b) { return a.t_ == b.t_; }

 private:
  Terms t_;
};

using CliffordElement = CliffordSum<ScalarPoly>;

// totalDim * (coefficient of the empty word).
ScalarPoly trace(const CliffordElement& x, const AlgebraSignature& sig);

// trace(x * y) without forming the full product: only words that cancel contribute.
template <class Coef>
Coef identity_coef_of_product(const CliffordSum<Coef>& x, const CliffordSum<Coef>& y) {
  Coef acc{};
  for (const auto& [w, c] : x.terms()) {
    auto it = y.terms().find(w);
    if (it == y.terms().end()) continue;
    auto [sign, rest] = multiply_words(w, w);
    Coef v = c * it->second;
    if (sign > 0) acc += v;
    else acc -= v;
  }
  return acc;
}

}  // namespace wres
