#include "wres/clifford.hpp"

#include <stdexcept>

namespace wres {

AlgebraSignature AlgebraSignature::make(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature needs p >= 0 and q >= 0");
  return {p, q, std::nullopt};
}

AlgebraSignature AlgebraSignature::with_total(int p, int q, ScalarPoly total) {
  AlgebraSignature s = make(p, q);
  s.total_override = std::move(total);
  return s;
}

long AlgebraSignature::leaf_dim() const { return 1L << (p / 2); }

ScalarPoly AlgebraSignature::total_dim() const {
  if (total_override) return *total_override;
  return ScalarPoly(leaf_dim() << q);
}

std::string Generator::str() const {
  switch (kind) {
    case GenKind::Cf: return "c(f" + std::to_string(index) + ")";
    case GenKind::Ch: return "c(h" + std::to_string(index) + ")";
    case GenKind::Hh: return "chat(h" + std::to_string(index) + ")";
  }
  return "?";
}

std::string word_str(const CliffordWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += g.str();
  return s;
}

std::pair<int, CliffordWord> normalize_word(const std::vector<Generator>& raw) {
  CliffordWord w;
  int sign = 1;
  for (const Generator& g : raw) {
    // Bubble g leftward past larger generators, cancelling against an equal one.
    std::size_t pos = w.size();
    while (pos > 0 && g < w[pos - 1]) {
      --pos;
      sign = -sign;
    }
    if (pos > 0 && w[pos - 1] == g) {
      sign *= g.square();
      w.erase(w.begin() + static_cast<long>(pos - 1));
    } else {
      w.insert(w.begin() + static_cast<long>(pos), g);
    }
  }
  return {sign, w};
}

std::pair<int, CliffordWord> multiply_words(const CliffordWord& a, const CliffordWord& b) {
  if (a.empty()) return {1, b};
  if (b.empty()) return {1, a};
  // Merge: each element of b passes the elements of a greater than it.
  CliffordWord out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      if ((a.size() - i) % 2) sign = -sign;
      out.push_back(b[j++]);
    } else {
      // a[i] == b[j]: b[j] passes a[i+1..] then squares against a[i].
      if ((a.size() - i - 1) % 2) sign = -sign;
      sign *= a[i].square();
      ++i;
      ++j;
    }
  }
  return {sign, out};
}

ScalarPoly trace(const CliffordElement& x, const AlgebraSignature& sig) {
  return x.identity_coef() * sig.total_dim();
}

}  // namespace wres
