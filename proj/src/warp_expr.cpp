#include "wres/warp_expr.hpp"

#include <cctype>
#include <map>

namespace wres {

WarpParseError::WarpParseError(const std::string& msg, std::size_t offset)
    : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}

bool same_tree(const WarpNode& a, const WarpNode& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case WarpNode::Kind::Num:
      if (a.num != b.num) return false;
      break;
    case WarpNode::Kind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    case WarpNode::Kind::Call:
      if (a.fn != b.fn) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  return true;
}

namespace {

const std::map<std::string, WarpFn>& functions() {
  static const std::map<std::string, WarpFn> m{{"sin", WarpFn::Sin},   {"cos", WarpFn::Cos},
                                               {"exp", WarpFn::Exp},   {"ln", WarpFn::Ln},
                                               {"sinh", WarpFn::Sinh}, {"cosh", WarpFn::Cosh}};
  return m;
}

std::string fn_name(WarpFn f) {
  for (const auto& [name, g] : functions())
    if (g == f) return name;
  return "?";
}

WarpNodePtr node(WarpNode::Kind k, std::vector<WarpNodePtr> args) {
  auto n = std::make_shared<WarpNode>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  WarpNodePtr run() {
    skip();
    if (pos_ == s_.size()) throw WarpParseError("empty expression", pos_);
    WarpNodePtr e = expr();
    skip();
    if (pos_ != s_.size()) throw WarpParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WarpNodePtr expr() {
    WarpNodePtr l = term();
    for (;;) {
      if (eat('+')) l = node(WarpNode::Kind::Add, {l, term()});
      else if (eat('-')) l = node(WarpNode::Kind::Sub, {l, term()});
      else return l;
    }
  }

  WarpNodePtr term() {
    WarpNodePtr l = factor();
    for (;;) {
      if (eat('*')) l = node(WarpNode::Kind::Mul, {l, factor()});
      else if (eat('/')) l = node(WarpNode::Kind::Div, {l, factor()});
      else return l;
    }
  }

  WarpNodePtr factor() {
    if (eat('-')) return node(WarpNode::Kind::Neg, {factor()});
    WarpNodePtr b = base();
    if (!eat('^')) return b;
    skip();
    std::size_t start = pos_;
    bool neg = pos_ < s_.size() && s_[pos_] == '-';
    if (neg) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits || (pos_ < s_.size() && (s_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(s_[pos_])))))
      throw WarpParseError("exponent must be an integer", start);
    if (pos_ - digits > 6) throw WarpParseError("exponent too large", start);
    auto p = std::make_shared<WarpNode>();
    p->kind = WarpNode::Kind::Pow;
    p->exponent = std::stoi(s_.substr(digits, pos_ - digits)) * (neg ? -1 : 1);
    p->args = {b};
    return p;
  }

  WarpNodePtr number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string text = s_.substr(start, pos_ - start);
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == frac || text.empty()) throw WarpParseError("malformed number", start);
      text += s_.substr(frac - 1, pos_ - frac + 1);
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      throw WarpParseError("malformed number", start);
    auto n = std::make_shared<WarpNode>();
    n->kind = WarpNode::Kind::Num;
    n->num = parse_rational(text);
    return n;
  }

  WarpNodePtr base() {
    skip();
    if (pos_ == s_.size()) throw WarpParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      WarpNodePtr e = expr();
      if (!eat(')')) throw WarpParseError("expected ')'", pos_);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      skip();
      bool call = pos_ < s_.size() && s_[pos_] == '(';
      if (id == "t") {
        if (call) throw WarpParseError("arity mismatch: 't' takes no arguments", start);
        return node(WarpNode::Kind::Var, {});
      }
      auto it = functions().find(id);
      if (it == functions().end()) throw WarpParseError("unknown identifier '" + id + "'", start);
      if (!call) throw WarpParseError("arity mismatch: '" + id + "' takes one argument", start);
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') throw WarpParseError("arity mismatch: '" + id + "' takes one argument", start);
      WarpNodePtr arg = expr();
      if (eat(',')) throw WarpParseError("arity mismatch: '" + id + "' takes one argument", start);
      if (!eat(')')) throw WarpParseError("expected ')'", pos_);
      auto n = std::make_shared<WarpNode>();
      n->kind = WarpNode::Kind::Call;
      n->fn = it->second;
      n->args = {arg};
      return n;
    }
    throw WarpParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

// Exact decimal; parsed literals only ever have denominators 2^a 5^b.
std::string decimal(const Rational& q) {
  mpz_class den = q.get_den();
  int k = 0;
  mpz_class scale = 1;
  while (mpz_class(scale * q.get_num()) % den != 0) {
    scale *= 10;
    if (++k > 4000) throw std::logic_error("literal without a terminating decimal");
  }
  mpz_class n = scale * q.get_num() / den;
  std::string s = n.get_str();
  if (k == 0) return s;
  if (static_cast<int>(s.size()) <= k) s.insert(0, k + 1 - s.size(), '0');
  s.insert(s.size() - k, ".");
  return s;
}

int prec(const WarpNode& n) {
  switch (n.kind) {
    case WarpNode::Kind::Add:
    case WarpNode::Kind::Sub: return 1;
    case WarpNode::Kind::Mul:
    case WarpNode::Kind::Div: return 2;
    case WarpNode::Kind::Neg: return 3;
    case WarpNode::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string print(const WarpNode& n);

std::string wrap(const WarpNode& n, bool paren) { return paren ? "(" + print(n) + ")" : print(n); }

std::string print(const WarpNode& n) {
  const auto& a = n.args;
  switch (n.kind) {
    case WarpNode::Kind::Num: return decimal(n.num);
    case WarpNode::Kind::Var: return "t";
    case WarpNode::Kind::Neg: return "-" + wrap(*a[0], prec(*a[0]) < 3);
    case WarpNode::Kind::Add: return wrap(*a[0], false) + " + " + wrap(*a[1], prec(*a[1]) <= 1);
    case WarpNode::Kind::Sub: return wrap(*a[0], false) + " - " + wrap(*a[1], prec(*a[1]) <= 1);
    case WarpNode::Kind::Mul: return wrap(*a[0], prec(*a[0]) < 2) + "*" + wrap(*a[1], prec(*a[1]) <= 2);
    case WarpNode::Kind::Div: return wrap(*a[0], prec(*a[0]) < 2) + "/" + wrap(*a[1], prec(*a[1]) <= 2);
    case WarpNode::Kind::Pow: return wrap(*a[0], prec(*a[0]) < 5) + "^" + std::to_string(n.exponent);
    case WarpNode::Kind::Call: return fn_name(n.fn) + "(" + print(*a[0]) + ")";
  }
  return "?";
}

}  // namespace

WarpFunction WarpFunction::parse(const std::string& text) { return WarpFunction(Parser(text).run()); }

std::string WarpFunction::str() const { return print(*root_); }

WarpJet WarpFunction::derivatives(double t) const { return warp_derivatives(*this, t); }

WarpJet warp_derivatives(const WarpFunction& f, double t) {
  using boost::math::differentiation::make_fvar;
  auto x = make_fvar<double, 4>(t);
  auto y = f.eval(x);
  WarpJet j;
  for (int k = 0; k <= 4; ++k) j[k] = static_cast<double>(y.derivative(k));
  return j;
}

std::array<double, 4> central_differences(const WarpFunction& f, double t, double h) {
  using LD = long double;
  std::array<LD, 7> v;
  for (int i = -3; i <= 3; ++i) v[i + 3] = f.eval<LD>(static_cast<LD>(t) + i * static_cast<LD>(h));
  const LD H = h;
  return {static_cast<double>(v[3]),
          static_cast<double>((-v[5] + 8 * v[4] - 8 * v[2] + v[1]) / (12 * H)),
          static_cast<double>((-v[5] + 16 * v[4] - 30 * v[3] + 16 * v[2] - v[1]) / (12 * H * H)),
          static_cast<double>((-v[6] + 8 * v[5] - 13 * v[4] + 13 * v[2] - 8 * v[1] + v[0]) / (8 * H * H * H))};
}

namespace {

WarpNodePtr random_node(std::mt19937_64& rng, int depth) {
  auto pick = [&](unsigned n) { return static_cast<unsigned>(rng() % n); };
  auto out = std::make_shared<WarpNode>();
  if (depth == 0 || pick(4) == 0) {
    if (pick(2) == 0) {
      out->kind = WarpNode::Kind::Var;
    } else {
      static const Rational lits[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
      out->kind = WarpNode::Kind::Num;
      out->num = lits[pick(6)];
    }
    return out;
  }
  switch (pick(7)) {
    case 0: out->kind = WarpNode::Kind::Add; break;
    case 1: out->kind = WarpNode::Kind::Sub; break;
    case 2: out->kind = WarpNode::Kind::Mul; break;
    case 3: out->kind = WarpNode::Kind::Div; break;
    case 4:
      out->kind = WarpNode::Kind::Pow;
      out->exponent = static_cast<int>(pick(6)) - 2;
      out->args = {random_node(rng, depth - 1)};
      return out;
    case 5:
      out->kind = WarpNode::Kind::Neg;
      out->args = {random_node(rng, depth - 1)};
      return out;
    default:
      out->kind = WarpNode::Kind::Call;
      out->fn = static_cast<WarpFn>(pick(6));
      out->args = {random_node(rng, depth - 1)};
      return out;
  }
  out->args = {random_node(rng, depth - 1), random_node(rng, depth - 1)};
  return out;
}

}  // namespace

WarpFunction random_warp(std::mt19937_64& rng, int depth) { return WarpFunction::from_tree(random_node(rng, depth)); }

}  // namespace wres
