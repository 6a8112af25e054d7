#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/differentiation/autodiff.hpp>

#include "wres/rational.hpp"

namespace wres {

class WarpParseError : public std::runtime_error {
 public:
  WarpParseError(const std::string& msg, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// ln of a nonpositive value, division by zero, nonpositive warp.
class WarpDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class WarpFn { Sin, Cos, Exp, Ln, Sinh, Cosh };

struct WarpNode {
  enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Num;
  Rational num;       // Num
  int exponent = 0;   // Pow
  WarpFn fn = WarpFn::Sin;
  std::vector<std::shared_ptr<const WarpNode>> args;
};

using WarpNodePtr = std::shared_ptr<const WarpNode>;

bool same_tree(const WarpNode& a, const WarpNode& b);

// f, f', f'', f''', f'''' at a point.
using WarpJet = std::array<double, 5>;

class WarpFunction {
 public:
  // Grammar: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
  // factor := '-' factor | base ('^' integer)? ; base := number | 't' | ident '(' expr ')' | '(' expr ')'.
  static WarpFunction parse(const std::string& text);
  static WarpFunction from_tree(WarpNodePtr root) { return WarpFunction(std::move(root)); }

  std::string str() const;
  const WarpNode& root() const { return *root_; }

  template <class T>
  T eval(const T& t) const;

  double operator()(double t) const { return eval<double>(t); }
  WarpJet derivatives(double t) const;

  friend bool operator==(const WarpFunction& a, const WarpFunction& b) { return same_tree(*a.root_, *b.root_); }

 private:
  explicit WarpFunction(WarpNodePtr root) : root_(std::move(root)) {}
  WarpNodePtr root_;
};

// Chain-rule propagation to fourth order (the fourth derivative feeds r_{;kk}).
WarpJet warp_derivatives(const WarpFunction& f, double t);

// f, f', f'', f''' by seven-point central differences in long double.
std::array<double, 4> central_differences(const WarpFunction& f, double t, double h = 1e-3);

// Random tree over the full grammar, at most `depth` operators deep.
WarpFunction random_warp(std::mt19937_64& rng, int depth);

namespace detail {

template <class T>
double scalar_of(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) return static_cast<double>(x);
  else return static_cast<double>(x.derivative(0));
}

template <class T>
T eval_node(const WarpNode& n, const T& t) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sinh;
  switch (n.kind) {
    case WarpNode::Kind::Num: return T(n.num.get_d());
    case WarpNode::Kind::Var: return t;
    case WarpNode::Kind::Neg: return -eval_node(*n.args[0], t);
    case WarpNode::Kind::Add: return eval_node(*n.args[0], t) + eval_node(*n.args[1], t);
    case WarpNode::Kind::Sub: return eval_node(*n.args[0], t) - eval_node(*n.args[1], t);
    case WarpNode::Kind::Mul: return eval_node(*n.args[0], t) * eval_node(*n.args[1], t);
    case WarpNode::Kind::Div: {
      T d = eval_node(*n.args[1], t);
      if (scalar_of(d) == 0) throw WarpDomainError("division by zero");
      return eval_node(*n.args[0], t) / d;
    }
    case WarpNode::Kind::Pow: {
      T b = eval_node(*n.args[0], t);
      if (n.exponent < 0 && scalar_of(b) == 0) throw WarpDomainError("division by zero");
      T r(1.0);
      for (int i = 0; i < std::abs(n.exponent); ++i) r = r * b;
      return n.exponent < 0 ? T(1.0) / r : r;
    }
    case WarpNode::Kind::Call: {
      T x = eval_node(*n.args[0], t);
      switch (n.fn) {
        case WarpFn::Sin: return sin(x);
        case WarpFn::Cos: return cos(x);
        case WarpFn::Exp: return exp(x);
        case WarpFn::Ln:
          if (!(scalar_of(x) > 0)) throw WarpDomainError("ln of a nonpositive value");
          return log(x);
        case WarpFn::Sinh: return sinh(x);
        case WarpFn::Cosh: return cosh(x);
      }
    }
  }
  throw std::logic_error("bad warp node");
}

}  // namespace detail

template <class T>
T WarpFunction::eval(const T& t) const {
  return detail::eval_node(*root_, t);
}

}  // namespace wres
