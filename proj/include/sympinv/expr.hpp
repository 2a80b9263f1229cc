#pragma once

// Expression language used by job files:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'
//
// Functions: sin cos exp log sqrt cbrt. Exponents must fold to a rational
// constant p/q with q in {1, 2, 3}. A leading "vars: a, b, c" line fixes the
// variable order; otherwise variables are numbered by first appearance.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sympinv/jet.hpp"
#include "sympinv/scalar.hpp"

namespace sympinv {

enum class ExprOp { Literal, Variable, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Log, Sqrt, Cbrt };

struct ExprNode {
  ExprOp op = ExprOp::Literal;
  std::string text;  // literal spelling or variable name
  int var = -1;
  int num = 1, den = 1;  // exponent for Pow
  std::vector<std::shared_ptr<const ExprNode>> kids;
};

bool operator==(const ExprNode& a, const ExprNode& b);

class Expr {
 public:
  Expr() = default;
  Expr(std::shared_ptr<const ExprNode> root, std::vector<std::string> vars)
      : root_(std::move(root)), vars_(std::move(vars)) {}

  const ExprNode& root() const { return *root_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int var_index(const std::string& name) const;

  friend bool operator==(const Expr& a, const Expr& b) { return a.vars_ == b.vars_ && *a.root_ == *b.root_; }

 private:
  std::shared_ptr<const ExprNode> root_;
  std::vector<std::string> vars_;
};

Expr parse_expr(const std::string& src);
Expr parse_expr(const std::string& src, const std::vector<std::string>& vars);
// Canonical, fully parenthesized text; parse(print(e)) == e.
std::string print_expr(const Expr& e);
std::string print_expr(const ExprNode& n);

// Scalar underlying a (possibly nested) jet or dual type.
template <class T>
struct base_scalar {
  using type = T;
};
template <class S>
struct base_scalar<MultiJet<S>> {
  using type = typename base_scalar<S>::type;
};
template <class S>
struct base_scalar<Dual<S>> {
  using type = typename base_scalar<S>::type;
};

template <class T>
T literal_value(const std::string& text) {
  return T(scalar_from_decimal<typename base_scalar<T>::type>(text));
}

// x^(num/den) over any supported scalar.
template <class S>
MultiJet<S> rational_power(const MultiJet<S>& x, int num, int den) {
  return pow(x, num, den);
}
template <class T>
T rational_power(const T& x, int num, int den) {
  if (den == 1) return ipow(x, num);
  if (is_zero(x)) throw Error(ErrorCode::DomainError, "fractional power of zero");
  const T root = den == 2 ? fn::sqrt(x) : fn::cbrt(x);
  return ipow(root, num);
}

template <class T>
T eval_node(const ExprNode& n, const std::vector<T>& args) {
  switch (n.op) {
    case ExprOp::Literal: return literal_value<T>(n.text);
    case ExprOp::Variable:
      if (n.var < 0 || static_cast<std::size_t>(n.var) >= args.size())
        throw Error(ErrorCode::UnboundVariable, "variable '" + n.text + "' is not bound");
      return args[static_cast<std::size_t>(n.var)];
    case ExprOp::Neg: return -eval_node(*n.kids[0], args);
    case ExprOp::Add: return eval_node(*n.kids[0], args) + eval_node(*n.kids[1], args);
    case ExprOp::Sub: return eval_node(*n.kids[0], args) - eval_node(*n.kids[1], args);
    case ExprOp::Mul: return eval_node(*n.kids[0], args) * eval_node(*n.kids[1], args);
    case ExprOp::Div: return eval_node(*n.kids[0], args) / eval_node(*n.kids[1], args);
    case ExprOp::Pow: return rational_power(eval_node(*n.kids[0], args), n.num, n.den);
    case ExprOp::Sin: return fn::sin(eval_node(*n.kids[0], args));
    case ExprOp::Cos: return fn::cos(eval_node(*n.kids[0], args));
    case ExprOp::Exp: return fn::exp(eval_node(*n.kids[0], args));
    case ExprOp::Log: return fn::log(eval_node(*n.kids[0], args));
    case ExprOp::Sqrt: return fn::sqrt(eval_node(*n.kids[0], args));
    case ExprOp::Cbrt: return fn::cbrt(eval_node(*n.kids[0], args));
  }
  throw Error(ErrorCode::InvalidArgument, "corrupt expression node");
}

// Evaluate with arguments in the expression's variable order.
template <class T>
T eval(const Expr& e, const std::vector<T>& args) {
  if (args.size() < e.vars().size())
    throw Error(ErrorCode::UnboundVariable, "variable '" + e.vars()[args.size()] + "' is not bound");
  return eval_node(e.root(), args);
}

// Evaluate with arguments bound by name.
template <class T>
T eval(const Expr& e, const std::map<std::string, T>& bindings) {
  std::vector<T> args;
  args.reserve(e.vars().size());
  for (const auto& v : e.vars()) {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw Error(ErrorCode::UnboundVariable, "variable '" + v + "' is not bound");
    args.push_back(it->second);
  }
  return eval_node(e.root(), args);
}

template <class S>
MultiJet<S> eval_on_jets(const Expr& e, const std::map<std::string, MultiJet<S>>& bindings) {
  return eval(e, bindings);
}

}  // namespace sympinv
