#include "sympinv/expr.hpp"

#include <algorithm>
#include <cctype>

namespace sympinv {

bool operator==(const ExprNode& a, const ExprNode& b) {
  if (a.op != b.op || a.kids.size() != b.kids.size()) return false;
  if (a.op == ExprOp::Literal && a.text != b.text) return false;
  if (a.op == ExprOp::Variable && (a.text != b.text || a.var != b.var)) return false;
  if (a.op == ExprOp::Pow && (a.num != b.num || a.den != b.den)) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(*a.kids[i] == *b.kids[i])) return false;
  return true;
}

int Expr::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

const std::map<std::string, ExprOp>& functions() {
  static const std::map<std::string, ExprOp> table{{"sin", ExprOp::Sin},   {"cos", ExprOp::Cos},
                                                   {"exp", ExprOp::Exp},   {"log", ExprOp::Log},
                                                   {"sqrt", ExprOp::Sqrt}, {"cbrt", ExprOp::Cbrt}};
  return table;
}

NodePtr make(ExprOp op, std::vector<NodePtr> kids) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->kids = std::move(kids);
  return n;
}

class Parser {
 public:
  Parser(const std::string& src, std::size_t start, std::vector<std::string> vars, bool fixed)
      : s_(src), pos_(start), vars_(std::move(vars)), fixed_(fixed) {}

  Expr run() {
    NodePtr root = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return Expr(root, vars_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::SyntaxError) const {
    throw SyntaxError(code, pos_, msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(ExprOp::Add, {lhs, term()});
      else if (accept('-'))
        lhs = make(ExprOp::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(ExprOp::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(ExprOp::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(ExprOp::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    NodePtr e = unary();
    Rational r;
    if (!fold(*e, r)) throw SyntaxError(ErrorCode::SyntaxError, at, "exponent must be a constant rational");
    const auto den = boost::multiprecision::denominator(r);
    const auto num = boost::multiprecision::numerator(r);
    if (den != 1 && den != 2 && den != 3)
      throw SyntaxError(ErrorCode::SyntaxError, at, "exponent denominator must be 1, 2 or 3");
    if (boost::multiprecision::abs(num) > 1000) throw SyntaxError(ErrorCode::SyntaxError, at, "exponent too large");
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Pow;
    n->num = num.convert_to<int>();
    n->den = den.convert_to<int>();
    n->kids = {base};
    return n;
  }

  // Constant folding of exponent subexpressions.
  static bool fold(const ExprNode& n, Rational& out) {
    Rational a, b;
    switch (n.op) {
      case ExprOp::Literal: out = rational_from_decimal(n.text); return true;
      case ExprOp::Neg:
        if (!fold(*n.kids[0], a)) return false;
        out = -a;
        return true;
      case ExprOp::Add:
      case ExprOp::Sub:
      case ExprOp::Mul:
      case ExprOp::Div:
        if (!fold(*n.kids[0], a) || !fold(*n.kids[1], b)) return false;
        if (n.op == ExprOp::Add) out = a + b;
        if (n.op == ExprOp::Sub) out = a - b;
        if (n.op == ExprOp::Mul) out = a * b;
        if (n.op == ExprOp::Div) {
          if (b == 0) return false;
          out = a / b;
        }
        return true;
      case ExprOp::Pow:
        if (!fold(*n.kids[0], a) || n.den != 1) return false;
        if (a == 0 && n.num < 0) return false;
        out = ipow(a, n.num);
        return true;
      default: return false;
    }
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Literal;
    n->text = s_.substr(start, pos_ - start);
    try {
      (void)rational_from_decimal(n->text);
    } catch (const Error&) {
      throw SyntaxError(ErrorCode::SyntaxError, start, "malformed number '" + n->text + "'");
    }
    skip();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      fail("implicit multiplication is not allowed");
    return n;
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      auto f = functions().find(id);
      if (f == functions().end()) throw SyntaxError(ErrorCode::UnknownFunction, start, "unknown function '" + id + "'");
      ++pos_;
      NodePtr arg = expr();
      if (accept(',')) throw SyntaxError(ErrorCode::ArityError, pos_, "function '" + id + "' takes one argument");
      if (!accept(')')) fail("expected ')'");
      return make(f->second, {arg});
    }
    if (functions().count(id)) throw SyntaxError(ErrorCode::ArityError, start, "function '" + id + "' needs an argument");
    auto it = std::find(vars_.begin(), vars_.end(), id);
    int index;
    if (it != vars_.end()) {
      index = static_cast<int>(it - vars_.begin());
    } else {
      if (fixed_) throw SyntaxError(ErrorCode::UnboundVariable, start, "undeclared variable '" + id + "'");
      vars_.push_back(id);
      index = static_cast<int>(vars_.size()) - 1;
    }
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Variable;
    n->text = id;
    n->var = index;
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
      fail("implicit multiplication is not allowed");
    return n;
  }

  const std::string& s_;
  std::size_t pos_;
  std::vector<std::string> vars_;
  bool fixed_;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Expr parse_expr(const std::string& src) {
  std::size_t start = 0;
  while (start < src.size() && std::isspace(static_cast<unsigned char>(src[start]))) ++start;
  if (src.compare(start, 5, "vars:") == 0) {
    std::size_t eol = src.find_first_of("\n;", start);
    if (eol == std::string::npos) throw SyntaxError(ErrorCode::SyntaxError, src.size(), "expression missing after vars header");
    std::vector<std::string> vars;
    std::string list = src.substr(start + 5, eol - start - 5);
    std::size_t p = 0;
    while (p <= list.size()) {
      std::size_t q = list.find(',', p);
      if (q == std::string::npos) q = list.size();
      std::string v = trim(list.substr(p, q - p));
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
        throw SyntaxError(ErrorCode::SyntaxError, start + 5 + p, "bad variable name in vars header");
      if (std::find(vars.begin(), vars.end(), v) != vars.end())
        throw SyntaxError(ErrorCode::SyntaxError, start + 5 + p, "duplicate variable '" + v + "'");
      vars.push_back(v);
      p = q + 1;
    }
    return Parser(src, eol + 1, vars, true).run();
  }
  return Parser(src, start, {}, false).run();
}

Expr parse_expr(const std::string& src, const std::vector<std::string>& vars) {
  return Parser(src, 0, vars, true).run();
}

std::string print_expr(const ExprNode& n) {
  auto k = [&](std::size_t i) { return print_expr(*n.kids[i]); };
  switch (n.op) {
    case ExprOp::Literal:
    case ExprOp::Variable: return n.text;
    case ExprOp::Neg: return "(-" + k(0) + ")";
    case ExprOp::Add: return "(" + k(0) + " + " + k(1) + ")";
    case ExprOp::Sub: return "(" + k(0) + " - " + k(1) + ")";
    case ExprOp::Mul: return "(" + k(0) + " * " + k(1) + ")";
    case ExprOp::Div: return "(" + k(0) + " / " + k(1) + ")";
    case ExprOp::Pow: {
      std::string e = n.den == 1 ? std::to_string(n.num) : std::to_string(n.num) + "/" + std::to_string(n.den);
      if (n.num < 0 || n.den != 1) e = "(" + e + ")";
      return "(" + k(0) + " ^ " + e + ")";
    }
    case ExprOp::Sin: return "sin(" + k(0) + ")";
    case ExprOp::Cos: return "cos(" + k(0) + ")";
    case ExprOp::Exp: return "exp(" + k(0) + ")";
    case ExprOp::Log: return "log(" + k(0) + ")";
    case ExprOp::Sqrt: return "sqrt(" + k(0) + ")";
    case ExprOp::Cbrt: return "cbrt(" + k(0) + ")";
  }
  return "?";
}

std::string print_expr(const Expr& e) {
  std::string head = "vars: ";
  for (std::size_t i = 0; i < e.vars().size(); ++i) head += (i ? ", " : "") + e.vars()[i];
  return (e.vars().empty() ? std::string() : head + "\n") + print_expr(e.root());
}

}  // namespace sympinv
