#include "doctest.h"

#include <random>

#include "sympinv/expr.hpp"
#include "sympinv/polynomial.hpp"
#include "random_expr.hpp"

using namespace sympinv;

namespace {

using RJet = MultiJet<Rational>;
using RPoly = Polynomial<Rational>;

std::map<std::string, MultiJet<double>> bind1(const std::string& name, const MultiJet<double>& j) { return {{name, j}}; }

int error_code_of(const std::string& src) {
  try {
    parse_expr(src);
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

std::size_t error_offset_of(const std::string& src) {
  try {
    parse_expr(src);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  return std::string::npos;
}


}  // namespace

TEST_CASE("parse: worked examples") {
  const auto e = parse_expr("t^2 + 3*t");
  REQUIRE(e.vars() == std::vector<std::string>{"t"});
  const auto& r = e.root();
  CHECK(r.op == ExprOp::Add);
  CHECK(r.kids[0]->op == ExprOp::Pow);
  CHECK(r.kids[0]->num == 2);
  CHECK(r.kids[1]->op == ExprOp::Mul);
  CHECK(r.kids[1]->kids[0]->text == "3");

  const auto xyz = parse_expr("vars: x, y, z\nx*y - 2*z");
  CHECK(xyz.vars() == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_expr("x*y - 2*z", {"x", "y", "z"}).vars().size() == 3);
  CHECK(parse_expr("vars: z, y, x; x").vars() == std::vector<std::string>{"z", "y", "x"});
  CHECK(parse_expr("y + x").vars() == std::vector<std::string>{"y", "x"});

  const auto cube = parse_expr("t^(1/3)");
  CHECK(cube.root().op == ExprOp::Pow);
  CHECK(cube.root().num == 1);
  CHECK(cube.root().den == 3);
}

TEST_CASE("parse: precedence and associativity") {
  const auto t = MultiJet<double>(2.0);
  auto v = [&](const std::string& s) { return eval_on_jets(parse_expr(s), bind1("t", t)).value(); };
  CHECK(v("2^3^2") == doctest::Approx(512));
  CHECK(v("-t^2") == doctest::Approx(-4));
  CHECK(v("1 - t - 1") == doctest::Approx(-2));
  CHECK(v("12 / t / 3") == doctest::Approx(2));
  CHECK(v("t^-1") == doctest::Approx(0.5));
  CHECK(v("(t + 2)^(3/2)") == doctest::Approx(8));
  CHECK(v("cbrt(t*4)") == doctest::Approx(2));
  CHECK(v("exp(0*t) + log(t/2) + sin(0) + cos(0)") == doctest::Approx(2));
}

TEST_CASE("parse: errors carry codes and offsets") {
  CHECK(error_code_of("2 x") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK(error_offset_of("2 x") == 2);
  CHECK(error_code_of("t + ") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK(error_offset_of("t + ") == 4);
  CHECK(error_code_of("(t") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK(error_code_of("tan(t)") == static_cast<int>(ErrorCode::UnknownFunction));
  CHECK(error_offset_of("1 + tan(t)") == 4);
  CHECK(error_code_of("sin(t, t)") == static_cast<int>(ErrorCode::ArityError));
  CHECK(error_code_of("sin") == static_cast<int>(ErrorCode::ArityError));
  CHECK(error_code_of("t^x") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK(error_code_of("t^(1/4)") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK(error_code_of("t $ 2") == static_cast<int>(ErrorCode::SyntaxError));
  CHECK_THROWS_AS(parse_expr("x + w", {"x"}), SyntaxError);
}

TEST_CASE("eval: worked examples") {
  const auto t = MultiJet<double>::variable(1, 2, 0, {1.0});
  const auto sq = eval_on_jets(parse_expr("t^2"), bind1("t", t));
  CHECK(sq[0] == doctest::Approx(1));
  CHECK(sq[1] == doctest::Approx(2));
  CHECK(sq[2] == doctest::Approx(1));

  const auto s = MultiJet<double>::variable(1, 2, 0, {0.0});
  const std::map<std::string, MultiJet<double>> xy{{"x", MultiJet<double>(1.0) + s}, {"y", MultiJet<double>(1.0) - s}};
  const auto p = eval_on_jets(parse_expr("x*y"), xy);
  CHECK(p[0] == doctest::Approx(1));
  CHECK(p[1] == doctest::Approx(0));
  CHECK(p[2] == doctest::Approx(-1));

  const auto five = eval_on_jets(parse_expr("5"), std::map<std::string, MultiJet<double>>{});
  CHECK(five.value() == 5.0);

  CHECK_THROWS_AS(eval_on_jets(parse_expr("x + y"), bind1("x", t)), Error);
}

TEST_CASE("property: printer round trip") {
  RandomPolyExpr g{std::mt19937_64(11)};
  for (int i = 0; i < 300; ++i) {
    const auto e = parse_expr(g.node(6).first);
    const auto printed = print_expr(e);
    const auto again = parse_expr(printed);
    CHECK(again == e);
    CHECK(print_expr(again) == printed);
  }
  for (const char* s : {"sin(x)^(1/3) - exp(-y)/2.5e-1", "sqrt(x) * cbrt(y) + log(x)", "--x", "x^(-2/3)"}) {
    const auto e = parse_expr(s);
    CHECK(parse_expr(print_expr(e)) == e);
  }
}

TEST_CASE("property: plain numbers agree with order-0 jets") {
  RandomPolyExpr g{std::mt19937_64(12)};
  const std::vector<double> pt{0.3, -1.2, 0.8};
  for (int i = 0; i < 300; ++i) {
    const auto e = parse_expr(g.node(5).first, g.vars);
    const double direct = eval(e, pt);
    std::vector<MultiJet<double>> jets;
    for (double v : pt) jets.push_back(MultiJet<double>::zero(3, 0) + MultiJet<double>(v));
    const double via = eval(e, jets).value();
    CHECK(direct == doctest::Approx(via).epsilon(1e-13));
  }
}

TEST_CASE("property: jet evaluation matches the exact polynomial oracle") {
  RandomPolyExpr g{std::mt19937_64(13)};
  const std::vector<Rational> base{Rational(1, 2), Rational(-3, 4), Rational(2)};
  const int order = 3;
  std::vector<RJet> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(RJet::variable(3, order, i, base));
  for (int trial = 0; trial < 1000; ++trial) {
    auto [text, poly] = g.node(6);
    const auto jet = eval(parse_expr(text, g.vars), vars);
    const auto layout = JetLayout::get(3, order);
    for (std::size_t k = 0; k < layout->size(); ++k) {
      const auto alpha = layout->exponents(k);
      const Rational expected = taylor_coefficient(poly, alpha, base);
      const Rational got = jet.is_constant() ? (k == 0 ? jet.value() : Rational(0)) : jet[k];
      CHECK(got == expected);
    }
  }
}
