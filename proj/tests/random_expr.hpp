#pragma once

#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/polynomial.hpp"

namespace sympinv {

// Random polynomial-only expression, built simultaneously as text and as a
// polynomial over Q (the oracle).
struct RandomPolyExpr {
  std::mt19937_64 rng;
  std::vector<std::string> vars{"a", "b", "c"};

  std::pair<std::string, Polynomial<Rational>> leaf() {
    std::uniform_int_distribution<int> pick(0, 4);
    const int k = pick(rng);
    if (k < 3) return {vars[static_cast<std::size_t>(k)], Polynomial<Rational>::variable(3, k)};
    std::uniform_int_distribution<int> lit(1, 9);
    const int v = lit(rng);
    if (k == 3) return {std::to_string(v), Polynomial<Rational>::constant(3, Rational(v))};
    return {"0." + std::to_string(v) + "5", Polynomial<Rational>::constant(3, Rational(v * 10 + 5, 100))};
  }

  std::pair<std::string, Polynomial<Rational>> node(int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    if (depth == 0) return leaf();
    const int k = pick(rng);
    if (k == 0) return leaf();
    auto [ta, pa] = node(depth - 1);
    if (k == 5) {
      std::uniform_int_distribution<int> e(0, 2);
      const int p = e(rng);
      Polynomial<Rational> r = Polynomial<Rational>::constant(3, Rational(1));
      for (int i = 0; i < p; ++i) r = r * pa;
      return {"(" + ta + ")^" + std::to_string(p), r};
    }
    if (k == 4) return {"-(" + ta + ")", -pa};
    auto [tb, pb] = node(depth - 1);
    if (k == 1) return {"(" + ta + ") + (" + tb + ")", pa + pb};
    if (k == 2) return {"(" + ta + ") - (" + tb + ")", pa - pb};
    return {"(" + ta + ") * (" + tb + ")", pa * pb};
  }
};

// Coefficient of the monomial alpha in the Taylor expansion of p at base.
inline Rational taylor_coefficient(const Polynomial<Rational>& p, std::span<const int> alpha,
                                   const std::vector<Rational>& base) {
  Polynomial<Rational> d = p;
  Rational denom(1);
  for (std::size_t v = 0; v < alpha.size(); ++v) {
    for (int r = 0; r < alpha[v]; ++r) {
      d = d.diff(static_cast<int>(v));
      denom *= r + 1;
    }
  }
  return d.template eval<Rational>(base) / denom;
}

}  // namespace sympinv
