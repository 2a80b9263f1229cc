#include "doctest.h"

#include <random>

#include "sympinv/inv_functions.hpp"
#include "sympinv/sample.hpp"

using namespace sympinv;

namespace {

const std::vector<std::string> kXY{"x", "y"};

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b))); }

}  // namespace

TEST_CASE("function invariants, worked values") {
  const auto f = function_jet<double>("x^2 + y^2", kXY, {1.0, 0.0}, 3);
  const auto inv = function_invariants_n1(f);
  CHECK(inv["I1"].value() == doctest::Approx(2));
  CHECK(inv["I2a"].value() == doctest::Approx(2));
  CHECK(inv.derivation("nabla1").apply(inv["I1"]).value() == doctest::Approx(4));

  const auto g = function_invariants_n1(function_jet<double>("x*y", kXY, {1.0, 1.0}, 2));
  CHECK(g["I2c"].value() == doctest::Approx(-2));
  // I2b = x u_y u_xx - y u_x u_yy + (y u_y - x u_x) u_xy = 0 for u = xy at (1, 1).
  CHECK(g["I2b"].value() == doctest::Approx(0));
}

TEST_CASE("function invariants match the displayed polynomials") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_function_jet(2, 2, rng);
    const double x = f.base[0], y = f.base[1];
    const double ux = f.u.derivative(std::vector<int>{1, 0}), uy = f.u.derivative(std::vector<int>{0, 1});
    const double uxx = f.u.derivative(std::vector<int>{2, 0}), uxy = f.u.derivative(std::vector<int>{1, 1}),
                 uyy = f.u.derivative(std::vector<int>{0, 2});
    const auto inv = function_invariants_n1(f);
    CHECK(rel_diff(inv["I1"].value(), x * ux + y * uy) < 1e-13);
    CHECK(rel_diff(inv["I2a"].value(), x * x * uxx + 2 * x * y * uxy + y * y * uyy) < 1e-13);
    CHECK(rel_diff(inv["I2b"].value(), x * uy * uxx - y * ux * uyy + (y * uy - x * ux) * uxy) < 1e-13);
    CHECK(rel_diff(inv["I2c"].value(), ux * ux * uyy - 2 * ux * uy * uxy + uy * uy * uxx) < 1e-13);
  }
}

TEST_CASE("reductions and nabla2(I0) = 0") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_function_jet(2, 3, rng);
    for (const auto& r : function_reductions_n1(f)) CHECK(r.normalized() <= 1e-12);
    CHECK(function_syzygies_n1(f)[0].normalized() <= 1e-12);
  }
}

TEST_CASE("property: syzygies R1-R3 and the A nabla2 expansion on random 3-jets") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_function_jet(2, 3, rng);
    const auto r = function_syzygies_n1(f);
    REQUIRE(r.size() == 3);
    for (const auto& x : r) CHECK(x.normalized() <= 1e-8);
    CHECK(endomorphism_expansion_n1(f).normalized() <= 1e-9);
  }
}

TEST_CASE("syzygies vanish exactly in rational arithmetic") {
  const std::vector<Rational> base{Rational(3, 2), Rational(-2, 3)};
  const auto f = function_jet<Rational>("x^3 - 2*x*y + y^2*x/5 + 7*y^3 + x^2*y^2", kXY, base, 3);
  for (const auto& r : function_syzygies_n1(f)) CHECK(r.exact_zero());
  for (const auto& r : function_reductions_n1(f)) CHECK(r.exact_zero());
  CHECK(endomorphism_expansion_n1(f).exact_zero());
}

TEST_CASE("general n reproduces n = 1 pairings") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_function_jet(2, 3, rng);
    const auto a = function_invariants_n1(f);
    const auto b = function_generators(SymplecticSpace::darboux(1), f);
    CHECK(rel_diff(b["I1_1"].value(), a["I2a"].value()) < 1e-13);
    CHECK(rel_diff(b["I1_2"].value(), -a["I2b"].value()) < 1e-13);
    CHECK(rel_diff(b["I2_2"].value(), a["I2c"].value()) < 1e-13);
  }
}

TEST_CASE("n = 2 frame: generic rank 4, degenerate for the round quadratic") {
  const auto V = SymplecticSpace::darboux(2);
  const std::vector<std::string> names = V.names();
  const std::vector<double> p{0.7, -0.4, 1.3, 0.5};
  // |p|^2 has Hess = 2 Id, so A nabla2 = 4 nabla1 and the frame has rank 2.
  const auto round = function_jet<double>("x1^2 + x2^2 + y1^2 + y2^2", names, p, 3);
  CHECK_THROWS_AS(function_generators(V, round), DegenerateError);
  const auto generic = function_jet<double>("x1^2 + 2*x2^2 + 3*y1^2 + 5*y2^2 + x1*y2 - x2*y1 + x1*x2*y1", names, p, 3);
  const auto gens = function_generators(V, generic);
  Eigen::MatrixXd M(4, 4);
  for (int i = 0; i < 4; ++i) {
    const auto v = gens.derivations[static_cast<std::size_t>(i)].values();
    for (int j = 0; j < 4; ++j) M(i, j) = v[static_cast<std::size_t>(j)];
  }
  CHECK(numeric_rank(M) == 4);
  CHECK(gens.names.size() == 2 + 4 + 3);
}

TEST_CASE("property: invariance under Sp pushforward") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2}) {
    const auto V = SymplecticSpace::darboux(n);
    const int jets = n == 1 ? 20 : 6;
    const int groups = n == 1 ? 100 : 20;
    for (int j = 0; j < jets; ++j) {
      const auto f = random_function_jet(2 * n, 3, rng);
      const auto before = function_generators(V, f);
      for (int k = 0; k < groups; ++k) {
        const auto g = random_group_element(V, Flavor::Sp, rng());
        const auto after = function_generators(V, pushforward(f, g));
        for (std::size_t i = 0; i < before.values.size(); ++i) {
          const double a = before.values[i].value(), b = after.values[i].value();
          CHECK(std::fabs(a - b) <= 1e-8 * std::max(1.0, std::fabs(a)));
        }
        // First derived invariants are invariant as well.
        const double da = before.derivations[1].apply(before.values[1]).value();
        const double db = after.derivations[1].apply(after.values[1]).value();
        CHECK(std::fabs(da - db) <= 1e-8 * std::max(1.0, std::fabs(da)));
      }
    }
  }
}

TEST_CASE("order requirements") {
  std::mt19937_64 rng(6);
  CHECK_THROWS_AS(function_invariants_n1(random_function_jet(2, 1, rng)), Error);
  CHECK_THROWS_AS(function_syzygies_n1(random_function_jet(2, 2, rng)), Error);
}
