#include "doctest.h"

#include <cmath>
#include <random>

#include "sympinv/geometry.hpp"
#include "sympinv/inv_contact.hpp"
#include "sympinv/inv_functions.hpp"
#include "sympinv/rank.hpp"
#include "sympinv/sample.hpp"

using namespace sympinv;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b))); }
double rel_err(double a, double b) { return std::fabs(a - b) / std::max(1e-300, std::max(std::fabs(a), std::fabs(b))); }

GroupElement<double> contact_scaling(double lambda) {
  return GroupElement<double>(SymplecticSpace::darboux(1), Flavor::ContactCSp, Mat<double>::Identity(2, 2) * lambda,
                              lambda, {}, lambda * lambda);
}

double chart_conditioning(const GraphJet<double>& jet, const GroupElement<double>& g) {
  const auto img = g.apply(jet.ambient());
  const int p = jet.nvars();
  Eigen::MatrixXd J(p, p), T(3, p);
  for (int v = 0; v < p; ++v) {
    std::vector<int> alpha(static_cast<std::size_t>(p), 0);
    alpha[static_cast<std::size_t>(v)] = 1;
    for (int a = 0; a < 3; ++a) T(a, v) = img[static_cast<std::size_t>(a)].coeff(alpha);
    for (int i = 0; i < p; ++i) J(i, v) = T(jet.indep[static_cast<std::size_t>(i)], v);
  }
  const double full = Eigen::JacobiSVD<Eigen::MatrixXd>(T).singularValues().minCoeff();
  return Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues().minCoeff() / full;
}

template <class S>
std::vector<S> extended_values(const InvariantSet<S>& s) {
  std::vector<S> v;
  for (const auto& j : s.values) v.push_back(j.value());
  for (const auto& d : s.derivations)
    for (const auto& j : s.values) v.push_back(d.apply(j).value());
  return v;
}

std::vector<DualD> dual_values(const InvariantSet<DualD>& s, const std::vector<std::string>& names) {
  std::vector<DualD> v;
  for (const auto& n : names) v.push_back(s[n].value());
  return v;
}

template <class Fn>
void check_group_invariance(std::mt19937_64& rng, Flavor flavor, int jets, int order, const std::vector<int>& indep,
                            const std::vector<int>& dep, Fn&& values) {
  const auto V = SymplecticSpace::darboux(1);
  for (int j = 0; j < jets; ++j) {
    const auto g = random_graph_jet(3, indep, dep, order, rng);
    const auto a = values(g);
    int used = 0;
    for (int e = 0; e < 400 && used < 50; ++e) {
      const auto h = random_group_element(V, flavor, rng());
      if (chart_conditioning(g, h) < 0.3) continue;
      ++used;
      const auto b = values(pushforward(g, h));
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(rel_diff(a[i], b[i]) < 1e-8);
    }
    CHECK(used == 50);
  }
}

}  // namespace

TEST_CASE("I0 = 2z - xy is annihilated by the lifted algebra and has weight 2") {
  const ContactSpace W(1);
  std::mt19937_64 rng(80);
  const auto basis = algebra_basis(W.base(), Flavor::ContactCSp);
  REQUIRE(basis.size() == 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> p{generic_coefficient(rng), generic_coefficient(rng), generic_coefficient(rng)};
    const double I0 = W.base_invariant(p);
    const std::vector<double> grad{-p[1], -p[0], 2.0};
    for (std::size_t k = 0; k < basis.size(); ++k) {
      double L = 0;
      for (std::size_t a = 0; a < 3; ++a) L += basis[k][a].eval(p) * grad[a];
      // The last basis field is generated by I0 itself and acts as a scaling.
      if (k < 3)
        CHECK(std::fabs(L) < 1e-12);
      else
        CHECK(std::fabs(L) > 1e-6 * std::fabs(I0));
    }
    const auto q = contact_scaling(2.0).apply(p);
    CHECK(rel_err(W.base_invariant(q), 4 * I0) < 1e-12);
  }
}

TEST_CASE("contact curves: worked values") {
  const auto info = geometry_info(Geometry::ContactCurve, 1);
  const auto g = graph_jet<Rational>(info, std::vector<std::string>{"x^2", "x^3"}, {Rational(1)}, 3);
  const auto inv = contact_curve_invariants(g);
  CHECK(inv["I1"].value() == Rational(2));
  CHECK(inv["I2a'"].value() == Rational(2));

  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_graph_jet(3, info.indep, info.dep, 3, rng);
    const double x = c.base[0], y = c.u[0].value(), z = c.u[1].value();
    const double y1 = c.u[0].derivative(std::vector<int>{1}), y2 = c.u[0].derivative(std::vector<int>{2});
    const double z1 = c.u[1].derivative(std::vector<int>{1}), z2 = c.u[1].derivative(std::vector<int>{2});
    const double d = x * y1 - y, I0 = 2 * z - x * y;
    const auto h = contact_curve_invariants(c);
    CHECK(rel_diff(h["I1"].value(), (z1 - y) / d) < 1e-12);
    CHECK(rel_diff(h["I2a'"].value(), I0 * I0 * y2 / (d * d * d)) < 1e-10);
    CHECK(rel_diff(h["I2b'"].value(), I0 / (d * d * d) * (x * (y - z1) * y2 - d * (y1 - z2))) < 1e-10);
    CHECK(rel_diff(h.derivation("nabla'").values()[0], I0 / d) < 1e-12);
  }

  const auto zero = graph_jet<double>(info, std::vector<std::string>{"x + 1", "x*(x + 1)/2"}, {0.7}, 2);
  try {
    contact_curve_invariants(zero);
    FAIL("expected OnZeroLevelSet");
  } catch (const DegenerateError& e) {
    CHECK(e.code() == ErrorCode::OnZeroLevelSet);
  }
}

TEST_CASE("contact curves: weights 2, 0, -4, -2 and invariance") {
  std::mt19937_64 rng(82);
  const auto info = geometry_info(Geometry::ContactCurve, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph_jet(3, info.indep, info.dep, 4, rng);
    const auto a = contact_curve_invariants_g(g);
    const auto b = contact_curve_invariants_g(pushforward(g, contact_scaling(2.0)));
    const std::vector<std::pair<std::string, int>> weights{{"I0", 2}, {"I1", 0}, {"I2a", -4}, {"I2b", -2}};
    for (const auto& [name, w] : weights) CHECK(rel_err(b[name].value(), std::pow(2.0, w) * a[name].value()) < 1e-10);
    // nabla has weight -2: nabla(I2a) has weight -6.
    CHECK(rel_err(b.derivation("nabla").apply(b["I2a"]).value(),
                  std::pow(2.0, -6) * a.derivation("nabla").apply(a["I2a"]).value()) < 1e-10);
  }
  check_group_invariance(rng, Flavor::Contact, 20, 4, info.indep, info.dep,
                         [](const GraphJet<double>& g) { return extended_values(contact_curve_invariants_g(g)); });
  check_group_invariance(rng, Flavor::ContactCSp, 20, 4, info.indep, info.dep,
                         [](const GraphJet<double>& g) { return extended_values(contact_curve_invariants(g)); });
}

TEST_CASE("contact surfaces: z = xy, reductions and agreement with functions of u = 2z - xy") {
  const auto info = geometry_info(Geometry::ContactSurface, 1);
  for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {Rational(-1, 3), 5}}) {
    const auto g = graph_jet<Rational>(info, std::vector<std::string>{"x*y"}, {x, y}, 2);
    CHECK(contact_surface_invariants_g(g)["I1"].value() == x * y);
    CHECK(contact_surface_invariants(g)["I1'"].value() == Rational(1));
  }

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph_jet(3, info.indep, info.dep, 3, rng);
    for (const auto& r : contact_surface_reductions(g)) CHECK(r.normalized() <= 1e-9);
    // The G-level invariants are those of the function u = 2z - xy on the plane.
    const auto coords = g.coordinates(g.order());
    const FunctionJet<double> u{g.base, 2.0 * g.u[0] - coords[0] * coords[1]};
    const auto fu = function_invariants_n1(u);
    const auto G = contact_surface_invariants_g(g);
    CHECK(rel_diff(G["I0"].value(), fu["I0"].value()) < 1e-12);
    CHECK(rel_diff(2 * G["I1"].value(), fu["I1"].value()) < 1e-12);
    CHECK(rel_diff(2 * G["I2a"].value(), fu["I2a"].value()) < 1e-12);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(rel_diff(G.derivation("nabla1").values()[i], fu.derivation("nabla1").values()[i]) < 1e-12);
      CHECK(rel_diff(G.derivation("nabla2").values()[i], fu.derivation("nabla2").values()[i]) < 1e-12);
    }
  }
}

TEST_CASE("contact surfaces: syzygies R1, R2 and invariance") {
  const auto info = geometry_info(Geometry::ContactSurface, 1);
  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = contact_surface_syzygies(random_graph_jet(3, info.indep, info.dep, 4, rng));
    REQUIRE(r.size() == 2);
    CHECK(r[0].normalized() <= 1e-7);
    CHECK(r[1].normalized() <= 1e-7);
  }
  const auto g = graph_jet<Rational>(info, std::vector<std::string>{"x^3*y/5 - 2*x*y^2 + y^4 + 3*x + 7"},
                                     {Rational(2, 3), Rational(-1, 2)}, 4);
  for (const auto& r : contact_surface_syzygies(g)) CHECK(r.exact_zero());
  for (const auto& r : contact_surface_reductions(g)) CHECK(r.exact_zero());

  check_group_invariance(rng, Flavor::ContactCSp, 20, 3, info.indep, info.dep,
                         [](const GraphJet<double>& s) { return extended_values(contact_surface_invariants(s)); });
}

TEST_CASE("contact functions: first-order values and reductions") {
  const auto u = contact_function_invariants(function_jet<Rational>("z", kXYZ, {Rational(1), Rational(1), Rational(1)}, 2));
  CHECK(u["I1a"].value() == Rational(-1));
  CHECK(u["I1b"].value() == Rational(1));

  std::mt19937_64 rng(85);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_function_jet(3, 3, rng);
    const auto inv = contact_function_invariants(f);
    const auto &n1 = inv.derivation("nabla1"), &n2 = inv.derivation("nabla2");
    const auto &I0 = inv["I0"], &a = inv["I1a"], &b = inv["I1b"];
    CHECK(rel_diff(a.value(), n2.apply(I0).value()) < 1e-10);
    CHECK(rel_diff(b.value(), (n1.apply(I0) + n2.apply(I0)).value()) < 1e-10);
    CHECK(rel_diff(inv["I2a"].value(), (n1.apply(b) - n1.apply(a)).value()) < 1e-10);
    CHECK(rel_diff(inv["I2b"].value(), n1.apply(a).value()) < 1e-10);
    CHECK(rel_diff(inv["I2d"].value(), n2.apply(a).value()) < 1e-10);
  }
  // I2c and I2e are functions of I0, I1a, I1b and their six derivatives; I2f is not.
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_function_jet(3, 3, rng);
    std::vector<int> seeds;
    for (int k = 0; k < 10; ++k) seeds.push_back(k);
    auto with = [&](const std::vector<std::string>& extra) {
      return jacobian_rank(
          [&](const FunctionJet<DualD>& d) {
            const auto inv = contact_function_invariants(d);
            auto v = dual_values(inv, {"I0", "I1a", "I1b"});
            for (const auto& nab : inv.derivations)
              for (const char* n : {"I1a", "I1b"}) v.push_back(nab.apply(inv[n]).value());
            for (const auto& e : dual_values(inv, extra)) v.push_back(e);
            return v;
          },
          f, seeds, false);
    };
    const int base = with({});
    CHECK(base == 8);
    CHECK(with({"I2a", "I2b", "I2c", "I2d", "I2e"}) == base);
    CHECK(with({"I2f"}) == base + 1);
  }
}

TEST_CASE("contact functions: syzygies R1-R7") {
  std::mt19937_64 rng(86);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = contact_syzygy_suite(random_function_jet(3, 4, rng));
    REQUIRE(r.size() == 7);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CAPTURE(i);
      CHECK(r[i].normalized() <= 1e-7);
    }
  }
  const auto f = function_jet<Rational>("x^2*z - y*z^2/3 + x*y^3 + 2*z + x^3*y*z/5", kXYZ,
                                        {Rational(1, 2), Rational(2), Rational(-1, 3)}, 4);
  for (const auto& r : contact_syzygy_suite(f)) CHECK(r.exact_zero());

  try {
    contact_syzygy_suite(function_jet<double>("3", kXYZ, {1.0, 2.0, 0.3}, 3));
    FAIL("expected DegenerateJet");
  } catch (const DegenerateError& e) {
    CHECK(e.code() == ErrorCode::DegenerateJet);
  }
}

TEST_CASE("contact functions: invariance, including exact invariance of the table") {
  std::mt19937_64 rng(87);
  const auto V = SymplecticSpace::darboux(1);
  for (int j = 0; j < 20; ++j) {
    const auto f = random_function_jet(3, 3, rng);
    const auto a = extended_values(contact_function_invariants(f));
    for (int e = 0; e < 50; ++e) {
      const auto b = extended_values(contact_function_invariants(pushforward(f, random_group_element(V, Flavor::ContactCSp, rng()))));
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(rel_diff(a[i], b[i]) < 1e-8);
    }
  }
  const auto f = function_jet<Rational>("x*y*z + x^2 - 3*y*z^2 + z/7 + x^2*y^2", kXYZ,
                                        {Rational(1, 3), Rational(-2), Rational(3, 2)}, 2);
  const auto a = contact_function_invariants(f);
  for (int e = 0; e < 5; ++e) {
    const auto b = contact_function_invariants(pushforward(f, random_rational_element(V, Flavor::ContactCSp, 900 + e)));
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      CAPTURE(a.names[i]);
      CHECK(a.values[i].value() == b.values[i].value());
    }
  }
}

TEST_CASE("contact counts from orbit dimensions") {
  auto h = [](Geometry geom, int k) {
    const auto info = geometry_info(geom, 1);
    auto inv = [&](int j) { return jet_space_dimension(info, j) - orbit_dimension(info, Flavor::ContactCSp, j, 500 + j); };
    return k == 0 ? inv(0) : inv(k) - inv(k - 1);
  };
  CHECK(h(Geometry::ContactFunction, 0) == 1);
  CHECK(h(Geometry::ContactFunction, 1) == 2);
  CHECK(h(Geometry::ContactFunction, 2) == 6);
  CHECK(h(Geometry::ContactCurve, 0) == 0);
  CHECK(h(Geometry::ContactCurve, 1) == 1);
  CHECK(h(Geometry::ContactCurve, 2) == 2);
  CHECK(h(Geometry::ContactCurve, 3) == 2);
  CHECK(h(Geometry::ContactSurface, 1) == 1);
  CHECK(h(Geometry::ContactSurface, 2) == 3);
  CHECK(h(Geometry::ContactSurface, 3) == 4);
}
