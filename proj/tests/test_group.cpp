#include "doctest.h"

#include <random>

#include "sympinv/geometry.hpp"

using namespace sympinv;
using P = Polynomial<double>;

namespace {

bool same_field(const VectorField<double>& a, const VectorField<double>& b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const P d = a[i] - b[i];
    for (const auto& [m, c] : d.terms())
      if (std::fabs(c) > tol) return false;
  }
  return true;
}

VectorField<double> negate(VectorField<double> v) {
  for (auto& p : v) p = -p;
  return v;
}

}  // namespace

TEST_CASE("hamiltonian fields of the worked examples") {
  const auto V = SymplecticSpace::darboux(1);
  const P x = P::variable(2, 0), y = P::variable(2, 1);
  auto X = hamiltonian_field(x * x, V).field;
  CHECK(X[0].is_zero());
  CHECK(X[1] == -(2.0 * x));
  X = hamiltonian_field(x * y, V).field;
  CHECK(X[0] == x);
  CHECK(X[1] == -y);
  CHECK_THROWS_AS(hamiltonian_field(x * x * y, V), Error);

  const ContactSpace W(1);
  const P cx = P::variable(3, 0), cy = P::variable(3, 1), cz = P::variable(3, 2);
  X = contact_hamiltonian_field(2.0 * cz - cx * cy, W).field;
  CHECK(X[0] == cx);
  CHECK(X[1] == cy);
  CHECK(X[2] == 2.0 * cz);
  CHECK_THROWS_AS(contact_hamiltonian_field(cz * cx, W), Error);
}

// With the commutator [X, Y] = X(Y) - Y(X) and X_H = H_y d_x - H_x d_y the
// Poisson correspondence is an anti-homomorphism, [X_f, X_g] = -X_{f,g}, while
// the contact fields with the Lagrange bracket satisfy [X_f, X_g] = X_[f,g].
TEST_CASE("bracket closure, symplectic") {
  for (int n : {1, 2}) {
    const auto V = SymplecticSpace::darboux(n);
    const auto H = algebra_hamiltonians(V, Flavor::Sp);
    for (const auto& f : H)
      for (const auto& g : H) {
        const auto lhs = lie_bracket(hamiltonian_field(f, V).field, hamiltonian_field(g, V).field);
        const auto rhs = hamiltonian_field(poisson_bracket(f, g, V), V).field;
        CHECK(same_field(lhs, negate(rhs)));
      }
  }
}

TEST_CASE("bracket closure, contact") {
  const ContactSpace W(1);
  const auto H = algebra_hamiltonians(W.base(), Flavor::ContactCSp);
  for (const auto& f : H)
    for (const auto& g : H) {
      const auto lhs = lie_bracket(contact_hamiltonian_field(f, W).field, contact_hamiltonian_field(g, W).field);
      const auto rhs = contact_hamiltonian_field(lagrange_bracket(f, g, W), W).field;
      CHECK(same_field(lhs, rhs));
    }
}

TEST_CASE("random group elements satisfy their flavor") {
  for (int n : {1, 2, 3}) {
    const auto V = SymplecticSpace::darboux(n);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_group_element(V, Flavor::Sp, seed);
      CHECK(symplectic_defect(g) <= 1e-12);
      const auto h = random_group_element(V, Flavor::CSp, seed);
      const Eigen::MatrixXd& J = V.J();
      const double l2 = h.scale() * h.scale();
      CHECK((h.linear().transpose() * J * h.linear() - l2 * J).cwiseAbs().maxCoeff() <= 1e-12 * l2);
      CHECK(h.scale() > 0);
    }
  }
  const auto V = SymplecticSpace::for_surfaces();
  CHECK(symplectic_defect(random_group_element(V, Flavor::Sp, 5)) <= 1e-12);
  const auto id = exp_algebra(V, Flavor::Sp, Eigen::MatrixXd::Zero(4, 4));
  CHECK((id.linear() - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);
  const auto V2 = SymplecticSpace::darboux(2);
  const auto r = random_rational_element(V2, Flavor::Sp, 3);
  const Mat<Rational>& L = r.linear();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational acc(0);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) acc += L(a, i) * Rational(static_cast<int>(V2.J()(a, b))) * L(b, j);
      CHECK(acc == Rational(static_cast<int>(V2.J()(i, j))));
    }
}

TEST_CASE("pushforward of the parabola under a shear") {
  const auto V = SymplecticSpace::darboux(1);
  const double c = 0.7;
  Mat<double> L(2, 2);
  L << 1, 0, c, 1;
  const GroupElement<double> g(V, Flavor::Sp, L, 1.0, {}, 1.0);
  GraphJet<double> jet;
  jet.ambient_dim = 2;
  jet.indep = {0};
  jet.dep = {1};
  jet.base = {1.0};
  const auto x = MultiJet<double>::variable(1, 2, 0, {1.0});
  jet.u = {x * x};
  const auto img = pushforward(jet, g);
  CHECK(img.base[0] == doctest::Approx(1.0));
  CHECK(img.u[0].derivative(std::vector<int>{0}) == doctest::Approx(1 + c));
  CHECK(img.u[0].derivative(std::vector<int>{1}) == doctest::Approx(2 + c));
  CHECK(img.u[0].derivative(std::vector<int>{2}) == doctest::Approx(2));

  const auto same = pushforward(jet, GroupElement<double>::identity(V, Flavor::Sp));
  for (std::size_t k = 0; k < 3; ++k) CHECK(same.u[0][k] == doctest::Approx(jet.u[0][k]));

  const GroupElement<double> t(V, Flavor::ASp, Mat<double>::Identity(2, 2), 1.0, {0.3, -0.4}, 1.0);
  const auto moved = pushforward(jet, t);
  CHECK(moved.base[0] == doctest::Approx(1.3));
  CHECK(moved.u[0][0] == doctest::Approx(0.6));
  for (std::size_t k = 1; k < 3; ++k) CHECK(moved.u[0][k] == doctest::Approx(jet.u[0][k]));
}

TEST_CASE("contact lift matches the displayed action and rescales alpha") {
  const auto V = SymplecticSpace::darboux(1);
  Mat<double> A(2, 2);
  A << 1.5, 0.3, -0.2, 0.9;
  const double det = A.determinant();
  const GroupElement<double> g(V, Flavor::ContactCSp, A, std::sqrt(det), {}, det);
  const std::vector<double> p{0.4, -1.1, 0.8};
  const auto q = g.apply(p);
  const double X = 1.5 * 0.4 + 0.3 * -1.1, Y = -0.2 * 0.4 + 0.9 * -1.1;
  CHECK(q[2] == doctest::Approx(det * (0.8 - 0.5 * 0.4 * -1.1) + 0.5 * X * Y));
  // alpha' = mu alpha along a random direction.
  std::vector<MultiJet<double>> line;
  const auto s = MultiJet<double>::variable(1, 1, 0, {0.0});
  line.push_back(MultiJet<double>(0.4) + s * 0.3);
  line.push_back(MultiJet<double>(-1.1) + s * -0.7);
  line.push_back(MultiJet<double>(0.8) + s * 1.9);
  const auto img = g.apply(line);
  const double a0 = line[2][1] - line[1].value() * line[0][1];
  const double a1 = img[2][1] - img[1].value() * img[0][1];
  CHECK(a1 == doctest::Approx(det * a0));
}

namespace {

// Smallest singular value of the chart Jacobian of g(N) at the basepoint.
double chart_conditioning(const GraphJet<double>& jet, const GroupElement<double>& g) {
  const auto img = g.apply(jet.ambient());
  Eigen::MatrixXd J(jet.nvars(), jet.nvars());
  for (int i = 0; i < jet.nvars(); ++i)
    for (int v = 0; v < jet.nvars(); ++v) {
      std::vector<int> e(static_cast<std::size_t>(jet.nvars()), 0);
      e[static_cast<std::size_t>(v)] = 1;
      J(i, v) = img[static_cast<std::size_t>(jet.indep[static_cast<std::size_t>(i)])].coeff(e);
    }
  return Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues().minCoeff();
}

double max_coeff(const GraphJet<double>& j) {
  double m = 0;
  for (const auto& u : j.u)
    for (std::size_t k = 0; k < u.size(); ++k) m = std::max(m, std::fabs(u[k]));
  return m;
}

}  // namespace

TEST_CASE("property: pushforward is a group action") {
  std::mt19937_64 rng(99);
  int tested = 0;
  for (Geometry geo : {Geometry::Curve, Geometry::Hypersurface, Geometry::Surface}) {
    const auto info = geometry_info(geo, 2);
    for (int trial = 0; trial < 40; ++trial) {
      const auto jet = random_graph_jet(4, info.indep, info.dep, 4, rng);
      const auto g = random_group_element(info.space, Flavor::ACSp, rng());
      const auto h = random_group_element(info.space, Flavor::ACSp, rng());
      // Generic position: both intermediate charts well conditioned.
      if (chart_conditioning(jet, h) < 0.3 || chart_conditioning(pushforward(jet, h), g) < 0.3) continue;
      ++tested;
      const auto lhs = pushforward(jet, g.compose(h));
      const auto rhs = pushforward(pushforward(jet, h), g);
      const double scale = max_coeff(lhs);
      for (std::size_t j = 0; j < lhs.u.size(); ++j)
        for (std::size_t k = 0; k < lhs.u[j].size(); ++k) CHECK(std::fabs(lhs.u[j][k] - rhs.u[j][k]) <= 1e-9 * scale);
    }
  }
  CHECK(tested >= 30);
  const auto info = geometry_info(Geometry::Function, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_function_jet(4, 4, rng);
    const auto g = random_group_element(info.space, Flavor::ACSp, rng());
    const auto h = random_group_element(info.space, Flavor::ACSp, rng());
    const auto lhs = pushforward(f, g.compose(h));
    const auto rhs = pushforward(pushforward(f, h), g);
    double scale = 0;
    for (std::size_t k = 0; k < lhs.u.size(); ++k) scale = std::max(scale, std::fabs(lhs.u[k]));
    for (std::size_t k = 0; k < lhs.u.size(); ++k) CHECK(std::fabs(lhs.u[k] - rhs.u[k]) <= 1e-9 * scale);
  }
}

TEST_CASE("pushforward is exactly a group action in rational mode") {
  std::mt19937_64 rng(5);
  const auto info = geometry_info(Geometry::Surface, 2);
  for (int trial = 0; trial < 3; ++trial) {
    GraphJet<Rational> jet;
    jet.ambient_dim = 4;
    jet.indep = info.indep;
    jet.dep = info.dep;
    jet.base = {Rational(1, 2), Rational(-2, 3)};
    auto layout = JetLayout::get(2, 3);
    for (int d = 0; d < 2; ++d) {
      std::vector<Rational> c;
      for (std::size_t k = 0; k < layout->size(); ++k) c.push_back(Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3)));
      jet.u.push_back(MultiJet<Rational>(layout, c, std::make_shared<const std::vector<Rational>>(jet.base)));
    }
    const auto g = random_rational_element(info.space, Flavor::ACSp, rng());
    const auto h = random_rational_element(info.space, Flavor::ACSp, rng());
    try {
      const auto lhs = pushforward(jet, g.compose(h));
      const auto rhs = pushforward(pushforward(jet, h), g);
      for (std::size_t j = 0; j < 2; ++j) CHECK(lhs.u[j].coeffs() == rhs.u[j].coeffs());
    } catch (const DegenerateError&) {
    }
  }
}

TEST_CASE("orbit dimensions") {
  const auto curves2 = geometry_info(Geometry::Curve, 2);
  const int expect[] = {4, 7, 9, 10};
  for (int k = 0; k <= 3; ++k) CHECK(orbit_dimension(curves2, Flavor::Sp, k, 1) == expect[k]);
  for (int n : {2, 3})
    for (int k = 0; k <= 2 * n; ++k) {
      const int table = std::min(2 * (k + 1) * n - k * (k + 1) / 2, n * (2 * n + 1));
      CHECK(orbit_dimension(geometry_info(Geometry::Curve, n), Flavor::Sp, k, 7) == table);
    }
  CHECK(orbit_dimension(geometry_info(Geometry::Hypersurface, 2), Flavor::Sp, 1, 3) == 7);
  CHECK(orbit_dimension(geometry_info(Geometry::Function, 1), Flavor::Sp, 1, 3) == 3);
}
