#include "doctest.h"

#include <random>

#include "sympinv/inv_surfaces.hpp"
#include "sympinv/rank.hpp"
#include "sympinv/sample.hpp"

using namespace sympinv;

namespace {

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b))); }

double chart_conditioning(const GraphJet<double>& jet, const GroupElement<double>& g) {
  const auto img = g.apply(jet.ambient());
  Eigen::MatrixXd J(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int v = 0; v < 2; ++v) J(i, v) = img[static_cast<std::size_t>(i)].coeff({v == 0 ? 1 : 0, v == 1 ? 1 : 0});
  return Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues().minCoeff();
}

template <class S>
std::vector<S> frame_identities(const SymplecticSpace& V, const SurfaceFrame<S>& f) {
  return {f.form(f.Q1, f.v0par, f.v0par).value(),         omega4(V, f.v0par, f.wpar).value() - S(1),
          f.form(f.Q1, f.wpar, f.wpar).value(),           f.form(f.Q1, f.v0par, f.wpar).value() - S(1),
          f.eval(f.sigma1, f.wperp).value(),              omega4(V, f.v0perp, f.wperp).value() - S(1),
          f.eval(f.sigma2, f.v0perp).value(),             f.eval(f.sigma2, f.wperp).value() - S(1)};
}

std::vector<DualD> values(const InvariantSet<DualD>& s) {
  std::vector<DualD> v;
  for (const auto& j : s.values) v.push_back(j.value());
  return v;
}

}  // namespace

TEST_CASE("split of the position vector for the plane x = t, y = s") {
  const auto info = geometry_info(Geometry::Surface, 2);
  const auto g = graph_jet<Rational>(info, std::vector<std::string>{"t", "s"}, {Rational(1), Rational(1)}, 2);
  const Rational o(1), z(0);
  const Vec4<Rational> et{MultiJet<Rational>(o), MultiJet<Rational>(z), MultiJet<Rational>(o), MultiJet<Rational>(z)};
  const Vec4<Rational> es{MultiJet<Rational>(z), MultiJet<Rational>(o), MultiJet<Rational>(z), MultiJet<Rational>(o)};
  Vec4<Rational> v0;
  const auto amb = g.ambient();
  for (std::size_t i = 0; i < 4; ++i) v0[i] = amb[i];
  const auto [par, perp] = split_tangent(info.space, et, es, v0);
  // v0 = (1, 1, 1, 1) = D_t + D_s is tangent.
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(par[i].value() == Rational(1));
    CHECK(perp[i].value() == Rational(0));
  }
  // A vector with a normal part: d_x = (1/2)(D_t + ... ) split exactly.
  const Vec4<Rational> ex{MultiJet<Rational>(z), MultiJet<Rational>(z), MultiJet<Rational>(o), MultiJet<Rational>(z)};
  const auto [p2, q2] = split_tangent(info.space, et, es, ex);
  CHECK(p2[0].value() == Rational(1, 2));
  CHECK(p2[2].value() == Rational(1, 2));
  CHECK(q2[0].value() == Rational(-1, 2));
  CHECK(q2[2].value() == Rational(1, 2));
  CHECK(is_zero(omega4(info.space, et, q2).value()));
  CHECK(is_zero(omega4(info.space, es, q2).value()));
}

TEST_CASE("property: split is a projection and the eight frame identities hold") {
  std::mt19937_64 rng(41);
  const auto info = geometry_info(Geometry::Surface, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph_jet(4, info.indep, info.dep, 2, rng);
    const auto f = surface_frame(info.space, g);
    double scale = 1;
    for (const auto& v : {f.v0par, f.v0perp, f.wpar, f.wperp})
      for (const auto& x : v) scale = std::max(scale, std::fabs(x.value()));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(f.v0par[i].value() + f.v0perp[i].value() - f.v0[i].value()) <= 1e-12 * scale);
    CHECK(std::fabs(omega4(info.space, f.et, f.v0perp).value()) <= 1e-10 * scale);
    CHECK(std::fabs(omega4(info.space, f.es, f.v0perp).value()) <= 1e-10 * scale);
    const auto again = split_tangent(info.space, f.et, f.es, f.v0par);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(again.second[i].value()) <= 1e-10 * scale);
    for (double r : frame_identities(info.space, f)) CHECK(std::fabs(r) <= 1e-10 * scale * scale);
    // Q1 is Lorentzian (v0par is a null vector of a nondegenerate form).
    const double det = f.Q1[0][0].value() * f.Q1[1][1].value() - f.Q1[0][1].value() * f.Q1[1][0].value();
    CHECK(det < 0);
    // sigma1, sigma2 span Ann(T Sigma).
    const double s = f.sigma1[0].value() * f.sigma2[1].value() - f.sigma1[1].value() * f.sigma2[0].value();
    CHECK(std::fabs(s) > 1e-12);
  }
}

TEST_CASE("frame identities hold exactly in rational arithmetic") {
  const auto info = geometry_info(Geometry::Surface, 2);
  const auto g = graph_jet<Rational>(info, std::vector<std::string>{"t^2 + 3*s - t*s/2 + 1", "2*t - s^2 + t^2/3 + 5*t*s"},
                                     {Rational(1, 3), Rational(-1, 2)}, 2);
  for (const auto& r : frame_identities(info.space, surface_frame(info.space, g))) CHECK(r == Rational(0));
}

TEST_CASE("degenerate jets raise their error codes") {
  const auto info = geometry_info(Geometry::Surface, 2);
  // omega(D_t, D_s) = 1 + x_t y_s - x_s y_t = 0.
  const auto lag = graph_jet<double>(info, std::vector<std::string>{"t + s^2", "-s + t^2"}, {0.0, 0.0}, 3);
  try {
    surface_invariants(info.space, lag);
    FAIL("expected LagrangianTangent");
  } catch (const DegenerateError& e) {
    CHECK(e.code() == ErrorCode::LagrangianTangent);
  }
  // A flat surface through the origin direction: d2f = d2g = 0.
  const auto flat = graph_jet<double>(info, std::vector<std::string>{"2*t + s + 1", "t - s + 2"}, {0.5, 0.7}, 2);
  try {
    surface_invariants(info.space, flat);
    FAIL("expected DegenerateQ1");
  } catch (const DegenerateError& e) {
    CHECK(e.code() == ErrorCode::DegenerateQ1);
  }
}

TEST_CASE("property: invariance under Sp pushforward") {
  std::mt19937_64 rng(42);
  const auto info = geometry_info(Geometry::Surface, 2);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 50; ++trial) {
    const auto g = random_graph_jet(4, info.indep, info.dep, 3, rng);
    const auto h = random_group_element(info.space, Flavor::Sp, rng());
    if (chart_conditioning(g, h) < 0.3) continue;
    ++tested;
    const auto a = surface_invariants(info.space, g);
    const auto b = surface_invariants(info.space, pushforward(g, h));
    for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(rel_diff(a.values[i].value(), b.values[i].value()) < 1e-8);
    for (const auto& d : {0, 1}) {
      const double da = a.derivations[static_cast<std::size_t>(d)].apply(a.values[1]).value();
      const double db = b.derivations[static_cast<std::size_t>(d)].apply(b.values[1]).value();
      CHECK(rel_diff(da, db) < 1e-8);
    }
  }
  CHECK(tested >= 40);
}

TEST_CASE("counting: h2 = 4 and the eight third-order invariants are independent") {
  std::mt19937_64 rng(43);
  const auto info = geometry_info(Geometry::Surface, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph_jet(4, info.indep, info.dep, 3, rng);
    const int r2 = jacobian_rank([&](const GraphJet<DualD>& d) { return values(surface_invariants(info.space, d)); }, g,
                                 graph_coordinates_of_degree(g, 2, 2));
    CHECK(r2 == 4);
    const auto seeds = graph_coordinates_of_degree(g, 3, 3);
    REQUIRE(seeds.size() == 8);
    const int r3 = jacobian_rank(
        [&](const GraphJet<DualD>& d) {
          const auto inv = surface_invariants(info.space, d);
          std::vector<DualD> out;
          for (const auto& nab : inv.derivations)
            for (const auto& I : inv.values) out.push_back(nab.apply(I).value());
          return out;
        },
        g, seeds);
    CHECK(r3 == 8);
  }
}
