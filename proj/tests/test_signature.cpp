#include "doctest.h"

#include <cmath>
#include <random>

#include "sympinv/inv_curves.hpp"
#include "sympinv/signature.hpp"

using namespace sympinv;

namespace {

SamplingOptions window(double lo, double hi, int samples, int depth = 1) {
  SamplingOptions o;
  o.window_lo = lo;
  o.window_hi = hi;
  o.samples = samples;
  o.depth = depth;
  return o;
}

Submanifold plane_curve(const std::string& x, const std::string& y, const std::string& param = "t") {
  return make_submanifold(Geometry::Curve, 1, {{"x", x}, {"y", y}}, {param});
}

// Residual of (nabla I2)^2 = c I2^3 relative to the larger side.
double curve_relation(const std::vector<double>& p, double c) {
  const double lhs = p[1] * p[1], rhs = c * p[0] * p[0] * p[0];
  return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), std::fabs(rhs));
}

}  // namespace

TEST_CASE("submanifold definitions: graph form, parametric form and validation") {
  const auto graph = make_submanifold(Geometry::Curve, 1, {{"y", "x^2"}});
  CHECK(graph.parameters == std::vector<std::string>{"x"});
  CHECK(graph.coordinates.size() == 2);

  const auto fn = make_submanifold(Geometry::Function, 1, {{"u", "x^2 + y^3"}});
  CHECK(fn.parameters == std::vector<std::string>{"x", "y"});

  CHECK_THROWS_AS(make_submanifold(Geometry::Curve, 1, {{"x", "t"}}, {"t"}), Error);             // y missing
  CHECK_THROWS_AS(make_submanifold(Geometry::Curve, 1, {{"x", "t"}, {"w", "t"}}, {"t"}), Error);  // not a coordinate
  CHECK_THROWS_AS(make_submanifold(Geometry::Curve, 1, {{"x", "t"}, {"y", "s"}}, {"t"}), Error);  // unbound s
  CHECK_THROWS_AS(make_submanifold(Geometry::Surface, 2, {{"t", "t"}, {"s", "t^2"}, {"x", "t"}, {"y", "t"}}, {"t"}),
                  Error);  // surfaces need two parameters
  CHECK_THROWS_AS(make_submanifold(Geometry::Function, 1, {{"v", "x"}}), Error);
}

TEST_CASE("sampling: evenly spaced for one parameter, seeded uniform otherwise") {
  const auto p = sample_parameters(1, window(1, 2, 5));
  REQUIRE(p.size() == 5);
  CHECK(p.front()[0] == 1.0);
  CHECK(p.back()[0] == 2.0);
  CHECK(p[2][0] == doctest::Approx(1.5));
  auto o = window(0.5, 1.5, 10);
  o.seed = 9;
  const auto a = sample_parameters(2, o), b = sample_parameters(2, o);
  CHECK(a == b);
  for (const auto& q : a)
    for (double v : q) CHECK((v >= 0.5 && v <= 1.5));
  o.seed = 10;
  CHECK(sample_parameters(2, o) != a);
}

TEST_CASE("parabola: I2 = 2/t^6 at the samples and the cloud lies on (nabla I2)^2 = 18 I2^3") {
  const auto m = plane_curve("t", "t^2");
  const auto table = evaluate_samples(m, Flavor::Sp, window(1, 2, 4));
  REQUIRE(table.generators == std::vector<std::string>{"I2", "nabla(I2)"});
  for (const auto& r : table.rows) {
    REQUIRE_FALSE(r.degenerate);
    const double t = r.parameters[0];
    CHECK(std::fabs(r.values[0] - 2 / std::pow(t, 6)) <= 1e-12 * r.values[0]);
  }
  const auto cloud = signature_of(m, Flavor::Sp, SamplingOptions{});
  CHECK(cloud.points.size() == 64);
  CHECK(cloud.degenerate_count == 0);
  for (const auto& p : cloud.points) CHECK(curve_relation(p, 18) <= 1e-8);
}

TEST_CASE("cubic: the cloud lies on (nabla I2)^2 = 64/3 I2^3") {
  // I2 = (3/4) x^-8 and nabla I2 = -3 x^-12 (oracle by hand), so the ratio is 9 / (27/64).
  const auto m = plane_curve("t", "t^3");
  const auto cloud = signature_of(m, Flavor::Sp, SamplingOptions{});
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const double x = 0.5 + cloud.indices[i] / 63.0;
    CHECK(std::fabs(cloud.points[i][0] - 0.75 * std::pow(x, -8)) <= 1e-10 * cloud.points[i][0]);
    CHECK(curve_relation(cloud.points[i], 64.0 / 3) <= 1e-8);
  }
}

TEST_CASE("equivalence: Sp images are equivalent, parabola and cubic are distinct, a cloud is equivalent to itself") {
  const auto parabola = signature_of(plane_curve("t", "t^2"), Flavor::Sp, SamplingOptions{});
  const auto self = equivalent(parabola, parabola, 1e-6);
  CHECK(self.verdict == Verdict::Equivalent);
  CHECK(self.distance == 0.0);

  // Shear (x, y) -> (x + 0.3 y, y) and a random Sp element applied to the parametrization.
  const auto shear = signature_of(plane_curve("t + 0.3*t^2", "t^2"), Flavor::Sp, SamplingOptions{});
  const auto s = equivalent(parabola, shear, 1e-6);
  CHECK(s.verdict == Verdict::Equivalent);
  CHECK(s.distance <= 1e-9);

  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 5; ++trial) {
    const auto g = random_group_element(SymplecticSpace::darboux(1), Flavor::Sp, rng());
    const auto& L = g.linear();
    // The image must stay a graph over x on the window: d/dt (L00 t + L01 t^2) != 0.
    const double d0 = L(0, 0) + 2 * L(0, 1) * 0.5, d1 = L(0, 0) + 2 * L(0, 1) * 1.5;
    if (d0 * d1 <= 0 || std::min(std::fabs(d0), std::fabs(d1)) < 0.3) continue;
    ++tested;
    const std::string x = format_double(L(0, 0)) + "*t + " + format_double(L(0, 1)) + "*t^2";
    const std::string y = format_double(L(1, 0)) + "*t + " + format_double(L(1, 1)) + "*t^2";
    const auto image = signature_of(plane_curve(x, y), Flavor::Sp, SamplingOptions{});
    CHECK(equivalent(parabola, image, 1e-6).verdict == Verdict::Equivalent);
  }
  CHECK(tested == 5);

  const auto cubic = signature_of(plane_curve("t", "t^3"), Flavor::Sp, SamplingOptions{});
  const auto c = equivalent(parabola, cubic, 1e-6);
  CHECK(c.verdict == Verdict::Distinct);
  CHECK(c.distance > 1e-3);
}

TEST_CASE("property: clouds are reparametrization-invariant") {
  const auto a = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(1, 2, 64));
  // Affine reparametrization t = 2s - 1 lands on the same points.
  const auto b = signature_of(plane_curve("2*s - 1", "(2*s - 1)^2", "s"), Flavor::Sp, window(1, 1.5, 64));
  CHECK(equivalent(a, b, 1e-7).distance <= 1e-7);
  // t = s^3 samples different points of the same curve; the Hermite error is O(h^4).
  const auto fine = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(1, 2, 256));
  const auto c = signature_of(plane_curve("s^3", "s^6", "s"), Flavor::Sp, window(1, std::cbrt(2.0), 256));
  const auto cmp = equivalent(fine, c, 1e-7);
  CHECK(cmp.distance <= 1e-7);
  CHECK(cmp.verdict == Verdict::Equivalent);
  // Orientation reversal t = 3 - s.
  const auto d = signature_of(plane_curve("3 - s", "(3 - s)^2", "s"), Flavor::Sp, window(1, 2, 64));
  CHECK(equivalent(a, d, 1e-7).distance <= 1e-7);
}

TEST_CASE("sampling caveat: disjoint windows of the same curve are not reported equivalent") {
  const auto a = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(0.5, 1.0, 32));
  const auto b = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(1.5, 2.0, 32));
  CHECK(equivalent(a, b, 1e-6).verdict != Verdict::Equivalent);
}

TEST_CASE("degenerate samples are counted; all-degenerate and incomparable clouds raise") {
  // Lines through the origin have x y' - y = 0.
  const auto line = plane_curve("t", "2*t");
  try {
    signature_of(line, Flavor::Sp, window(0.5, 1.5, 8));
    FAIL("expected AllSamplesDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllSamplesDegenerate);
  }
  // y = x^2 + 1 has x y' - y = x^2 - 1, which vanishes at the sample x = 1.
  const auto m = plane_curve("t", "t^2 + 1");
  const auto table = evaluate_samples(m, Flavor::Sp, window(0, 2, 5));
  CHECK(table.degenerate_count() == 1);
  CHECK(table.rows[2].degenerate);
  CHECK(table.rows[2].values.empty());
  CHECK_FALSE(table.rows[2].reason.empty());
  const auto partial = signature_of(m, Flavor::Sp, window(0, 2, 5));
  CHECK(partial.sample_count == 5);
  CHECK(partial.degenerate_count == 1);
  CHECK(partial.indices == std::vector<int>{0, 1, 3, 4});

  const auto a = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(1, 2, 8));
  const auto b = signature_of(plane_curve("t", "t^2"), Flavor::Sp, window(1, 2, 8, 2));
  try {
    equivalent(a, b, 1e-6);
    FAIL("expected IncomparableClouds");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncomparableClouds);
  }
  const auto c = signature_of(plane_curve("t", "t^2"), Flavor::CSp, window(1, 2, 8));
  CHECK_THROWS_AS(equivalent(a, c, 1e-6), Error);
}

TEST_CASE("json: stable layout, 17 digits, round trip") {
  const auto cloud = signature_of(plane_curve("t", "t^3"), Flavor::Sp, window(0.7, 1.3, 5));
  const auto text = to_json(cloud);
  CHECK(text.find("\"geometry\"") < text.find("\"flavor\""));
  CHECK(text.find("\"flavor\"") < text.find("\"generators\""));
  CHECK(text.find("\"depth\"") < text.find("\"window\""));
  CHECK(text.find("\"window\"") < text.find("\"points\""));
  const auto back = cloud_from_json(text);
  CHECK(back.points == cloud.points);
  CHECK(back.slopes == cloud.slopes);
  CHECK(back.generators == cloud.generators);
  CHECK(back.indices == cloud.indices);
  CHECK(to_json(back) == text);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK_THROWS_AS(cloud_from_json("{\"geometry\": 1}"), Error);
}

TEST_CASE("clouds of other geometries: surfaces, functions and contact curves") {
  // Function u = x^2 y + y^3 under Sp and its image under the shear (x, y) -> (x + y, y).
  auto o = window(0.5, 1.5, 12);
  o.seed = 4;
  const auto f = signature_of(make_submanifold(Geometry::Function, 1, {{"u", "x^2*y + y^3 + x"}}), Flavor::Sp, o);
  CHECK(f.generators.size() == 15);
  CHECK(f.points.size() == 12);
  CHECK(equivalent(f, f, 1e-6).verdict == Verdict::Equivalent);

  const auto cc = signature_of(make_submanifold(Geometry::ContactCurve, 1, {{"y", "x^2"}, {"z", "x^3"}}),
                               Flavor::ContactCSp, window(0.8, 1.6, 16));
  CHECK(cc.degenerate_count == 0);
  CHECK(cc.generators.front() == "I1");

  o.samples = 6;
  const auto s = evaluate_samples(
      make_submanifold(Geometry::Surface, 2, {{"x", "t^2 + s"}, {"y", "s^2 - t + t*s"}}), Flavor::Sp, o);
  CHECK(s.generators.size() == 12);
  CHECK(s.degenerate_count() < 6);
}

TEST_CASE("threads: evaluation is deterministic and independent of the thread count") {
  const auto m = plane_curve("t + t^3/5", "t^2");
  auto o = window(0.6, 1.4, 40, 2);
  const auto one = signature_of(m, Flavor::Sp, o);
  o.threads = 3;
  const auto three = signature_of(m, Flavor::Sp, o);
  CHECK(to_json(one) == to_json(three));
}
