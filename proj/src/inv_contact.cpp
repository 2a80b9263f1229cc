#include "sympinv/inv_contact.hpp"

#include <map>
#include <string>

#include "sympinv/expr.hpp"

namespace sympinv {

namespace {

template <class S>
MultiJet<S> one() {
  return MultiJet<S>(S(1));
}

template <class S>
Residual<S> field_relation(const std::vector<std::pair<MultiJet<S>, Derivation<S>>>& terms) {
  std::vector<std::vector<MultiJet<S>>> comps(terms.front().second.coeff.size());
  for (const auto& [c, X] : terms)
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i].push_back(c * X.coeff[i]);
  return worst_component(comps);
}

template <class S>
void check_shape(const GraphJet<S>& g, int indep, int k, const char* what) {
  if (g.ambient_dim != 3 || g.nvars() != indep) throw Error(ErrorCode::InvalidArgument, what);
  if (g.order() < k) throw Error(ErrorCode::OrderExhausted, what);
}

}  // namespace

template <class S>
InvariantSet<S> contact_curve_invariants_g(const GraphJet<S>& g) {
  check_shape(g, 1, 2, "contact curve invariants need a 2-jet of y(x), z(x)");
  const auto x = g.coordinates(g.order())[0];
  const auto &y = g.u[0], &z = g.u[1];
  const auto y1 = total_derivative(y, 0);
  const auto y2 = total_derivative(y1, 0);
  const auto delta = x * y1 - y;
  require_nonzero(delta.value(), ErrorCode::DegenerateJet, "x y1 - y vanishes");
  const Derivation<S> nabla{{one<S>() / delta}};
  const auto I0 = S(2) * z - x * y;
  const auto I1 = nabla.apply(I0);
  InvariantSet<S> out;
  out.add("I0", I0);
  out.add("I1", I1);
  out.add("I2a", y2 / (delta * delta * delta));
  out.add("I2b", nabla.apply(I1));
  out.add_derivation("nabla", nabla);
  return out;
}

template <class S>
InvariantSet<S> contact_curve_invariants(const GraphJet<S>& g) {
  const auto G = contact_curve_invariants_g(g);
  const auto& I0 = G["I0"];
  require_nonzero(I0.value(), ErrorCode::OnZeroLevelSet, "I0 = 2z - xy vanishes");
  const auto& nabla = G.derivation("nabla");
  const auto I1 = (G["I1"] + one<S>()) * S(S(1) / S(2));
  InvariantSet<S> out;
  out.add("I1", I1);
  out.add("I2a'", I0 * I0 * G["I2a"]);
  out.add("I2b'", I0 * nabla.apply(I1));
  out.add_derivation("nabla'", nabla * I0);
  return out;
}

template <class S>
InvariantSet<S> contact_surface_invariants_g(const GraphJet<S>& g) {
  check_shape(g, 2, 2, "contact surface invariants need a 2-jet of z(x, y)");
  const auto xs = g.coordinates(g.order());
  const auto &x = xs[0], &y = xs[1], &z = g.u[0];
  const auto zx = total_derivative(z, 0), zy = total_derivative(z, 1);
  const auto zxx = total_derivative(zx, 0), zxy = total_derivative(zx, 1), zyy = total_derivative(zy, 1);
  const auto w = zy - x;
  InvariantSet<S> out;
  out.add("I0", S(2) * z - x * y);
  out.add("I1", x * zx + y * zy - x * y);
  out.add("I2a", x * x * zxx + S(2) * x * y * zxy + y * y * zyy - x * y);
  out.add("I2b", x * w * zxx - y * zx * zyy + (y * w - x * zx) * zxy + x * zx);
  out.add("I2c", zx * zx * zyy - S(2) * zx * w * zxy + w * w * zxx + zx * w);
  out.add_derivation("nabla1", Derivation<S>{{x, y}});
  out.add_derivation("nabla2", Derivation<S>{{x - S(2) * zy, S(2) * zx - y}});
  return out;
}

template <class S>
InvariantSet<S> contact_surface_invariants(const GraphJet<S>& g) {
  const auto G = contact_surface_invariants_g(g);
  const auto& I0 = G["I0"];
  require_nonzero(I0.value(), ErrorCode::OnZeroLevelSet, "I0 = 2z - xy vanishes");
  const auto inv0 = one<S>() / I0;
  InvariantSet<S> out;
  out.add("I1'", G["I1"] * inv0);
  out.add("I2c'", G["I2c"] * inv0);
  out.add("I2a'", G["I2a"] * inv0);
  out.add("I2b'", G["I2b"] * inv0);
  out.add_derivation("nabla1", G.derivation("nabla1"));
  out.add_derivation("nabla2", G.derivation("nabla2"));
  return out;
}

template <class S>
std::vector<Residual<S>> contact_surface_reductions(const GraphJet<S>& g) {
  if (g.order() < 3) throw Error(ErrorCode::OrderExhausted, "reductions need a 3-jet");
  const auto G = contact_surface_invariants_g(g);
  const auto H = contact_surface_invariants(g);
  const auto& n1 = G.derivation("nabla1");
  const auto& n2 = G.derivation("nabla2");
  const auto &I1 = G["I1"], &I2a = G["I2a"];
  const S half = S(1) / S(2);
  const auto& J = H["I1'"];
  const auto n1J = n1.apply(J), n2J = n2.apply(J);
  return {residual_of(std::vector<MultiJet<S>>{I1, -(n1.apply(G["I0"]) * half)}),
          residual_of(std::vector<MultiJet<S>>{I2a, -n1.apply(I1), I1}),
          residual_of(std::vector<MultiJet<S>>{G["I2b"], n2.apply(I1) * half, I2a * half, -(I1 * half)}),
          residual_of(std::vector<MultiJet<S>>{H["I2a'"], -n1J, -(S(2) * J * J), J}),
          residual_of(std::vector<MultiJet<S>>{H["I2b'"], n1J * half, n2J * half, J * J, -J})};
}

template <class S>
std::vector<Residual<S>> contact_surface_syzygies(const GraphJet<S>& g) {
  if (g.order() < 4) throw Error(ErrorCode::OrderExhausted, "contact surface syzygies need a 4-jet");
  const auto H = contact_surface_invariants(g);
  const auto& n1 = H.derivation("nabla1");
  const auto& n2 = H.derivation("nabla2");
  const auto &J = H["I1'"], &C = H["I2c'"];
  const auto a = n1.apply(J), b = n2.apply(J);
  std::vector<Residual<S>> out;
  // J times the commutator relation.
  out.push_back(field_relation<S>({{J, commutator(n1, n2)}, {b, n1}, {-(a + S(2) * J * (J - one<S>())), n2}}));
  // J times the second relation, expanded termwise.
  const auto Jm = J - one<S>();
  out.push_back(residual_of(std::vector<MultiJet<S>>{
      J * n1.apply(a), S(2) * J * n1.apply(b), J * n2.apply(b), -(S(4) * J * n1.apply(C)),
      -(S(3) * a * a), -(S(6) * a * b), S(12) * a * C, -(S(3) * b * b),
      -(S(6) * J * Jm * a), -(S(8) * J * Jm * b), S(16) * J * Jm * C,
      -(S(4) * J * J * Jm * (S(2) * J - one<S>()))}));
  return out;
}

namespace {

const std::vector<std::string>& function_slots() {
  static const std::vector<std::string> names{"x",   "y",   "z",   "u1",  "u2",  "u3",  "u11",
                                              "u12", "u13", "u22", "u23", "u33"};
  return names;
}

// The second-order table, in the jet coordinates u_i = du/dx_i, u_ij.
const std::vector<Expr>& second_order_table() {
  static const std::vector<Expr> table = [] {
    const std::vector<std::string> src{
        "y^2*u22 + y*(4*z*u23 + 2*x*u12 + u2) + 4*z^2*u33 + z*(4*x*u13 + 4*u3) + x*(x*u11 + u1)",
        "(x*y - 2*z)*(y*u23 + 2*z*u33 + x*u13 + 2*u3)",
        "-(x*y - 2*z)*(x^2*(u1*u13 - u3*u11) + x*(u1*(y*u23 + 2*z*u33 + u3 + u12) - y*u3*u12 - 2*z*u3*u13 - u2*u11)"
        " + u1*(y*u22 + 2*z*u23) - u2*(y*u12 + 2*z*u13))",
        "(x*y - 2*z)*(-2*u3 + (x*y - 2*z)*u33)",
        "-(x*y - 2*z)*(x^2*y*(u1*u33 - u3*u13) + x*(y*(u1*u23 - u3^2 - u2*u13) + u1*(-2*z*u33 - u3) + 2*z*u3*u13)"
        " - y*u2*u3 - 2*z*(u1*u23 - u2*u13))",
        "x^4*y^2*u1^2*u33 - 2*x^4*y^2*u1*u3*u13 + x^4*y^2*u3^2*u11 + 2*x^3*y^2*u1^2*u23"
        " - x^3*y^2*u1*u3^2 - 2*x^3*y^2*u1*u3*u12 - 2*x^3*y^2*u1*u2*u13 + 2*x^3*y^2*u2*u3*u11"
        " - 4*x^3*y*z*u1^2*u33 + 8*x^3*y*z*u1*u3*u13 - 4*x^3*y*z*u3^2*u11 + x^2*y^2*u1^2*u22"
        " - x^2*y^2*u1*u2*u3 - 2*x^2*y^2*u1*u2*u12 + x^2*y^2*u2^2*u11 - 8*x^2*y*z*u1^2*u23"
        " + 4*x^2*y*z*u1*u3^2 + 8*x^2*y*z*u1*u3*u12 + 8*x^2*y*z*u1*u2*u13 - 8*x^2*y*z*u2*u3*u11"
        " + 4*x^2*z^2*u1^2*u33 - 8*x^2*z^2*u1*u3*u13 + 4*x^2*z^2*u3^2*u11 - 4*x*y*z*u1^2*u22"
        " + 4*x*y*z*u1*u2*u3 + 8*x*y*z*u1*u2*u12 - 4*x*y*z*u2^2*u11 + 8*x*z^2*u1^2*u23"
        " - 4*x*z^2*u1*u3^2 - 8*x*z^2*u1*u3*u12 - 8*x*z^2*u1*u2*u13 + 8*x*z^2*u2*u3*u11"
        " + 4*z^2*u1^2*u22 - 4*z^2*u1*u2*u3 - 8*z^2*u1*u2*u12 + 4*z^2*u2^2*u11"};
    std::vector<Expr> out;
    for (const auto& s : src) out.push_back(parse_expr(s, function_slots()));
    return out;
  }();
  return table;
}

}  // namespace

template <class S>
InvariantSet<S> contact_function_invariants(const FunctionJet<S>& f) {
  if (f.nvars() != 3) throw Error(ErrorCode::InvalidArgument, "contact functions live on R^3(x, y, z)");
  if (f.order() < 2) throw Error(ErrorCode::OrderExhausted, "contact function invariants need a 2-jet");
  const auto u = f.u.with_base(std::make_shared<const std::vector<S>>(f.base));
  const auto X = f.coordinates(f.order());
  const auto &x = X[0], &y = X[1], &z = X[2];
  const auto c = x * y - S(2) * z;
  require_nonzero(c.value(), ErrorCode::DegenerateJet, "xy - 2z vanishes");
  std::map<std::string, MultiJet<S>> b{{"x", x}, {"y", y}, {"z", z}};
  std::vector<MultiJet<S>> d1;
  for (int i = 0; i < 3; ++i) {
    d1.push_back(total_derivative(u, i));
    b["u" + std::to_string(i + 1)] = d1.back();
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) b["u" + std::to_string(i + 1) + std::to_string(j + 1)] = total_derivative(d1[static_cast<std::size_t>(i)], j);
  const auto &u1 = d1[0], &u2 = d1[1], &u3 = d1[2];

  InvariantSet<S> out;
  out.add("I0", u);
  out.add("I1a", c * u3);
  out.add("I1b", x * u1 + y * (u2 + x * u3));
  const char* names[] = {"I2a", "I2b", "I2c", "I2d", "I2e", "I2f"};
  for (std::size_t k = 0; k < 6; ++k) out.add(names[k], eval_on_jets(second_order_table()[k], b));
  const MultiJet<S> zero(S(0));
  out.add_derivation("nabla1", Derivation<S>{{x, y, S(2) * z}});
  out.add_derivation("nabla2", Derivation<S>{{zero, zero, c}});
  out.add_derivation("nabla3", Derivation<S>{{(x * u3 + u2) * c, -(u1 * c), -(x * u1 * c)}});
  return out;
}

template <class S>
std::vector<Residual<S>> contact_syzygy_suite(const FunctionJet<S>& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "contact syzygies need a 3-jet");
  const auto inv = contact_function_invariants(f);
  const auto& n1 = inv.derivation("nabla1");
  const auto& n2 = inv.derivation("nabla2");
  const auto& n3 = inv.derivation("nabla3");
  const auto& I0 = inv["I0"];
  // The relations are written in a = nabla1(I0), b = nabla2(I0) = I1a, so a + b = I1b.
  const auto a = n1.apply(I0);
  const auto& b = inv["I1a"];
  const auto &A2 = inv["I2a"], &B2 = inv["I2b"], &C2 = inv["I2c"], &D2 = inv["I2d"], &E2 = inv["I2e"], &F2 = inv["I2f"];
  const auto s = a + b;
  require_nonzero(s.value(), ErrorCode::DegenerateJet, "I1b vanishes");

  std::vector<Residual<S>> out;
  std::vector<MultiJet<S>> r1;
  for (std::size_t i = 0; i < 3; ++i) r1.push_back(n3.coeff[i] * total_derivative(I0, static_cast<int>(i)));
  out.push_back(residual_of(r1));
  out.push_back(field_relation<S>({{one<S>(), commutator(n1, n2)}}));
  out.push_back(field_relation<S>({{s, commutator(n1, n3)}, {C2, n1}, {C2, n2}, {-(A2 + B2), n3}}));
  out.push_back(field_relation<S>({{s, commutator(n2, n3)},
                                   {-(b * s - E2), n1},
                                   {a * s + E2, n2},
                                   {-(B2 + D2 - S(2) * s), n3}}));
  out.push_back(residual_of(std::vector<MultiJet<S>>{s * n3.apply(B2), -(s * n1.apply(E2)), -(C2 * B2), E2 * B2, A2 * E2,
                                                     -(C2 * D2)}));
  out.push_back(residual_of(std::vector<MultiJet<S>>{s * n3.apply(C2), -(s * n1.apply(F2)), -(S(3) * C2 * C2),
                                                     -(a * a * C2), -(a * b * C2), -(S(3) * E2 * C2), S(3) * F2 * A2,
                                                     S(3) * F2 * B2}));
  // R7 holds with +4 I2f b, not -4 I2f b.
  const auto b2 = b * b;
  out.push_back(residual_of(std::vector<MultiJet<S>>{
      -(s * n3.apply(E2)), s * n2.apply(F2), -(b2 * b2), -(S(4) * a * b2 * b), -(S(5) * a * a * b2),
      -(S(2) * C2 * b2), -(S(2) * a * a * a * b), -(S(2) * C2 * a * b), S(3) * E2 * a * b, S(4) * F2 * b,
      S(3) * E2 * a * a, S(4) * F2 * a, S(3) * E2 * E2, S(3) * C2 * E2, -(S(3) * F2 * B2), -(S(3) * F2 * D2)}));
  return out;
}

#define SYMPINV_INSTANTIATE(S)                                                         \
  template InvariantSet<S> contact_curve_invariants_g(const GraphJet<S>&);             \
  template InvariantSet<S> contact_curve_invariants(const GraphJet<S>&);               \
  template InvariantSet<S> contact_surface_invariants_g(const GraphJet<S>&);           \
  template InvariantSet<S> contact_surface_invariants(const GraphJet<S>&);             \
  template std::vector<Residual<S>> contact_surface_reductions(const GraphJet<S>&);    \
  template std::vector<Residual<S>> contact_surface_syzygies(const GraphJet<S>&);      \
  template InvariantSet<S> contact_function_invariants(const FunctionJet<S>&);         \
  template std::vector<Residual<S>> contact_syzygy_suite(const FunctionJet<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

}  // namespace sympinv
