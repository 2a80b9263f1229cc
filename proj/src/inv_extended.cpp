#include "sympinv/inv_extended.hpp"

#include <map>

#include "sympinv/inv_curves.hpp"
#include "sympinv/inv_functions.hpp"

namespace sympinv {

const std::vector<WeightedInvariant>& declared_weights(const std::string& family) {
  static const std::map<std::string, std::vector<WeightedInvariant>> table{
      {"sp-function",
       {{"I0", 0}, {"I1", 0}, {"I2a", 0}, {"I2b", -2}, {"I2c", -4}, {"nabla1", 0, true}, {"nabla2", -2, true}}},
      {"asp-function", {{"I0", 0}, {"I2'", -4}, {"I2c", -4}, {"nabla1'", -4, true}, {"nabla2", -2, true}}},
      {"sp-curve", {{"I2", -4}, {"nabla", -2, true}}},
      {"asp-curve", {{"I4''", -4}, {"nabla''", -2, true}}},
  };
  auto it = table.find(family);
  if (it == table.end()) throw Error(ErrorCode::InvalidArgument, "unknown weight family '" + family + "'");
  return it->second;
}

namespace {

// Componentwise residual of sum_i c_i X_i = 0.
template <class S>
Residual<S> field_relation(const std::vector<std::pair<MultiJet<S>, Derivation<S>>>& terms) {
  std::vector<std::vector<MultiJet<S>>> comps(terms.front().second.coeff.size());
  for (const auto& [c, X] : terms)
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i].push_back(c * X.coeff[i]);
  return worst_component(comps);
}

template <class S>
MultiJet<S> one() {
  return MultiJet<S>(S(1));
}

template <class S>
void require_order(const GraphJet<S>& g, int k, const char* what) {
  if (g.ambient_dim != 2 || g.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "expected a plane curve y = y(x)");
  if (g.order() < k) throw Error(ErrorCode::OrderExhausted, what);
}

// y1..y4 and A = 3 y2^-2 y4 - 5 y2^-3 y3^2 for a plane curve.
template <class S>
struct AffineCurveData {
  MultiJet<S> y2, A;
};

template <class S>
AffineCurveData<S> affine_curve_data(const GraphJet<S>& g) {
  require_order(g, 4, "affine curve invariants need a 4-jet");
  const auto y1 = total_derivative(g.u[0], 0);
  const auto y2 = total_derivative(y1, 0);
  const auto y3 = total_derivative(y2, 0);
  const auto y4 = total_derivative(y3, 0);
  require_nonzero(y2.value(), ErrorCode::WeightNormalizationSingular, "y2 vanishes: inflection point");
  const auto y2sq = y2 * y2;
  return {y2, S(3) * y4 / y2sq - S(5) * y3 * y3 / (y2sq * y2)};
}

}  // namespace

template <class S>
InvariantSet<S> csp_function_invariants(const FunctionJet<S>& f) {
  const auto sp = function_invariants_n1(f);
  const auto& I2b = sp["I2b"];
  require_nonzero(I2b.value(), ErrorCode::WeightNormalizationSingular, "I2b vanishes");
  InvariantSet<S> out;
  out.add("I0", sp["I0"]);
  out.add("I1", sp["I1"]);
  out.add("I2a", sp["I2a"]);
  out.add("I2b'", sp["I2c"] / (I2b * I2b));
  out.add_derivation("nabla1", sp.derivation("nabla1"));
  out.add_derivation("nabla2'", sp.derivation("nabla2") * (one<S>() / I2b));
  return out;
}

template <class S>
std::vector<Residual<S>> csp_function_syzygies(const FunctionJet<S>& f) {
  if (f.order() < 4) throw Error(ErrorCode::OrderExhausted, "conformal syzygies need a 4-jet");
  const auto inv = csp_function_invariants(f);
  const auto& n1 = inv.derivation("nabla1");
  const auto& n2 = inv.derivation("nabla2'");
  const auto &I0 = inv["I0"], &I1 = inv["I1"], &I2a = inv["I2a"], &J = inv["I2b'"];

  std::vector<Residual<S>> out;
  std::vector<MultiJet<S>> r1;
  for (std::size_t i = 0; i < n2.coeff.size(); ++i) r1.push_back(n2.coeff[i] * total_derivative(I0, static_cast<int>(i)));
  out.push_back(residual_of(r1));
  out.push_back(residual_of(std::vector<MultiJet<S>>{n2.apply(I1), one<S>()}));

  const auto n2I2a = n2.apply(I2a);
  out.push_back(field_relation<S>({{I1, commutator(n1, n2)}, {-one<S>(), n1}, {-(I2a + I1 * n2I2a), n2}}));

  const auto I3a = n1.apply(I2a), I3b = n2I2a, I3c = n1.apply(J);
  const auto I1sq = I1 * I1;
  // 2 I1^2 I2b' times the displayed relation, expanded termwise.
  out.push_back(residual_of(std::vector<MultiJet<S>>{
      S(2) * I1sq * J * n2.apply(I3a), I1sq * n2.apply(I3b), -(I1sq * n1.apply(I3c)),
      -(J * I3b * I1sq), S(3) * I3b * I3c * I1sq, I3c * I1sq,
      -(S(3) * I3b * I2a * J * I1), -(S(4) * I2a * J * I1), S(5) * I3a * J * I1,
      S(4) * I2a * I3c * I1, S(4) * I3b * I1, S(4) * I1,
      -(S(6) * I2a * I2a * J), S(6) * I2a}));
  return out;
}

template <class S>
InvariantSet<S> asp_function_invariants(const FunctionJet<S>& f) {
  const auto d = function_data(SymplecticSpace::darboux(1), f);
  const auto &ux = d.grad[0], &uy = d.grad[1];
  const auto &uxx = d.hess[0][0], &uxy = d.hess[0][1], &uyy = d.hess[1][1];
  const auto n2 = hamiltonian_derivation(d);
  InvariantSet<S> out;
  out.add("I0", d.u);
  out.add("I2'", uxx * uyy - uxy * uxy);
  out.add("I2c", hessian_form(d, n2, n2));
  out.add_derivation("nabla1'", Derivation<S>{{ux * uyy - uy * uxy, -(ux * uxy - uy * uxx)}});
  out.add_derivation("nabla2", n2);
  return out;
}

template <class S>
std::vector<Residual<S>> asp_function_syzygies(const FunctionJet<S>& f) {
  if (f.order() < 4) throw Error(ErrorCode::OrderExhausted, "affine syzygies need a 4-jet");
  const auto inv = asp_function_invariants(f);
  const auto& n1 = inv.derivation("nabla1'");
  const auto& n2 = inv.derivation("nabla2");
  const auto &I0 = inv["I0"], &H = inv["I2'"], &C = inv["I2c"];

  const auto I3a = n1.apply(H), I3b = n2.apply(H), I3c = n1.apply(C), I3d = n2.apply(C);
  std::vector<Residual<S>> out;
  out.push_back(field_relation<S>({{C, commutator(n1, n2)}, {I3d, n1}, {-(I3c - S(2) * H * C), n2}}));
  std::vector<MultiJet<S>> r2;
  for (std::size_t i = 0; i < n2.coeff.size(); ++i) r2.push_back(n2.coeff[i] * total_derivative(I0, static_cast<int>(i)));
  out.push_back(residual_of(r2));
  // I2c times the displayed relation.
  out.push_back(residual_of(std::vector<MultiJet<S>>{
      -(C * C * n2.apply(I3b)), C * n1.apply(I3c), C * H * n2.apply(I3d), -(S(12) * H * H * C * C),
      S(10) * H * C * I3c, -(S(3) * H * I3d * I3d), -(S(3) * C * C * I3a), S(3) * C * I3b * I3d, -(S(3) * I3c * I3c)}));
  out.push_back(residual_of(std::vector<MultiJet<S>>{n1.apply(I0), -C}));
  return out;
}

template <class S>
InvariantSet<S> acsp_function_invariants(const FunctionJet<S>& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "affine conformal invariants need a 3-jet");
  const auto asp = asp_function_invariants(f);
  const auto& H = asp["I2'"];
  const auto& n1 = asp.derivation("nabla1'");
  const auto& n2 = asp.derivation("nabla2");
  require_nonzero(H.value(), ErrorCode::WeightNormalizationSingular, "Hess(u) vanishes");
  const auto n2H = n2.apply(H);
  require_nonzero(n2H.value(), ErrorCode::WeightNormalizationSingular, "nabla2(Hess u) vanishes");
  InvariantSet<S> out;
  out.add("I0", asp["I0"]);
  out.add("I3a''", n1.apply(H) / (H * H));
  out.add("I3b''", n2H * n2H / (H * H * H));
  out.add_derivation("nabla1''", n1 * (one<S>() / H));
  out.add_derivation("nabla2''", n2 * (H / n2H));
  return out;
}

template <class S>
InvariantSet<S> csp_curve_invariants(const GraphJet<S>& g) {
  require_order(g, 3, "conformal curve invariants need a 3-jet");
  const auto sp = curve_invariants_n1(g);
  const auto& I2 = sp["I2"];
  const auto& nabla = sp.derivation("nabla");
  const auto I3 = nabla.apply(I2);
  require_nonzero(I2.value(), ErrorCode::WeightNormalizationSingular, "I2 vanishes");
  require_nonzero(I3.value(), ErrorCode::WeightNormalizationSingular, "I3 vanishes");
  InvariantSet<S> out;
  out.add("I3'", I3 * I3 / (I2 * I2 * I2));
  out.add_derivation("nabla'", nabla * (I2 / I3));
  return out;
}

template <class S>
InvariantSet<S> asp_curve_invariants(const GraphJet<S>& g) {
  const auto d = affine_curve_data(g);
  InvariantSet<S> out;
  out.add("I4''", d.y2 * d.A * d.A * d.A);
  out.add_derivation("nabla''", Derivation<S>{{d.A}});
  return out;
}

template <class S>
InvariantSet<S> asp_curve_microlocal(const GraphJet<S>& g) {
  const auto d = affine_curve_data(g);
  const auto r = cbrt(d.y2);
  InvariantSet<S> out;
  out.add("I4'", r * d.A);
  out.add_derivation("nabla'", Derivation<S>{{one<S>() / r}});
  return out;
}

template <class S>
InvariantSet<S> acsp_curve_invariants(const GraphJet<S>& g) {
  if (g.order() < 5) throw Error(ErrorCode::OrderExhausted, "affine conformal curve invariants need a 5-jet");
  const auto asp = asp_curve_invariants(g);
  const auto& I4 = asp["I4''"];
  const auto& nabla = asp.derivation("nabla''");
  require_nonzero(I4.value(), ErrorCode::WeightNormalizationSingular, "I4'' vanishes");
  const auto dI4 = nabla.apply(I4);
  require_nonzero(dI4.value(), ErrorCode::WeightNormalizationSingular, "nabla''(I4'') vanishes");
  InvariantSet<S> out;
  out.add("I5", dI4 * dI4 / (I4 * I4 * I4));
  out.add_derivation("nabla'''", nabla * (I4 / dI4));
  return out;
}

#define SYMPINV_INSTANTIATE(S)                                                    \
  template InvariantSet<S> csp_function_invariants(const FunctionJet<S>&);        \
  template std::vector<Residual<S>> csp_function_syzygies(const FunctionJet<S>&); \
  template InvariantSet<S> asp_function_invariants(const FunctionJet<S>&);        \
  template std::vector<Residual<S>> asp_function_syzygies(const FunctionJet<S>&); \
  template InvariantSet<S> acsp_function_invariants(const FunctionJet<S>&);       \
  template InvariantSet<S> csp_curve_invariants(const GraphJet<S>&);              \
  template InvariantSet<S> asp_curve_invariants(const GraphJet<S>&);              \
  template InvariantSet<S> acsp_curve_invariants(const GraphJet<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

template InvariantSet<double> asp_curve_microlocal(const GraphJet<double>&);
template InvariantSet<Dual<double>> asp_curve_microlocal(const GraphJet<Dual<double>>&);
template InvariantSet<Rational> asp_curve_microlocal(const GraphJet<Rational>&);

}  // namespace sympinv
