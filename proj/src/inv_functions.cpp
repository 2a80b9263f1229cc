#include "sympinv/inv_functions.hpp"

namespace sympinv {

template <class S>
FunctionData<S> function_data(const SymplecticSpace& space, const FunctionJet<S>& f) {
  const int m = f.nvars();
  if (m != space.dim()) throw Error(ErrorCode::InvalidArgument, "function jet dimension does not match space");
  if (f.order() < 2) throw Error(ErrorCode::OrderExhausted, "function invariants need a 2-jet");
  FunctionData<S> d;
  d.space = space;
  d.u = f.u.with_base(std::make_shared<const std::vector<S>>(f.base));
  d.x = f.coordinates(f.order());
  for (int i = 0; i < m; ++i) d.grad.push_back(total_derivative(d.u, i));
  d.hess.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) d.hess[static_cast<std::size_t>(i)].push_back(total_derivative(d.grad[static_cast<std::size_t>(i)], j));
  return d;
}

template <class S>
MultiJet<S> hessian_form(const FunctionData<S>& d, const Derivation<S>& v, const Derivation<S>& w) {
  MultiJet<S> acc(S(0));
  const std::size_t m = d.hess.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) acc = acc + v.coeff[i] * d.hess[i][j] * w.coeff[j];
  return acc;
}

template <class S>
Derivation<S> apply_endomorphism(const FunctionData<S>& d, const Derivation<S>& v) {
  const std::size_t m = d.hess.size();
  std::vector<MultiJet<S>> hv(m, MultiJet<S>(S(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) hv[i] = hv[i] + d.hess[i][j] * v.coeff[j];
  Derivation<S> r;
  r.coeff.assign(m, MultiJet<S>(S(0)));
  for (const auto& [q, p] : d.space.pairs()) {
    r.coeff[static_cast<std::size_t>(q)] = hv[static_cast<std::size_t>(p)];
    r.coeff[static_cast<std::size_t>(p)] = -hv[static_cast<std::size_t>(q)];
  }
  return r;
}

template <class S>
Derivation<S> radial_derivation(const FunctionData<S>& d) {
  return Derivation<S>{d.x};
}

template <class S>
Derivation<S> hamiltonian_derivation(const FunctionData<S>& d) {
  Derivation<S> r;
  r.coeff.assign(d.grad.size(), MultiJet<S>(S(0)));
  for (const auto& [q, p] : d.space.pairs()) {
    r.coeff[static_cast<std::size_t>(q)] = -d.grad[static_cast<std::size_t>(p)];
    r.coeff[static_cast<std::size_t>(p)] = d.grad[static_cast<std::size_t>(q)];
  }
  return r;
}

template <class S>
InvariantSet<S> function_invariants_n1(const FunctionJet<S>& f) {
  const auto d = function_data(SymplecticSpace::darboux(1), f);
  const auto n1 = radial_derivation(d);
  const auto n2 = hamiltonian_derivation(d);
  InvariantSet<S> out;
  out.add("I0", d.u);
  out.add("I1", n1.apply(d.u));
  out.add("I2a", hessian_form(d, n1, n1));
  out.add("I2b", -hessian_form(d, n1, n2));
  out.add("I2c", hessian_form(d, n2, n2));
  out.add_derivation("nabla1", n1);
  out.add_derivation("nabla2", n2);
  return out;
}

template <class S>
InvariantSet<S> function_generators(const SymplecticSpace& space, const FunctionJet<S>& f) {
  const auto d = function_data(space, f);
  const int m = space.dim();
  std::vector<Derivation<S>> nab{radial_derivation(d), hamiltonian_derivation(d)};
  while (static_cast<int>(nab.size()) < m) nab.push_back(apply_endomorphism(d, nab.back()));
  nab.resize(static_cast<std::size_t>(m));

  std::vector<std::vector<S>> frame(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) frame[static_cast<std::size_t>(i)] = nab[static_cast<std::size_t>(i)].values();
  try {
    invert_matrix(frame);
  } catch (const Error&) {
    throw DegenerateError(ErrorCode::FrameDegeneracy, "invariant derivations are dependent at the basepoint");
  }

  InvariantSet<S> out;
  out.add("I0", d.u);
  out.add("I1", nab[0].apply(d.u));
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < m; ++j)
      out.add("I" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
              hessian_form(d, nab[static_cast<std::size_t>(i)], nab[static_cast<std::size_t>(j)]));
  for (int i = 0; i < m; ++i) out.add_derivation("nabla" + std::to_string(i + 1), nab[static_cast<std::size_t>(i)]);
  return out;
}

template <class S>
std::vector<Residual<S>> function_syzygies_n1(const FunctionJet<S>& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "syzygies need a 3-jet");
  const auto inv = function_invariants_n1(f);
  const auto& n1 = inv.derivation("nabla1");
  const auto& n2 = inv.derivation("nabla2");
  const auto &I0 = inv["I0"], &I1 = inv["I1"], &I2a = inv["I2a"], &I2b = inv["I2b"], &I2c = inv["I2c"];

  std::vector<Residual<S>> out;
  // nabla2(I0) = u_x (-u_y) + u_y u_x, termwise.
  std::vector<MultiJet<S>> r1;
  for (std::size_t i = 0; i < n2.coeff.size(); ++i) r1.push_back(n2.coeff[i] * total_derivative(I0, static_cast<int>(i)));
  out.push_back(residual_of(r1));

  const auto br = commutator(n1, n2);
  std::vector<std::vector<MultiJet<S>>> comps;
  for (std::size_t i = 0; i < br.coeff.size(); ++i)
    comps.push_back({I1 * br.coeff[i], -(I2b * n1.coeff[i]), -((I2a - I1) * n2.coeff[i])});
  out.push_back(worst_component(comps));

  out.push_back(residual_of(std::vector<MultiJet<S>>{I1 * n2.apply(I2b), I1 * n1.apply(I2c),
                                                     -(S(3) * I2a * I2c), I1 * I2c, S(3) * I2b * I2b}));
  return out;
}

template <class S>
std::vector<Residual<S>> function_reductions_n1(const FunctionJet<S>& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "reductions need a 3-jet");
  const auto inv = function_invariants_n1(f);
  const auto& n1 = inv.derivation("nabla1");
  const auto& n2 = inv.derivation("nabla2");
  const auto& I0 = inv["I0"];
  const auto d1 = n1.apply(I0);
  return {residual_of(std::vector<MultiJet<S>>{inv["I1"], -d1}),
          residual_of(std::vector<MultiJet<S>>{inv["I2a"], -n1.apply(d1), d1}),
          residual_of(std::vector<MultiJet<S>>{inv["I2b"], n2.apply(d1)})};
}

template <class S>
Residual<S> endomorphism_expansion_n1(const FunctionJet<S>& f) {
  const auto inv = function_invariants_n1(f);
  const auto d = function_data(SymplecticSpace::darboux(1), f);
  const auto& n1 = inv.derivation("nabla1");
  const auto& n2 = inv.derivation("nabla2");
  const auto a2 = apply_endomorphism(d, n2);
  const auto &I1 = inv["I1"], &I2b = inv["I2b"], &I2c = inv["I2c"];
  std::vector<std::vector<MultiJet<S>>> comps;
  for (std::size_t i = 0; i < a2.coeff.size(); ++i)
    comps.push_back({I1 * a2.coeff[i], -(I2c * n1.coeff[i]), -(I2b * n2.coeff[i])});
  return worst_component(comps);
}

#define SYMPINV_INSTANTIATE(S)                                                                                   \
  template FunctionData<S> function_data(const SymplecticSpace&, const FunctionJet<S>&);                         \
  template MultiJet<S> hessian_form(const FunctionData<S>&, const Derivation<S>&, const Derivation<S>&);         \
  template Derivation<S> apply_endomorphism(const FunctionData<S>&, const Derivation<S>&);                       \
  template Derivation<S> radial_derivation(const FunctionData<S>&);                                              \
  template Derivation<S> hamiltonian_derivation(const FunctionData<S>&);                                         \
  template InvariantSet<S> function_invariants_n1(const FunctionJet<S>&);                                        \
  template InvariantSet<S> function_generators(const SymplecticSpace&, const FunctionJet<S>&);                   \
  template std::vector<Residual<S>> function_syzygies_n1(const FunctionJet<S>&);                                 \
  template std::vector<Residual<S>> function_reductions_n1(const FunctionJet<S>&);                               \
  template Residual<S> endomorphism_expansion_n1(const FunctionJet<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

}  // namespace sympinv
