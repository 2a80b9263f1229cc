#pragma once

// Invariants of functions u on symplectic R^2n under Sp(2n).

#include <vector>

#include "sympinv/invariants.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

// Jets of u and its partial derivatives along the identity chart.
template <class S>
struct FunctionData {
  SymplecticSpace space;
  std::vector<MultiJet<S>> x;                  // coordinate jets
  MultiJet<S> u;                               // order K
  std::vector<MultiJet<S>> grad;               // order K-1
  std::vector<std::vector<MultiJet<S>>> hess;  // order K-2
};

template <class S>
FunctionData<S> function_data(const SymplecticSpace& space, const FunctionJet<S>& f);

// Q2(v, w) = v^T Hess(u) w for horizontal fields.
template <class S>
MultiJet<S> hessian_form(const FunctionData<S>& d, const Derivation<S>& v, const Derivation<S>& w);

// A = omega^{-1} Q2: (A v)_q = (H v)_p, (A v)_p = -(H v)_q.
template <class S>
Derivation<S> apply_endomorphism(const FunctionData<S>& d, const Derivation<S>& v);

// nabla_1 (radial) and nabla_2 = omega^{-1} du.
template <class S>
Derivation<S> radial_derivation(const FunctionData<S>& d);
template <class S>
Derivation<S> hamiltonian_derivation(const FunctionData<S>& d);

// n = 1: I0, I1, I2a, I2b, I2c and nabla1, nabla2.
template <class S>
InvariantSet<S> function_invariants_n1(const FunctionJet<S>& f);

// General n: I0, I1_j = Q2(nabla_1, nabla_j), I2_j = Q2(nabla_2, nabla_j) and
// nabla_1..nabla_2n with nabla_{i+2} = A^i nabla_2. Throws FrameDegeneracy when
// the derivations are dependent at the basepoint.
template <class S>
InvariantSet<S> function_generators(const SymplecticSpace& space, const FunctionJet<S>& f);

// R1 = nabla2(I0); R2 = I1 [nabla1, nabla2] - I2b nabla1 - (I2a - I1) nabla2
// (componentwise, worst component); R3 = I1 nabla2(I2b) + I1 nabla1(I2c)
// - (3 I2a - I1) I2c + 3 I2b^2. Needs a 3-jet.
template <class S>
std::vector<Residual<S>> function_syzygies_n1(const FunctionJet<S>& f);

// Reduction identities: I1 = nabla1(I0), I2a = nabla1^2(I0) - nabla1(I0), I2b = -nabla2 nabla1(I0).
template <class S>
std::vector<Residual<S>> function_reductions_n1(const FunctionJet<S>& f);

// A nabla_2 = (I2c/I1) nabla_1 + (I2b/I1) nabla_2, componentwise (worst component).
template <class S>
Residual<S> endomorphism_expansion_n1(const FunctionJet<S>& f);

}  // namespace sympinv
