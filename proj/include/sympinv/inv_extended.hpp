#pragma once

// Invariants of functions and curves on the symplectic plane under the
// conformal (CSp), affine (ASp) and affine conformal (ACSp) extensions of Sp(2).
// They are built from the Sp invariants by keeping weight-0 combinations
// (scaling by the center) and translation-invariant combinations.

#include <string>
#include <vector>

#include "sympinv/invariants.hpp"

namespace sympinv {

// Scaling exponent w of an invariant or derivation under (x, y) -> (lambda x, lambda y):
// the value of an invariant at the image jet is lambda^w times the original.
// A derivation of weight w maps invariants of weight v to weight v + w.
struct WeightedInvariant {
  std::string name;
  int weight = 0;
  bool derivation = false;
};

// Declared weights of the generators used in this module, keyed by family
// ("sp-function", "asp-function", "sp-curve", "asp-curve").
const std::vector<WeightedInvariant>& declared_weights(const std::string& family);

// CSp functions: I0, I1, I2a, I2b' = I2b^-2 I2c; nabla1, nabla2' = I2b^-1 nabla2.
// Throws WeightNormalizationSingular when I2b = 0.
template <class S>
InvariantSet<S> csp_function_invariants(const FunctionJet<S>& f);

// R1 = nabla2'(I0), R2 = nabla2'(I1) + 1, R3 the commutator relation
// [nabla1, nabla2'] = I1^-1 nabla1 + (I2a / I1 + nabla2'(I2a)) nabla2'
// (worst component), R4 the fourth-order relation. Needs a 4-jet.
template <class S>
std::vector<Residual<S>> csp_function_syzygies(const FunctionJet<S>& f);

// ASp functions: I0, I2' = Hess(u), I2c; nabla1' and nabla2.
template <class S>
InvariantSet<S> asp_function_invariants(const FunctionJet<S>& f);

// R1 the commutator [nabla1', nabla2] (worst component), R2 = nabla2(I0),
// R3 the fourth-order relation, and the reduction nabla1'(I0) - I2c last.
template <class S>
std::vector<Residual<S>> asp_function_syzygies(const FunctionJet<S>& f);

// ACSp functions: I0, I3a'', I3b''; nabla1'' = nabla1' / I2', nabla2'' = I2' / nabla2(I2') nabla2.
// Throws WeightNormalizationSingular when I2' = 0 or nabla2(I2') = 0.
template <class S>
InvariantSet<S> acsp_function_invariants(const FunctionJet<S>& f);

// CSp plane curves y = y(x): I3' = I3^2 / I2^3 and nabla' = I2 / I3 nabla.
template <class S>
InvariantSet<S> csp_curve_invariants(const GraphJet<S>& g);

// ASp plane curves: the rational generators I4'' = (I4')^3 and nabla'' = I4' nabla'.
template <class S>
InvariantSet<S> asp_curve_invariants(const GraphJet<S>& g);

// The micro-local ASp invariant I4' = cbrt(y2) (3 y2^-2 y4 - 5 y2^-3 y3^2) and
// nabla' = cbrt(y2)^-1 D_x (real cube root).
template <class S>
InvariantSet<S> asp_curve_microlocal(const GraphJet<S>& g);

// ACSp plane curves: I5 = (nabla'' I4'')^2 / (I4'')^3 and nabla''' = I4'' / nabla''(I4'') nabla''.
template <class S>
InvariantSet<S> acsp_curve_invariants(const GraphJet<S>& g);

}  // namespace sympinv
