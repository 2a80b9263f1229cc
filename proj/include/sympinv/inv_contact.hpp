#pragma once

// Invariants on the contact space W = R^3(x, y, z), alpha = dz - y dx, under
// the lifted Sp(2) action G and its central extension G^ = CSp(2) acting by
// (x, y, z) -> (lambda x, lambda y, lambda^2 z). I0 = 2z - xy is G-invariant
// of weight 2.

#include <vector>

#include "sympinv/invariants.hpp"

namespace sympinv {

// Curves y = y(x), z = z(x), G-level: I0, I1 = nabla(I0), I2a = y2 / (x y1 - y)^3,
// I2b = nabla(I1) and nabla = (x y1 - y)^-1 D_x. Weights 2, 0, -4, -2 and -2.
// Throws DegenerateJet when x y1 - y = 0.
template <class S>
InvariantSet<S> contact_curve_invariants_g(const GraphJet<S>& g);

// Curves, G^-level: I1 = (z1 - y) / (x y1 - y), I2a' = I0^2 I2a,
// I2b' = I0 nabla(I1) and nabla' = I0 nabla. Throws OnZeroLevelSet when I0 = 0.
template <class S>
InvariantSet<S> contact_curve_invariants(const GraphJet<S>& g);

// Surfaces z = z(x, y), G-level: I0, I1, I2a, I2b, I2c and nabla1 = x D_x + y D_y,
// nabla2 = (x - 2 z_y) D_x + (2 z_x - y) D_y.
template <class S>
InvariantSet<S> contact_surface_invariants_g(const GraphJet<S>& g);

// Surfaces, G^-level: the generators I1' = I1 / I0, I2c' = I2c / I0, the
// omitted I2a' = I2a / I0, I2b' = I2b / I0, and nabla1, nabla2.
// Throws OnZeroLevelSet when I0 = 0.
template <class S>
InvariantSet<S> contact_surface_invariants(const GraphJet<S>& g);

// I1 = nabla1(I0) / 2, I2a = nabla1(I1) - I1, I2b = -(nabla2(I1) + I2a - I1) / 2,
// I2a' = nabla1(I1') + 2 I1'^2 - I1', I2b' = -(nabla1 + nabla2)(I1') / 2 - I1'^2 + I1'.
template <class S>
std::vector<Residual<S>> contact_surface_reductions(const GraphJet<S>& g);

// R1 (commutator, worst component) and R2. Needs a 4-jet.
template <class S>
std::vector<Residual<S>> contact_surface_syzygies(const GraphJet<S>& g);

// Functions u(x, y, z): I0, I1a, I1b, I2a..I2f and nabla1, nabla2, nabla3.
// Throws DegenerateJet when xy - 2z = 0.
template <class S>
InvariantSet<S> contact_function_invariants(const FunctionJet<S>& f);

// R1..R7 at the basepoint (R2..R4 componentwise). Needs a 3-jet; throws
// DegenerateJet when I1a + I1b = 0.
template <class S>
std::vector<Residual<S>> contact_syzygy_suite(const FunctionJet<S>& f);

}  // namespace sympinv
