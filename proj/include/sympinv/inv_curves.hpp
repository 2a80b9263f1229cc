#pragma once

// Invariants of unparametrized curves in symplectic R^2n under Sp(2n).
//
// A curve is given by the jets of its ambient coordinates in one parameter t.
// With w_j = d^j c / dt^j and the chain rule for a change of parameter t -> tau
// (k_j = d^j tau / dt^j),
//   w_j = sum_{i=1..j} B_{j,i}(k_1, ..., k_{j-i+1}) v_i,
// where B_{j,i} are the partial Bell polynomials. The canonical parameter is
// fixed by omega(v0, v1) = 1 and omega(v0, v_j) = 0 for j >= 2, v0 = c.

#include <vector>

#include "sympinv/invariants.hpp"
#include "sympinv/polynomial.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

// Jets of the ambient coordinates along a curve, in one parameter.
template <class S>
using CurveJet = std::vector<MultiJet<S>>;

template <class S>
CurveJet<S> curve_from_graph(const GraphJet<S>& g) {
  return g.ambient();
}

// Partial Bell polynomial B_{j,i} in k_1..k_j (variables 0..j-1).
const Polynomial<Rational>& bell_polynomial(int j, int i);

template <class S>
struct CurveFrame {
  MultiJet<S> delta;                     // omega(c, c') = k_1
  std::vector<MultiJet<S>> k;            // k[j] = k_j, k[0] unused
  std::vector<std::vector<MultiJet<S>>> v;  // v[0] = c, v[1..m]
};

// Frame v_0..v_m (m <= jet order). Throws DegenerateJet when delta = 0.
template <class S>
CurveFrame<S> curve_frame(const SymplecticSpace& space, const CurveJet<S>& c, int m);

// I_j = omega(v_{j-1}, v_j) for 2 <= j <= 2n and nabla = delta^{-1} D_t.
template <class S>
InvariantSet<S> curve_invariants(const SymplecticSpace& space, const CurveJet<S>& c);

// n = 1: I2 = y2 / (x y1 - y)^3, computed directly from the displayed formula.
template <class S>
InvariantSet<S> curve_invariants_n1(const GraphJet<S>& g);

// n = 2: I2, I3a, I3b, I4a, I4b, I4c (I3 = I3b, I4 = I4c) and nabla.
template <class S>
InvariantSet<S> curve_invariants_n2(const SymplecticSpace& space, const CurveJet<S>& c);

}  // namespace sympinv
