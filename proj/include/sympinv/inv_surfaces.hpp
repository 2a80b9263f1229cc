#pragma once

// Invariants of surfaces x = x(t, s), y = y(t, s) in R^4 with
// omega = dt^ds + dx^dy. Tangent vectors are written in (t, s) components;
// 1-forms in Ann(T Sigma) by their coefficients on df, dg with f = x - x(t,s),
// g = y - y(t,s), and quadratic forms on T Sigma as 2x2 matrices in (t, s).

#include <array>
#include <vector>

#include "sympinv/invariants.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

template <class S>
using Vec4 = std::array<MultiJet<S>, 4>;
template <class S>
using Form2 = std::array<std::array<MultiJet<S>, 2>, 2>;

template <class S>
struct SurfaceFrame {
  Vec4<S> v0, v0par, v0perp, wpar, wperp;
  Form2<S> Q1, Q2;
  std::array<MultiJet<S>, 2> sigma1, sigma2;  // coefficients on (df, dg)
  Vec4<S> et, es;                            // D_t, D_s lifted
  Form2<S> d2f, d2g;                         // -Hess x, -Hess y

  MultiJet<S> form(const Form2<S>& q, const Vec4<S>& a, const Vec4<S>& b) const;
  MultiJet<S> eval(const std::array<MultiJet<S>, 2>& sigma, const Vec4<S>& v) const;
};

template <class S>
MultiJet<S> omega4(const SymplecticSpace& space, const Vec4<S>& a, const Vec4<S>& b);

// Decompose v = v_par + v_perp with v_par in T Sigma and v_perp omega-orthogonal
// to T Sigma. Throws LagrangianTangent when omega vanishes on T Sigma.
template <class S>
std::pair<Vec4<S>, Vec4<S>> split_tangent(const SymplecticSpace& space, const Vec4<S>& et, const Vec4<S>& es,
                                          const Vec4<S>& v);

// Throws LagrangianTangent, DegenerateQ1 or SigmaDegenerate.
template <class S>
SurfaceFrame<S> surface_frame(const SymplecticSpace& space, const GraphJet<S>& g);

// I2a = sigma1(v0perp), I2b = Q2(v0par, v0par), I2c = Q2(v0par, wpar),
// I2d = Q2(wpar, wpar); nabla1 = v0par, nabla2 = wpar.
template <class S>
InvariantSet<S> surface_invariants(const SymplecticSpace& space, const GraphJet<S>& g);

}  // namespace sympinv
