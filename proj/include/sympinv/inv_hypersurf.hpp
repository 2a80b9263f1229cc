#pragma once

// Invariants of hypersurfaces u = u(x_1..x_{2n-1}) in symplectic R^2n under
// Sp(2n). Tangent vectors are written in the independent coordinates w and
// lifted to the ambient space as (w, sum_i u_i w_i); the horizontal field of w
// is sum_i w_i D_i.

#include <vector>

#include "sympinv/invariants.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

template <class S>
using TangentVector = std::vector<MultiJet<S>>;

template <class S>
struct HyperFrame {
  std::vector<MultiJet<S>> v0;           // ambient position
  std::vector<TangentVector<S>> v;       // v[1..2n-1] in tangent coordinates (v[0] empty)
  std::vector<std::vector<MultiJet<S>>> Q;  // Hess(u) / delta
  MultiJet<S> delta;                     // dq(v0) = sum x_i u_i - u
  std::vector<MultiJet<S>> grad;         // u_i

  // Ambient lift of a tangent vector.
  std::vector<MultiJet<S>> lift(const TangentVector<S>& w, const std::vector<int>& indep, int dep, int dim) const;
  MultiJet<S> q(const TangentVector<S>& a, const TangentVector<S>& b) const;
};

// Canonical frame by alternating omega- and Q-normalizations. Throws
// DegenerateJet when dq(v0) = 0 and StepDegenerate (naming the step) when a
// normalization is singular.
template <class S>
HyperFrame<S> hypersurface_frame(const SymplecticSpace& space, const GraphJet<S>& g);

// I2_i = Q(v_i, v_i) and nabla_j = v_j, 1 <= i, j <= 2n-1.
template <class S>
InvariantSet<S> hypersurface_invariants(const SymplecticSpace& space, const GraphJet<S>& g);

// n = 2 naming: I2a, I2b, I2c and nabla1..nabla3.
template <class S>
InvariantSet<S> hypersurface_invariants_r4(const SymplecticSpace& space, const GraphJet<S>& g);

// Gram matrices of omega on (v0, v1, ..., v_{2n-1}) and of Q on (v1..v_{2n-1}),
// at the basepoint.
template <class S>
std::vector<std::vector<S>> frame_omega_gram(const SymplecticSpace& space, const GraphJet<S>& g, const HyperFrame<S>& f);
template <class S>
std::vector<std::vector<S>> frame_q_gram(const HyperFrame<S>& f);

// Normalized second differential of q' = f q restricted to the tangent space,
// minus that of q; f is a jet in the ambient coordinates at the basepoint with
// f(p) != 0. Returns the largest entry of the difference relative to the
// largest entry of Q.
double defining_function_rescale_residual(const SymplecticSpace& space, const GraphJet<double>& g,
                                          const MultiJet<double>& f);

}  // namespace sympinv
