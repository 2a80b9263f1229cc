#include "sympinv/inv_surfaces.hpp"

namespace sympinv {

template <class S>
MultiJet<S> SurfaceFrame<S>::form(const Form2<S>& q, const Vec4<S>& a, const Vec4<S>& b) const {
  MultiJet<S> acc(S(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) acc = acc + a[i] * q[i][j] * b[j];
  return acc;
}

// df(v) = v_x - x_t v_t - x_s v_s, dg(v) = v_y - y_t v_t - y_s v_s.
template <class S>
MultiJet<S> SurfaceFrame<S>::eval(const std::array<MultiJet<S>, 2>& sigma, const Vec4<S>& v) const {
  const auto df = v[2] - et[2] * v[0] - es[2] * v[1];
  const auto dg = v[3] - et[3] * v[0] - es[3] * v[1];
  return sigma[0] * df + sigma[1] * dg;
}

template <class S>
MultiJet<S> omega4(const SymplecticSpace& space, const Vec4<S>& a, const Vec4<S>& b) {
  return space.omega(std::vector<MultiJet<S>>(a.begin(), a.end()), std::vector<MultiJet<S>>(b.begin(), b.end()));
}

namespace {

template <class S>
Vec4<S> axpy(const MultiJet<S>& a, const Vec4<S>& x, const MultiJet<S>& b, const Vec4<S>& y) {
  Vec4<S> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a * x[i] + b * y[i];
  return r;
}

template <class S>
Vec4<S> minus(const Vec4<S>& x, const Vec4<S>& y) {
  Vec4<S> r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = x[i] - y[i];
  return r;
}

template <class S>
Form2<S> combine(const MultiJet<S>& a, const Form2<S>& p, const MultiJet<S>& b, const Form2<S>& q) {
  Form2<S> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r[i][j] = a * p[i][j] + b * q[i][j];
  return r;
}

}  // namespace

template <class S>
std::pair<Vec4<S>, Vec4<S>> split_tangent(const SymplecticSpace& space, const Vec4<S>& et, const Vec4<S>& es,
                                          const Vec4<S>& v) {
  // v_par = a et + b es with omega(e, v - v_par) = 0 for e in {et, es}.
  const auto w = omega4(space, et, es);
  require_nonzero(w.value(), ErrorCode::LagrangianTangent, "omega vanishes on the tangent plane");
  const auto rt = omega4(space, et, v);
  const auto rs = omega4(space, es, v);
  // [0 w; -w 0] (a, b) = (rt, rs).
  const auto b = rt / w;
  const auto a = MultiJet<S>(S(0)) - rs / w;
  const auto par = axpy(a, et, b, es);
  return {par, minus(v, par)};
}

template <class S>
SurfaceFrame<S> surface_frame(const SymplecticSpace& space, const GraphJet<S>& g) {
  if (space.dim() != 4 || g.nvars() != 2 || g.u.size() != 2)
    throw Error(ErrorCode::InvalidArgument, "expected a surface x(t,s), y(t,s) in R^4");
  if (g.order() < 2) throw Error(ErrorCode::OrderExhausted, "surface invariants need a 2-jet");
  SurfaceFrame<S> f;
  const auto amb = g.ambient();
  for (std::size_t i = 0; i < 4; ++i) f.v0[i] = amb[i];
  const auto& x = g.u[0];
  const auto& y = g.u[1];
  const MultiJet<S> one(S(1)), zero(S(0));
  f.et = {one, zero, total_derivative(x, 0), total_derivative(y, 0)};
  f.es = {zero, one, total_derivative(x, 1), total_derivative(y, 1)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      f.d2f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -total_derivative(total_derivative(x, i), j);
      f.d2g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -total_derivative(total_derivative(y, i), j);
    }
  std::tie(f.v0par, f.v0perp) = split_tangent(space, f.et, f.es, f.v0);

  // Q1 = G00 d2f - F00 d2g vanishes on v0par.
  const auto F00 = f.form(f.d2f, f.v0par, f.v0par);
  const auto G00 = f.form(f.d2g, f.v0par, f.v0par);
  if (is_exact_scalar<S>::value ? (is_zero(F00.value()) && is_zero(G00.value()))
                                : std::max(magnitude(F00.value()), magnitude(G00.value())) <= 1e-300)
    throw DegenerateError(ErrorCode::DegenerateQ1, "the quadratic forms d2f, d2g both vanish on v0par");
  f.sigma1 = {G00, -F00};
  f.Q1 = combine(G00, f.d2f, -F00, f.d2g);

  // w~ with omega(v0par, w~) = 1, then w = w~ + k v0par null for Q1.
  const auto ot = omega4(space, f.v0par, f.et);
  const auto os = omega4(space, f.v0par, f.es);
  const bool use_t = magnitude(ot.value()) >= magnitude(os.value());
  const auto piv = use_t ? ot : os;
  require_nonzero(piv.value(), ErrorCode::LagrangianTangent, "v0par vanishes");
  Vec4<S> wt;
  for (std::size_t i = 0; i < 4; ++i) wt[i] = (use_t ? f.et[i] : f.es[i]) / piv;
  const auto q01 = f.form(f.Q1, wt, f.v0par);
  require_nonzero(q01.value(), ErrorCode::DegenerateQ1, "Q1 is degenerate");
  const auto k = MultiJet<S>(S(0)) - f.form(f.Q1, wt, wt) / (S(2) * q01);
  f.wpar = axpy(one, wt, k, f.v0par);
  const auto norm = f.form(f.Q1, f.v0par, f.wpar);
  require_nonzero(norm.value(), ErrorCode::DegenerateQ1, "Q1 is degenerate");
  f.Q1 = combine(one / norm, f.Q1, zero, f.Q1);
  f.sigma1 = {f.sigma1[0] / norm, f.sigma1[1] / norm};

  // w_perp in the omega-complement: sigma1(w_perp) = 0, omega(v0perp, w_perp) = 1.
  const auto s0 = f.eval(f.sigma1, f.v0perp);
  require_nonzero(s0.value(), ErrorCode::SigmaDegenerate, "sigma1(v0perp) vanishes");
  Vec4<S> best;
  MultiJet<S> best_w(S(0));
  for (int axis : {2, 3, 0, 1}) {
    Vec4<S> e{zero, zero, zero, zero};
    e[static_cast<std::size_t>(axis)] = one;
    const auto perp = split_tangent(space, f.et, f.es, e).second;
    const auto w = omega4(space, f.v0perp, perp);
    if (magnitude(w.value()) > magnitude(best_w.value())) best = perp, best_w = w;
  }
  require_nonzero(best_w.value(), ErrorCode::SigmaDegenerate, "v0perp vanishes");
  // w = sigma1(c) v0perp - sigma1(v0perp) c, omega(v0perp, w) = -sigma1(v0perp) omega(v0perp, c).
  const auto sc = f.eval(f.sigma1, best);
  const auto scale = MultiJet<S>(S(0)) - s0 * best_w;
  f.wperp = axpy(sc / scale, f.v0perp, MultiJet<S>(S(0)) - s0 / scale, best);

  // sigma2 = a df + b dg with sigma2(v0perp) = 0, sigma2(w_perp) = 1.
  const std::array<MultiJet<S>, 2> df{one, zero}, dg{zero, one};
  const auto a11 = f.eval(df, f.v0perp), a12 = f.eval(dg, f.v0perp);
  const auto a21 = f.eval(df, f.wperp), a22 = f.eval(dg, f.wperp);
  const auto det = a11 * a22 - a12 * a21;
  require_nonzero(det.value(), ErrorCode::SigmaDegenerate, "sigma2 is not determined");
  f.sigma2 = {MultiJet<S>(S(0)) - a12 / det, a11 / det};
  f.Q2 = combine(f.sigma2[0], f.d2f, f.sigma2[1], f.d2g);
  return f;
}

template <class S>
InvariantSet<S> surface_invariants(const SymplecticSpace& space, const GraphJet<S>& g) {
  const auto f = surface_frame(space, g);
  InvariantSet<S> out;
  out.add("I2a", f.eval(f.sigma1, f.v0perp));
  out.add("I2b", f.form(f.Q2, f.v0par, f.v0par));
  out.add("I2c", f.form(f.Q2, f.v0par, f.wpar));
  out.add("I2d", f.form(f.Q2, f.wpar, f.wpar));
  out.add_derivation("nabla1", Derivation<S>{{f.v0par[0], f.v0par[1]}});
  out.add_derivation("nabla2", Derivation<S>{{f.wpar[0], f.wpar[1]}});
  return out;
}

#define SYMPINV_INSTANTIATE(S)                                                                                   \
  template struct SurfaceFrame<S>;                                                                               \
  template MultiJet<S> omega4(const SymplecticSpace&, const Vec4<S>&, const Vec4<S>&);                           \
  template std::pair<Vec4<S>, Vec4<S>> split_tangent(const SymplecticSpace&, const Vec4<S>&, const Vec4<S>&,     \
                                                     const Vec4<S>&);                                            \
  template SurfaceFrame<S> surface_frame(const SymplecticSpace&, const GraphJet<S>&);                            \
  template InvariantSet<S> surface_invariants(const SymplecticSpace&, const GraphJet<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

}  // namespace sympinv
