#include "sympinv/inv_hypersurf.hpp"

#include <cmath>

namespace sympinv {

namespace {

template <class S>
using Vec = std::vector<MultiJet<S>>;

// A vector of the null space of the rows x cols matrix m of jets, whose rank is
// cols - 1. Full pivoting on the magnitude of constant terms; a final pivot
// below tolerance (relative to the first) means the rank is too small.
template <class S>
Vec<S> null_vector(std::vector<Vec<S>> m, int cols, const std::string& step) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> colperm(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) colperm[static_cast<std::size_t>(c)] = c;
  double first = 0;
  const int steps = cols - 1;
  for (int s = 0; s < steps; ++s) {
    int pr = -1, pc = -1;
    double best = -1;
    for (int r = s; r < rows; ++r)
      for (int c = s; c < cols; ++c) {
        const double mag = magnitude(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].value());
        if (mag > best) best = mag, pr = r, pc = c;
      }
    if (s == 0) first = best;
    const bool singular = is_exact_scalar<S>::value ? best == 0 : !(best > 1e-10 * first) || first == 0;
    if (pr < 0 || singular) throw DegenerateError(ErrorCode::StepDegenerate, "normalization step " + step + " is singular");
    std::swap(m[static_cast<std::size_t>(s)], m[static_cast<std::size_t>(pr)]);
    if (pc != s) {
      for (auto& row : m) std::swap(row[static_cast<std::size_t>(s)], row[static_cast<std::size_t>(pc)]);
      std::swap(colperm[static_cast<std::size_t>(s)], colperm[static_cast<std::size_t>(pc)]);
    }
    const auto piv = m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
    for (int r = s + 1; r < rows; ++r) {
      auto& row = m[static_cast<std::size_t>(r)];
      if (is_zero(row[static_cast<std::size_t>(s)].value()) && row[static_cast<std::size_t>(s)].is_constant()) continue;
      const auto f = row[static_cast<std::size_t>(s)] / piv;
      for (int c = s; c < cols; ++c)
        row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)] - f * m[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)];
    }
  }
  // Back substitution with the last (permuted) unknown set to 1.
  Vec<S> x(static_cast<std::size_t>(cols), MultiJet<S>(S(0)));
  x[static_cast<std::size_t>(cols - 1)] = MultiJet<S>(S(1));
  for (int s = steps - 1; s >= 0; --s) {
    MultiJet<S> acc(S(0));
    for (int c = s + 1; c < cols; ++c) acc = acc + m[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(s)] = -acc / m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
  }
  Vec<S> out(static_cast<std::size_t>(cols));
  for (int c = 0; c < cols; ++c) out[static_cast<std::size_t>(colperm[static_cast<std::size_t>(c)])] = x[static_cast<std::size_t>(c)];
  return out;
}

template <class S>
Vec<S> combine(const std::vector<Vec<S>>& basis, const Vec<S>& a) {
  Vec<S> out(basis[0].size(), MultiJet<S>(S(0)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + a[i] * basis[i][k];
  return out;
}

template <class S>
Vec<S> scaled(const Vec<S>& v, const MultiJet<S>& s) {
  Vec<S> out;
  for (const auto& x : v) out.push_back(x * s);
  return out;
}

// {w in span(basis) : phi(w) = 0}, phi given by its values on the basis.
template <class S>
std::vector<Vec<S>> kernel_of(const std::vector<Vec<S>>& basis, const Vec<S>& phi, const std::string& step) {
  std::size_t p = 0;
  double best = -1;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (magnitude(phi[i].value()) > best) best = magnitude(phi[i].value()), p = i;
  if (is_exact_scalar<S>::value ? best == 0 : !(best > 0))
    throw DegenerateError(ErrorCode::StepDegenerate, "normalization step " + step + " is singular");
  std::vector<Vec<S>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i == p) continue;
    const auto f = phi[i] / phi[p];
    Vec<S> w = basis[i];
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = w[k] - f * basis[p][k];
    out.push_back(w);
  }
  return out;
}

template <class S>
void require_step(const MultiJet<S>& v, const std::string& step) {
  require_nonzero(v.value(), ErrorCode::StepDegenerate, "normalization step " + step + " is singular");
}

}  // namespace

template <class S>
std::vector<MultiJet<S>> HyperFrame<S>::lift(const TangentVector<S>& w, const std::vector<int>& indep, int dep,
                                             int dim) const {
  std::vector<MultiJet<S>> out(static_cast<std::size_t>(dim), MultiJet<S>(S(0)));
  MultiJet<S> du(S(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[static_cast<std::size_t>(indep[i])] = w[i];
    du = du + grad[i] * w[i];
  }
  out[static_cast<std::size_t>(dep)] = du;
  return out;
}

template <class S>
MultiJet<S> HyperFrame<S>::q(const TangentVector<S>& a, const TangentVector<S>& b) const {
  MultiJet<S> acc(S(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc = acc + a[i] * Q[i][j] * b[j];
  return acc;
}

template <class S>
HyperFrame<S> hypersurface_frame(const SymplecticSpace& space, const GraphJet<S>& g) {
  const int m = g.nvars();
  if (m != space.dim() - 1 || g.dep.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected a hypersurface graph");
  if (g.order() < 2) throw Error(ErrorCode::OrderExhausted, "hypersurface invariants need a 2-jet");
  const int dim = space.dim();
  const int dep = g.dep[0];
  HyperFrame<S> f;
  f.v0 = g.ambient();
  const auto& u = g.u[0];
  for (int i = 0; i < m; ++i) f.grad.push_back(total_derivative(u, i));
  f.delta = MultiJet<S>(S(0)) - u;
  for (int i = 0; i < m; ++i) f.delta = f.delta + f.v0[static_cast<std::size_t>(g.indep[static_cast<std::size_t>(i)])] * f.grad[static_cast<std::size_t>(i)];
  require_nonzero(f.delta.value(), ErrorCode::DegenerateJet, "dq(v0) vanishes: tangent hyperplane through the origin");
  f.Q.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) f.Q[static_cast<std::size_t>(i)].push_back(total_derivative(f.grad[static_cast<std::size_t>(i)], j) / f.delta);

  auto om = [&](const Vec<S>& a, const Vec<S>& b) {
    return space.omega(f.lift(a, g.indep, dep, dim), f.lift(b, g.indep, dep, dim));
  };
  auto om0 = [&](const Vec<S>& b) { return space.omega(f.v0, f.lift(b, g.indep, dep, dim)); };

  // S_0 = tangent space.
  std::vector<Vec<S>> sub;
  for (int i = 0; i < m; ++i) {
    Vec<S> e(static_cast<std::size_t>(m), MultiJet<S>(S(0)));
    e[static_cast<std::size_t>(i)] = MultiJet<S>(S(1));
    sub.push_back(e);
  }
  f.v.assign(1, {});
  for (int k = 1; k <= m; ++k) {
    const std::string step = std::to_string(k);
    const std::size_t d = sub.size();
    if (k % 2 == 1) {
      // v_k spans the omega-kernel of S_{k-1}; omega(v_{k-1}, v_k) = 1.
      Vec<S> a;
      if (d == 1) {
        a = {MultiJet<S>(S(1))};
      } else {
        std::vector<Vec<S>> M(d, Vec<S>(d));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) M[i][j] = om(sub[i], sub[j]);
        a = null_vector(M, static_cast<int>(d), step);
      }
      auto w = combine(sub, a);
      const auto n = k == 1 ? om0(w) : om(f.v[static_cast<std::size_t>(k - 1)], w);
      require_step(n, step);
      f.v.push_back(scaled(w, MultiJet<S>(S(1)) / n));
      if (k == m) break;
      // S_k = {w in S_{k-1} : omega(v_{k-1}, w) = 0}.
      Vec<S> phi;
      for (const auto& b : sub) phi.push_back(k == 1 ? om0(b) : om(f.v[static_cast<std::size_t>(k - 1)], b));
      sub = kernel_of(sub, phi, step);
    } else {
      // S_k = {w in S_{k-1} : Q(v_{k-1}, w) = 0}; v_k in S_{k-1} with Q(v_k, S_k) = 0.
      Vec<S> phi;
      for (const auto& b : sub) phi.push_back(f.q(f.v[static_cast<std::size_t>(k - 1)], b));
      auto next = kernel_of(sub, phi, step);
      std::vector<Vec<S>> M;
      for (const auto& c : next) {
        Vec<S> row;
        for (const auto& b : sub) row.push_back(f.q(b, c));
        M.push_back(row);
      }
      auto w = combine(sub, null_vector(M, static_cast<int>(d), step));
      const auto n = f.q(f.v[static_cast<std::size_t>(k - 1)], w);
      require_step(n, step);
      f.v.push_back(scaled(w, MultiJet<S>(S(1)) / n));
      sub = next;
    }
  }
  return f;
}

template <class S>
InvariantSet<S> hypersurface_invariants(const SymplecticSpace& space, const GraphJet<S>& g) {
  const auto f = hypersurface_frame(space, g);
  InvariantSet<S> out;
  for (std::size_t i = 1; i < f.v.size(); ++i) out.add("I2_" + std::to_string(i), f.q(f.v[i], f.v[i]));
  for (std::size_t i = 1; i < f.v.size(); ++i) out.add_derivation("nabla" + std::to_string(i), Derivation<S>{f.v[i]});
  return out;
}

template <class S>
InvariantSet<S> hypersurface_invariants_r4(const SymplecticSpace& space, const GraphJet<S>& g) {
  if (space.dim() != 4) throw Error(ErrorCode::InvalidArgument, "expected a hypersurface in R^4");
  auto out = hypersurface_invariants(space, g);
  out.names = {"I2a", "I2b", "I2c"};
  return out;
}

template <class S>
std::vector<std::vector<S>> frame_omega_gram(const SymplecticSpace& space, const GraphJet<S>& g, const HyperFrame<S>& f) {
  std::vector<std::vector<S>> vecs{std::vector<S>()};
  for (const auto& x : f.v0) vecs[0].push_back(x.value());
  for (std::size_t i = 1; i < f.v.size(); ++i) {
    std::vector<S> a;
    for (const auto& x : f.lift(f.v[i], g.indep, g.dep[0], space.dim())) a.push_back(x.value());
    vecs.push_back(a);
  }
  std::vector<std::vector<S>> G(vecs.size(), std::vector<S>(vecs.size()));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs.size(); ++j) G[i][j] = space.omega(vecs[i], vecs[j]);
  return G;
}

template <class S>
std::vector<std::vector<S>> frame_q_gram(const HyperFrame<S>& f) {
  const std::size_t m = f.v.size() - 1;
  std::vector<std::vector<S>> G(m, std::vector<S>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) G[i][j] = f.q(f.v[i + 1], f.v[j + 1]).value();
  return G;
}

double defining_function_rescale_residual(const SymplecticSpace& space, const GraphJet<double>& g,
                                          const MultiJet<double>& fj) {
  const int dim = space.dim();
  const int m = g.nvars();
  const auto p = g.point();
  std::vector<MultiJet<double>> X;
  for (int i = 0; i < dim; ++i) X.push_back(MultiJet<double>::variable(dim, 2, i, p));
  std::vector<MultiJet<double>> indep;
  for (int i : g.indep) indep.push_back(X[static_cast<std::size_t>(i)]);
  const auto u = g.u[0].truncate(2).with_base(std::make_shared<const std::vector<double>>(g.base));
  const auto q = compose(u, indep) - X[static_cast<std::size_t>(g.dep[0])];
  const auto q2 = fj.truncate(2).with_base(std::make_shared<const std::vector<double>>(p)) * q;

  const auto f = hypersurface_frame(space, g.truncate(2));
  auto normalized_form = [&](const MultiJet<double>& h) {
    double dv0 = 0;
    for (int i = 0; i < dim; ++i) {
      std::vector<int> e(static_cast<std::size_t>(dim), 0);
      e[static_cast<std::size_t>(i)] = 1;
      dv0 += h.derivative(e) * p[static_cast<std::size_t>(i)];
    }
    std::vector<std::vector<double>> out(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
    std::vector<std::vector<double>> L;
    for (int i = 0; i < m; ++i) {
      TangentVector<double> e(static_cast<std::size_t>(m), MultiJet<double>(0.0));
      e[static_cast<std::size_t>(i)] = MultiJet<double>(1.0);
      std::vector<double> l;
      for (const auto& x : f.lift(e, g.indep, g.dep[0], dim)) l.push_back(x.value());
      L.push_back(l);
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double acc = 0;
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b) {
            std::vector<int> e(static_cast<std::size_t>(dim), 0);
            e[static_cast<std::size_t>(a)] += 1;
            e[static_cast<std::size_t>(b)] += 1;
            acc += L[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] * h.derivative(e) *
                   L[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
          }
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc / dv0;
      }
    return out;
  };
  const auto A = normalized_form(q);
  const auto B = normalized_form(q2);
  double diff = 0, scale = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      diff = std::max(diff, std::fabs(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      scale = std::max(scale, std::fabs(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  return scale > 0 ? diff / scale : diff;
}

#define SYMPINV_INSTANTIATE(S)                                                                                  \
  template struct HyperFrame<S>;                                                                                \
  template HyperFrame<S> hypersurface_frame(const SymplecticSpace&, const GraphJet<S>&);                        \
  template InvariantSet<S> hypersurface_invariants(const SymplecticSpace&, const GraphJet<S>&);                 \
  template InvariantSet<S> hypersurface_invariants_r4(const SymplecticSpace&, const GraphJet<S>&);              \
  template std::vector<std::vector<S>> frame_omega_gram(const SymplecticSpace&, const GraphJet<S>&,             \
                                                        const HyperFrame<S>&);                                  \
  template std::vector<std::vector<S>> frame_q_gram(const HyperFrame<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

}  // namespace sympinv
