#pragma once

// Jets of submanifolds written as graphs u = f(x) over a subset of the ambient
// coordinates, jets of functions on the ambient space, horizontal derivations,
// and the prolonged group action on both.

#include <algorithm>
#include <random>
#include <vector>

#include "sympinv/group.hpp"
#include "sympinv/jet.hpp"

namespace sympinv {

template <class S>
struct GraphJet {
  int ambient_dim = 0;
  std::vector<int> indep;  // ambient indices of the independent coordinates
  std::vector<int> dep;    // ambient indices of the dependent coordinates
  std::vector<S> base;     // independent coordinates of the basepoint
  std::vector<MultiJet<S>> u;

  int nvars() const { return static_cast<int>(indep.size()); }
  int order() const {
    int k = kConstantOrder;
    for (const auto& j : u) k = std::min(k, j.order());
    return k;
  }

  // Coordinate jets x_i = base_i + t_i for the independent variables.
  std::vector<MultiJet<S>> coordinates(int order) const {
    std::vector<MultiJet<S>> out;
    for (int i = 0; i < nvars(); ++i) out.push_back(MultiJet<S>::variable(nvars(), order, i, base));
    return out;
  }

  // Jets of every ambient coordinate along the graph.
  std::vector<MultiJet<S>> ambient() const {
    std::vector<MultiJet<S>> out(static_cast<std::size_t>(ambient_dim));
    const auto x = coordinates(order());
    for (std::size_t i = 0; i < indep.size(); ++i) out[static_cast<std::size_t>(indep[i])] = x[i];
    for (std::size_t j = 0; j < dep.size(); ++j) out[static_cast<std::size_t>(dep[j])] = u[j];
    return out;
  }

  std::vector<S> point() const {
    std::vector<S> p(static_cast<std::size_t>(ambient_dim));
    for (std::size_t i = 0; i < indep.size(); ++i) p[static_cast<std::size_t>(indep[i])] = base[i];
    for (std::size_t j = 0; j < dep.size(); ++j) p[static_cast<std::size_t>(dep[j])] = u[j].value();
    return p;
  }

  GraphJet truncate(int k) const {
    GraphJet r = *this;
    for (auto& j : r.u) j = j.truncate(k);
    return r;
  }
};

// Re-express ambient coordinate jets (in any p parameters) as a graph over the
// coordinates `indep`. Throws GraphDegeneracy when those coordinates are not a
// valid chart of the image.
template <class S>
GraphJet<S> regraph(const std::vector<MultiJet<S>>& ambient, const std::vector<int>& indep, const std::vector<int>& dep) {
  std::vector<MultiJet<S>> chart;
  int order = kConstantOrder;
  for (const auto& j : ambient) order = std::min(order, j.order());
  for (int i : indep) chart.push_back(ambient[static_cast<std::size_t>(i)].truncate(order));
  std::vector<MultiJet<S>> inv;
  try {
    inv = invert_series(chart);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularLinearPart)
      throw DegenerateError(ErrorCode::GraphDegeneracy, "image is not a graph over the independent coordinates");
    throw;
  }
  GraphJet<S> out;
  out.ambient_dim = static_cast<int>(ambient.size());
  out.indep = indep;
  out.dep = dep;
  for (const auto& c : chart) out.base.push_back(c.value());
  for (int j : dep) out.u.push_back(compose(ambient[static_cast<std::size_t>(j)].truncate(order), inv));
  return out;
}

// Jet of the image g(N) of the graph N, at the image of the basepoint.
template <class S>
GraphJet<S> pushforward(const GraphJet<S>& jet, const GroupElement<S>& g) {
  if (g.dim() != jet.ambient_dim) throw Error(ErrorCode::InvalidArgument, "group and graph live in different spaces");
  return regraph(g.apply(jet.ambient()), jet.indep, jet.dep);
}

// Jet of a scalar function on the ambient space.
template <class S>
struct FunctionJet {
  std::vector<S> base;
  MultiJet<S> u;

  int nvars() const { return static_cast<int>(base.size()); }
  int order() const { return u.order(); }
  std::vector<MultiJet<S>> coordinates(int order) const {
    std::vector<MultiJet<S>> out;
    for (int i = 0; i < nvars(); ++i) out.push_back(MultiJet<S>::variable(nvars(), order, i, base));
    return out;
  }
  FunctionJet truncate(int k) const { return {base, u.truncate(k)}; }
};

// Jet of u o g^{-1} at g(a).
template <class S>
FunctionJet<S> pushforward(const FunctionJet<S>& f, const GroupElement<S>& g) {
  if (g.dim() != f.nvars()) throw Error(ErrorCode::InvalidArgument, "group and function live in different spaces");
  const std::vector<S> b = g.apply(f.base);
  std::vector<MultiJet<S>> y;
  for (int i = 0; i < f.nvars(); ++i) y.push_back(MultiJet<S>::variable(f.nvars(), f.order(), i, b));
  const auto x = g.inverse().apply(y);
  return {b, compose(f.u.with_base(std::make_shared<const std::vector<S>>(f.base)), x)};
}

// Horizontal vector field sum_i a_i D_i with jet coefficients.
template <class S>
struct Derivation {
  std::vector<MultiJet<S>> coeff;

  MultiJet<S> apply(const MultiJet<S>& f) const {
    MultiJet<S> acc(S(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) acc = acc + coeff[i] * total_derivative(f, static_cast<int>(i));
    return acc;
  }
  std::vector<S> values() const {
    std::vector<S> v;
    for (const auto& c : coeff) v.push_back(c.value());
    return v;
  }
  Derivation operator*(const MultiJet<S>& f) const {
    Derivation r = *this;
    for (auto& c : r.coeff) c = c * f;
    return r;
  }
  friend Derivation operator+(Derivation a, const Derivation& b) {
    for (std::size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] = a.coeff[i] + b.coeff[i];
    return a;
  }
};

// [a, b] as a horizontal field: sum_i (a(b_i) - b(a_i)) D_i.
template <class S>
Derivation<S> commutator(const Derivation<S>& a, const Derivation<S>& b) {
  Derivation<S> r;
  for (std::size_t i = 0; i < a.coeff.size(); ++i) r.coeff.push_back(a.apply(b.coeff[i]) - b.apply(a.coeff[i]));
  return r;
}

// Coefficients c with target = sum_k c_k basis_k (pointwise values).
template <class S>
std::vector<S> decompose(const Derivation<S>& target, const std::vector<Derivation<S>>& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<S>> m(n, std::vector<S>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = basis[k].coeff[i].value();
  const auto inv = invert_matrix(m).inverse;
  std::vector<S> c(n, S(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) c[k] += inv[k][i] * target.coeff[i].value();
  return c;
}

// Uniform in [-2, -0.5] u [0.5, 2].
inline double generic_coefficient(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::bernoulli_distribution sign(0.5);
  const double v = mag(rng);
  return sign(rng) ? v : -v;
}

inline MultiJet<double> random_jet(int nvars, int order, const std::vector<double>& base, std::mt19937_64& rng) {
  auto layout = JetLayout::get(nvars, order);
  std::vector<double> c(layout->size());
  for (auto& v : c) v = generic_coefficient(rng);
  return MultiJet<double>(layout, c, std::make_shared<const std::vector<double>>(base));
}

inline GraphJet<double> random_graph_jet(int ambient_dim, const std::vector<int>& indep, const std::vector<int>& dep,
                                         int order, std::mt19937_64& rng) {
  GraphJet<double> g;
  g.ambient_dim = ambient_dim;
  g.indep = indep;
  g.dep = dep;
  for (std::size_t i = 0; i < indep.size(); ++i) g.base.push_back(generic_coefficient(rng));
  for (std::size_t j = 0; j < dep.size(); ++j) g.u.push_back(random_jet(static_cast<int>(indep.size()), order, g.base, rng));
  return g;
}

inline FunctionJet<double> random_function_jet(int nvars, int order, std::mt19937_64& rng) {
  FunctionJet<double> f;
  for (int i = 0; i < nvars; ++i) f.base.push_back(generic_coefficient(rng));
  f.u = random_jet(nvars, order, f.base, rng);
  return f;
}

// Convert jet coefficients between scalar types (e.g. to Dual for Jacobians).
template <class To, class From, class F>
MultiJet<To> map_jet(const MultiJet<From>& j, F&& f) {
  std::vector<To> c;
  c.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) c.push_back(f(k, j[k]));
  std::shared_ptr<const std::vector<To>> base;
  if (j.base()) {
    std::vector<To> b;
    for (const auto& v : *j.base()) b.push_back(To(v));
    base = std::make_shared<const std::vector<To>>(b);
  }
  if (j.is_constant()) return MultiJet<To>(c[0]);
  return MultiJet<To>(j.layout(), c, base);
}

}  // namespace sympinv
