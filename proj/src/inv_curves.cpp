#include "sympinv/inv_curves.hpp"

#include <map>
#include <mutex>

namespace sympinv {

namespace {

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// B_{j,i} = sum_{m=1}^{j-i+1} C(j-1, m-1) k_m B_{j-m,i-1}.
Polynomial<Rational> build_bell(int j, int i, int nvars, std::map<std::pair<int, int>, Polynomial<Rational>>& memo) {
  if (j == 0 && i == 0) return Polynomial<Rational>::constant(nvars, Rational(1));
  if (j == 0 || i == 0) return Polynomial<Rational>(nvars);
  auto key = std::make_pair(j, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Polynomial<Rational> acc(nvars);
  for (int m = 1; m <= j - i + 1; ++m)
    acc = acc + binomial(j - 1, m - 1) * (Polynomial<Rational>::variable(nvars, m - 1) * build_bell(j - m, i - 1, nvars, memo));
  memo[key] = acc;
  return acc;
}

constexpr int kMaxBell = 16;

template <class S>
S scalar_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>)
    return r;
  else
    return S(to_double(r));
}

template <class S>
MultiJet<S> eval_bell(const Polynomial<Rational>& p, const std::vector<MultiJet<S>>& k) {
  MultiJet<S> acc(S(0));
  for (const auto& [mono, c] : p.terms()) {
    MultiJet<S> term(scalar_from_rational<S>(c));
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) term = term * ipow(k[i], mono[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace

const Polynomial<Rational>& bell_polynomial(int j, int i) {
  if (j < 0 || i < 0 || j > kMaxBell || i > j) throw Error(ErrorCode::InvalidArgument, "Bell polynomial index out of range");
  static std::mutex mu;
  static std::map<std::pair<int, int>, Polynomial<Rational>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(j, i);
  auto it = table.find(key);
  if (it == table.end()) {
    std::map<std::pair<int, int>, Polynomial<Rational>> memo;
    it = table.emplace(key, build_bell(j, i, kMaxBell, memo)).first;
  }
  return it->second;
}

template <class S>
CurveFrame<S> curve_frame(const SymplecticSpace& space, const CurveJet<S>& c, int m) {
  if (static_cast<int>(c.size()) != space.dim()) throw Error(ErrorCode::InvalidArgument, "curve has wrong dimension");
  int order = kConstantOrder;
  for (const auto& x : c) order = std::min(order, x.order());
  if (order < m || m < 1) throw Error(ErrorCode::OrderExhausted, "curve jet order too low for the frame");

  CurveFrame<S> f;
  f.v.push_back(c);
  std::vector<std::vector<MultiJet<S>>> w{c};
  for (int j = 1; j <= m; ++j) {
    std::vector<MultiJet<S>> d;
    for (const auto& x : w.back()) d.push_back(total_derivative(x, 0));
    w.push_back(d);
  }
  f.delta = space.omega(c, w[1]);
  require_nonzero(f.delta.value(), ErrorCode::DegenerateJet, "omega(c, c') vanishes: tangent line through the origin");
  f.k = {MultiJet<S>(S(0)), f.delta};
  const auto& v0 = c;
  std::vector<MultiJet<S>> v1;
  for (const auto& x : w[1]) v1.push_back(x / f.delta);
  f.v.push_back(v1);

  for (int j = 2; j <= m; ++j) {
    std::vector<MultiJet<S>> kk(f.k.begin() + 1, f.k.end());
    kk.resize(static_cast<std::size_t>(kMaxBell), MultiJet<S>(S(0)));
    std::vector<MultiJet<S>> rest = w[static_cast<std::size_t>(j)];
    for (int i = 2; i < j; ++i) {
      const auto b = eval_bell(bell_polynomial(j, i), kk);
      for (std::size_t a = 0; a < rest.size(); ++a) rest[a] = rest[a] - b * f.v[static_cast<std::size_t>(i)][a];
    }
    // omega(v0, v1) = 1, so omega(v0, v_j) = 0 fixes k_j directly.
    const auto kj = space.omega(v0, rest);
    f.k.push_back(kj);
    const auto scale = ipow(f.delta, j);
    std::vector<MultiJet<S>> vj;
    for (std::size_t a = 0; a < rest.size(); ++a) vj.push_back((rest[a] - kj * v1[a]) / scale);
    f.v.push_back(vj);
  }
  return f;
}

namespace {

template <class S>
Derivation<S> curve_derivation(const MultiJet<S>& delta) {
  return Derivation<S>{{MultiJet<S>(S(1)) / delta}};
}

}  // namespace

template <class S>
InvariantSet<S> curve_invariants(const SymplecticSpace& space, const CurveJet<S>& c) {
  const int m = space.dim();
  const auto f = curve_frame(space, c, m);
  InvariantSet<S> out;
  for (int j = 2; j <= m; ++j)
    out.add("I" + std::to_string(j), space.omega(f.v[static_cast<std::size_t>(j - 1)], f.v[static_cast<std::size_t>(j)]));
  out.add_derivation("nabla", curve_derivation(f.delta));
  return out;
}

template <class S>
InvariantSet<S> curve_invariants_n1(const GraphJet<S>& g) {
  if (g.ambient_dim != 2 || g.nvars() != 1) throw Error(ErrorCode::InvalidArgument, "expected a plane curve y = y(x)");
  if (g.order() < 2) throw Error(ErrorCode::OrderExhausted, "I2 needs a 2-jet");
  const auto x = g.coordinates(g.order())[0];
  const auto& y = g.u[0];
  const auto y1 = total_derivative(y, 0);
  const auto y2 = total_derivative(y1, 0);
  const auto delta = x * y1 - y;
  require_nonzero(delta.value(), ErrorCode::DegenerateJet, "x y1 - y vanishes: tangent line through the origin");
  InvariantSet<S> out;
  out.add("I2", y2 / (delta * delta * delta));
  out.add_derivation("nabla", curve_derivation(delta));
  return out;
}

template <class S>
InvariantSet<S> curve_invariants_n2(const SymplecticSpace& space, const CurveJet<S>& c) {
  if (space.dim() != 4) throw Error(ErrorCode::InvalidArgument, "expected a curve in R^4");
  const auto f = curve_frame(space, c, 4);
  auto w = [&](int i, int j) { return space.omega(f.v[static_cast<std::size_t>(i)], f.v[static_cast<std::size_t>(j)]); };
  InvariantSet<S> out;
  out.add("I2", w(1, 2));
  out.add("I3a", w(1, 3));
  out.add("I3b", w(2, 3));
  out.add("I4a", w(1, 4));
  out.add("I4b", w(2, 4));
  out.add("I4c", w(3, 4));
  out.add_derivation("nabla", curve_derivation(f.delta));
  return out;
}

#define SYMPINV_INSTANTIATE(S)                                                                   \
  template CurveFrame<S> curve_frame(const SymplecticSpace&, const CurveJet<S>&, int);           \
  template InvariantSet<S> curve_invariants(const SymplecticSpace&, const CurveJet<S>&);         \
  template InvariantSet<S> curve_invariants_n1(const GraphJet<S>&);                              \
  template InvariantSet<S> curve_invariants_n2(const SymplecticSpace&, const CurveJet<S>&);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)
SYMPINV_INSTANTIATE(Dual<double>)

}  // namespace sympinv
