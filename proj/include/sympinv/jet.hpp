#pragma once

// Truncated multivariate Taylor series ("jets").
//
// A MultiJet<S> in p variables of order K stores c_alpha = d^alpha f / alpha!
// for every multi-index |alpha| <= K, in graded order (all degree-0 entries,
// then degree 1, ...; lexicographically descending inside a degree). Because
// the ordering does not depend on K, truncation is a prefix and jets of
// different orders combine by truncating to the smaller order.
//
// A jet without a layout is a constant: it behaves like a scalar of unbounded
// order, which keeps generic formulas such as `T(1) - x` valid.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "sympinv/error.hpp"
#include "sympinv/scalar.hpp"

namespace sympinv {

using MultiIndex = std::vector<int>;

class JetLayout {
 public:
  struct Product {
    std::uint32_t lhs, rhs, out;
  };

  static std::shared_ptr<const JetLayout> get(int nvars, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  std::size_t size() const { return degree_.size(); }

  std::span<const int> exponents(std::size_t k) const {
    return {exps_.data() + k * static_cast<std::size_t>(nvars_), static_cast<std::size_t>(nvars_)};
  }
  int degree(std::size_t k) const { return degree_[k]; }
  // Number of entries of total degree <= d.
  std::size_t count_through(int d) const;
  // Index of alpha, or npos when |alpha| > order.
  std::size_t find(std::span<const int> alpha) const;
  // Index of (alpha_k + e_var); requires degree(k) < order.
  std::size_t raise(int var, std::size_t k) const { return raise_[static_cast<std::size_t>(var) * size() + k]; }
  // alpha! for entry k.
  double factorial(std::size_t k) const { return factorial_[k]; }
  long long factorial_int(std::size_t k) const { return factorial_int_[k]; }
  // All (lhs, rhs) pairs with deg(lhs)+deg(rhs) <= order, sorted by `out`.
  const std::vector<Product>& products() const { return products_; }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  JetLayout(int nvars, int order);

 private:
  int nvars_;
  int order_;
  std::vector<int> exps_;
  std::vector<int> degree_;
  std::vector<std::size_t> raise_;
  std::vector<double> factorial_;
  std::vector<long long> factorial_int_;
  std::vector<Product> products_;
  std::vector<std::size_t> degree_offsets_;
};

using LayoutPtr = std::shared_ptr<const JetLayout>;

inline constexpr int kConstantOrder = std::numeric_limits<int>::max();

template <class S>
class MultiJet {
 public:
  using Scalar = S;
  using BasePtr = std::shared_ptr<const std::vector<S>>;

  MultiJet() : c_{S(0)} {}
  MultiJet(const S& v) : c_{v} {}  // NOLINT(google-explicit-constructor)
  template <class A, class = std::enable_if_t<std::is_arithmetic_v<A> && !std::is_same_v<A, S>>>
  MultiJet(A v) : c_{S(v)} {}  // NOLINT(google-explicit-constructor)

  MultiJet(LayoutPtr layout, std::vector<S> coeffs, BasePtr base = nullptr)
      : layout_(std::move(layout)), c_(std::move(coeffs)), base_(std::move(base)) {
    if (layout_ && c_.size() != layout_->size())
      throw Error(ErrorCode::InvalidArgument, "coefficient count does not match jet layout");
  }

  static MultiJet zero(int nvars, int order, BasePtr base = nullptr) {
    auto layout = JetLayout::get(nvars, order);
    return MultiJet(layout, std::vector<S>(layout->size(), S(0)), std::move(base));
  }

  // The coordinate function x_var expanded at `base`.
  static MultiJet variable(int nvars, int order, int var, const std::vector<S>& base) {
    auto b = std::make_shared<const std::vector<S>>(base);
    MultiJet j = zero(nvars, order, b);
    j.c_[0] = base.at(static_cast<std::size_t>(var));
    if (order >= 1) {
      MultiIndex e(static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(var)] = 1;
      j.c_[j.layout_->find(e)] = S(1);
    }
    return j;
  }

  // Univariate jet from c_0..c_K at t0.
  static MultiJet taylor(std::vector<S> coeffs, const S& t0) {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    const int order = static_cast<int>(coeffs.size()) - 1;
    return MultiJet(JetLayout::get(1, order), std::move(coeffs),
                    std::make_shared<const std::vector<S>>(std::vector<S>{t0}));
  }

  bool is_constant() const { return !layout_; }
  int nvars() const { return layout_ ? layout_->nvars() : 0; }
  int order() const { return layout_ ? layout_->order() : kConstantOrder; }
  const LayoutPtr& layout() const { return layout_; }
  const BasePtr& base() const { return base_; }
  std::vector<S> basepoint() const { return base_ ? *base_ : std::vector<S>{}; }
  MultiJet with_base(BasePtr base) const {
    MultiJet r = *this;
    r.base_ = std::move(base);
    return r;
  }

  const S& value() const { return c_[0]; }
  std::size_t size() const { return c_.size(); }
  const S& operator[](std::size_t k) const { return c_[k]; }
  S& operator[](std::size_t k) { return c_[k]; }
  const std::vector<S>& coeffs() const { return c_; }

  S coeff(std::span<const int> alpha) const {
    if (!layout_) {
      for (int a : alpha)
        if (a != 0) return S(0);
      return c_[0];
    }
    const std::size_t k = layout_->find(alpha);
    return k == JetLayout::npos ? S(0) : c_[k];
  }
  S coeff(std::initializer_list<int> alpha) const { return coeff(std::span<const int>(alpha.begin(), alpha.size())); }

  // Partial derivative d^alpha f at the basepoint.
  S derivative(std::span<const int> alpha) const {
    long long f = 1;
    for (int a : alpha)
      for (int i = 2; i <= a; ++i) f *= i;
    return coeff(alpha) * S(f);
  }

  MultiJet truncate(int order) const {
    if (!layout_ || order >= layout_->order()) return *this;
    if (order < 0) throw Error(ErrorCode::OrderExhausted, "negative truncation order");
    auto layout = JetLayout::get(layout_->nvars(), order);
    return MultiJet(layout, std::vector<S>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(layout->size())), base_);
  }

  // Jet minus its constant term.
  MultiJet nilpotent() const {
    MultiJet r = *this;
    r.c_[0] = S(0);
    return r;
  }

  MultiJet operator-() const {
    MultiJet r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  MultiJet& operator+=(const MultiJet& o) { return *this = add(*this, o, S(1)); }
  MultiJet& operator-=(const MultiJet& o) { return *this = add(*this, o, S(-1)); }
  MultiJet& operator*=(const MultiJet& o) { return *this = mul(*this, o); }
  MultiJet& operator/=(const MultiJet& o) { return *this = div(*this, o); }

  friend MultiJet operator+(const MultiJet& a, const MultiJet& b) { return add(a, b, S(1)); }
  friend MultiJet operator-(const MultiJet& a, const MultiJet& b) { return add(a, b, S(-1)); }
  friend MultiJet operator*(const MultiJet& a, const MultiJet& b) { return mul(a, b); }
  friend MultiJet operator/(const MultiJet& a, const MultiJet& b) { return div(a, b); }

  // Common (nvars, order) of two operands; null for two constants.
  static LayoutPtr common_layout(const MultiJet& a, const MultiJet& b) {
    if (!a.layout_) return b.layout_;
    if (!b.layout_) return a.layout_;
    if (a.layout_->nvars() != b.layout_->nvars())
      throw Error(ErrorCode::InvalidArgument, "jets in different numbers of variables");
    return a.layout_->order() <= b.layout_->order() ? a.layout_ : b.layout_;
  }

  static MultiJet scale(const MultiJet& a, const S& s) {
    MultiJet r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }

 private:
  const BasePtr& any_base(const MultiJet& o) const { return base_ ? base_ : o.base_; }

  static MultiJet add(const MultiJet& a, const MultiJet& b, const S& sign) {
    if (!a.layout_ && !b.layout_) return MultiJet(a.c_[0] + sign * b.c_[0]);
    LayoutPtr layout = common_layout(a, b);
    std::vector<S> out(layout->size(), S(0));
    const std::size_t na = a.layout_ ? layout->size() : 1;
    const std::size_t nb = b.layout_ ? layout->size() : 1;
    for (std::size_t k = 0; k < na; ++k) out[k] = a.c_[k];
    for (std::size_t k = 0; k < nb; ++k) out[k] += sign * b.c_[k];
    return MultiJet(std::move(layout), std::move(out), a.any_base(b));
  }

  static MultiJet mul(const MultiJet& a, const MultiJet& b) {
    if (!a.layout_ && !b.layout_) return MultiJet(a.c_[0] * b.c_[0]);
    if (!a.layout_) return scale(b, a.c_[0]);
    if (!b.layout_) return scale(a, b.c_[0]);
    LayoutPtr layout = common_layout(a, b);
    std::vector<S> out(layout->size(), S(0));
    for (const auto& p : layout->products()) out[p.out] += a.c_[p.lhs] * b.c_[p.rhs];
    return MultiJet(std::move(layout), std::move(out), a.any_base(b));
  }

  // b0 c_k = a_k - sum_{i != 0} b_i c_j over all (i, j) -> k; the graded order
  // guarantees c_j is known when it is needed.
  static MultiJet div(const MultiJet& a, const MultiJet& b) {
    check_divisor(b.c_[0]);
    if (!b.layout_) {
      MultiJet r = a;
      const S inv = S(1) / b.c_[0];
      for (auto& c : r.c_) c *= inv;
      return r;
    }
    LayoutPtr layout = common_layout(a, b);
    const S inv = S(1) / b.c_[0];
    std::vector<S> out(layout->size(), S(0));
    const std::size_t na = a.layout_ ? layout->size() : 1;
    for (std::size_t k = 0; k < na; ++k) out[k] = a.c_[k];
    const auto& prods = layout->products();
    std::size_t p = 0;
    for (std::size_t k = 0; k < layout->size(); ++k) {
      S acc = out[k];
      for (; p < prods.size() && prods[p].out == k; ++p)
        if (prods[p].lhs != 0) acc -= b.c_[prods[p].lhs] * out[prods[p].rhs];
      out[k] = acc * inv;
    }
    return MultiJet(std::move(layout), std::move(out), a.any_base(b));
  }

  static void check_divisor(const S& b0) {
    if constexpr (is_exact_scalar<S>::value) {
      if (is_zero(b0)) throw Error(ErrorCode::DivisionByZeroJet, "divisor has zero constant term");
    } else {
      if (!(magnitude(b0) > 1e-300)) throw Error(ErrorCode::DivisionByZeroJet, "divisor has vanishing constant term");
    }
  }

  LayoutPtr layout_;
  std::vector<S> c_;
  BasePtr base_;
};

template <class S>
using TaylorJet = MultiJet<S>;

template <class S>
struct is_exact_scalar<MultiJet<S>> : is_exact_scalar<S> {};

template <class S>
double magnitude(const MultiJet<S>& j) {
  return magnitude(j.value());
}
template <class S>
double to_double(const MultiJet<S>& j) {
  return to_double(j.value());
}
template <class S>
bool is_zero(const MultiJet<S>& j) {
  for (const auto& c : j.coeffs())
    if (!is_zero(c)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Series-level operations.

// f(a) where taylor[k] = f^(k)(a_0)/k!; exact through the order of `a`.
template <class S>
MultiJet<S> apply_series(const MultiJet<S>& a, const std::vector<S>& taylor) {
  if (a.is_constant()) return MultiJet<S>(taylor.at(0));
  const int order = a.order();
  const MultiJet<S> h = a.nilpotent();
  MultiJet<S> result(taylor.at(static_cast<std::size_t>(order)));
  for (int k = order - 1; k >= 0; --k) result = result * h + MultiJet<S>(taylor[static_cast<std::size_t>(k)]);
  if (result.is_constant()) result = MultiJet<S>::zero(a.nvars(), order, a.base()) + result;
  return result.with_base(a.base());
}

// d/dx_var; the result has order K-1.
template <class S>
MultiJet<S> total_derivative(const MultiJet<S>& f, int var) {
  if (f.is_constant()) return MultiJet<S>(S(0));
  if (var < 0 || var >= f.nvars()) throw Error(ErrorCode::InvalidArgument, "derivative variable out of range");
  if (f.order() < 1) throw Error(ErrorCode::OrderExhausted, "total derivative of an order-0 jet");
  const auto& src = *f.layout();
  auto layout = JetLayout::get(f.nvars(), f.order() - 1);
  std::vector<S> out(layout->size(), S(0));
  for (std::size_t k = 0; k < layout->size(); ++k) {
    const int a = layout->exponents(k)[static_cast<std::size_t>(var)];
    out[k] = f[src.raise(var, k)] * S(a + 1);
  }
  return MultiJet<S>(std::move(layout), std::move(out), f.base());
}

// d^alpha f as a jet of order K-|alpha|.
template <class S>
MultiJet<S> partial(const MultiJet<S>& f, std::span<const int> alpha) {
  MultiJet<S> r = f;
  for (std::size_t v = 0; v < alpha.size(); ++v)
    for (int i = 0; i < alpha[v]; ++i) r = total_derivative(r, static_cast<int>(v));
  return r;
}

namespace detail {

template <class S>
void check_basepoint(const S& value, const S& expected) {
  if constexpr (is_exact_scalar<S>::value) {
    if (!is_zero(value - expected)) throw Error(ErrorCode::BasepointMismatch, "inner jet is not centred at the outer basepoint");
  } else {
    const double scale = std::max(1.0, magnitude(expected));
    if (magnitude(value - expected) > 1e-12 * scale)
      throw Error(ErrorCode::BasepointMismatch, "inner jet is not centred at the outer basepoint");
  }
}

// Horner evaluation of sum_alpha c_alpha prod delta_i^alpha_i, peeling one
// variable at a time. `idx` lists the outer entries still in play.
template <class S>
MultiJet<S> horner(const MultiJet<S>& outer, const std::vector<MultiJet<S>>& delta, int var,
                   const std::vector<std::size_t>& idx) {
  const auto& layout = *outer.layout();
  const int q = layout.nvars();
  if (var == q) {
    // All exponents consumed: exactly one entry remains.
    return MultiJet<S>(outer[idx.front()]);
  }
  int max_e = 0;
  for (auto k : idx) max_e = std::max(max_e, layout.exponents(k)[static_cast<std::size_t>(var)]);
  std::vector<std::vector<std::size_t>> by_exp(static_cast<std::size_t>(max_e) + 1);
  for (auto k : idx) by_exp[static_cast<std::size_t>(layout.exponents(k)[static_cast<std::size_t>(var)])].push_back(k);
  MultiJet<S> result(S(0));
  for (int e = max_e; e >= 0; --e) {
    result = result * delta[static_cast<std::size_t>(var)];
    if (!by_exp[static_cast<std::size_t>(e)].empty()) result = result + horner(outer, delta, var + 1, by_exp[static_cast<std::size_t>(e)]);
  }
  return result;
}

}  // namespace detail

// outer(inner_1, ..., inner_q): outer is a jet in q variables expanded at its
// basepoint b, each inner_i is a jet (in any p variables) with constant term b_i.
template <class S>
MultiJet<S> compose(const MultiJet<S>& outer, const std::vector<MultiJet<S>>& inner) {
  if (outer.is_constant()) return outer;
  const int q = outer.nvars();
  if (static_cast<int>(inner.size()) != q) throw Error(ErrorCode::InvalidArgument, "compose: inner count must equal outer nvars");
  const std::vector<S> b = outer.basepoint();
  int order = outer.order();
  LayoutPtr target;
  for (int i = 0; i < q; ++i) {
    const S expected = b.empty() ? S(0) : b[static_cast<std::size_t>(i)];
    detail::check_basepoint(inner[static_cast<std::size_t>(i)].value(), expected);
    if (!inner[static_cast<std::size_t>(i)].is_constant()) {
      order = std::min(order, inner[static_cast<std::size_t>(i)].order());
      target = inner[static_cast<std::size_t>(i)].layout();
    }
  }
  if (!target) return MultiJet<S>(outer.value());
  const MultiJet<S> trimmed = outer.truncate(order);
  std::vector<MultiJet<S>> delta;
  delta.reserve(inner.size());
  for (const auto& in : inner) delta.push_back(in.nilpotent().truncate(order));
  std::vector<std::size_t> idx(trimmed.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  MultiJet<S> r = detail::horner(trimmed, delta, 0, idx);
  if (r.is_constant()) r = MultiJet<S>::zero(target->nvars(), order) + r;
  // The result lives where the inner jets live.
  typename MultiJet<S>::BasePtr base;
  for (const auto& in : inner)
    if (in.base()) base = in.base();
  return r.truncate(order).with_base(base);
}

// Univariate composition.
template <class S>
MultiJet<S> compose(const MultiJet<S>& outer, const MultiJet<S>& inner) {
  return compose(outer, std::vector<MultiJet<S>>{inner});
}

// Inverse of a map given by p jets in p variables: returns p jets in p
// variables expanded at s(x0), with constant terms x0, such that
// compose(s_i, inverse) = identity through the common order.
template <class S>
std::vector<MultiJet<S>> invert_series(const std::vector<MultiJet<S>>& s);

// Elementary functions -------------------------------------------------------

template <class S>
MultiJet<S> exp(const MultiJet<S>& a) {
  const int K = a.is_constant() ? 0 : a.order();
  std::vector<S> t(static_cast<std::size_t>(K) + 1);
  const S e = fn::exp(a.value());
  S fact(1);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) fact *= S(k);
    t[static_cast<std::size_t>(k)] = e / fact;
  }
  return apply_series(a, t);
}

template <class S>
MultiJet<S> log(const MultiJet<S>& a) {
  const S a0 = a.value();
  if constexpr (is_exact_scalar<S>::value) {
    if (!(to_double(a0) > 0)) throw Error(ErrorCode::DomainError, "log of non-positive constant term");
  } else {
    if (!(to_double(a0) > 0)) throw Error(ErrorCode::DomainError, "log of non-positive constant term");
  }
  const int K = a.is_constant() ? 0 : a.order();
  std::vector<S> t(static_cast<std::size_t>(K) + 1);
  t[0] = fn::log(a0);
  S p(1);
  for (int k = 1; k <= K; ++k) {
    p *= a0;
    const S sign = (k % 2 == 1) ? S(1) : S(-1);
    t[static_cast<std::size_t>(k)] = sign / (S(k) * p);
  }
  return apply_series(a, t);
}

template <class S>
MultiJet<S> sin(const MultiJet<S>& a) {
  const int K = a.is_constant() ? 0 : a.order();
  const S s = fn::sin(a.value()), c = fn::cos(a.value());
  const S cycle[4] = {s, c, -s, -c};
  std::vector<S> t(static_cast<std::size_t>(K) + 1);
  S fact(1);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) fact *= S(k);
    t[static_cast<std::size_t>(k)] = cycle[k % 4] / fact;
  }
  return apply_series(a, t);
}

template <class S>
MultiJet<S> cos(const MultiJet<S>& a) {
  const int K = a.is_constant() ? 0 : a.order();
  const S s = fn::sin(a.value()), c = fn::cos(a.value());
  const S cycle[4] = {c, -s, -c, s};
  std::vector<S> t(static_cast<std::size_t>(K) + 1);
  S fact(1);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) fact *= S(k);
    t[static_cast<std::size_t>(k)] = cycle[k % 4] / fact;
  }
  return apply_series(a, t);
}

// a^(num/den) for den in {1, 2, 3}. Integer powers are exact everywhere; root
// powers need a constant term in the domain of the root (nonzero, and positive
// for square roots).
template <class S>
MultiJet<S> pow(const MultiJet<S>& a, int num, int den = 1) {
  if (den <= 0) throw Error(ErrorCode::DomainError, "non-positive exponent denominator");
  if (den == 1) return ipow(a, num);
  if (den != 2 && den != 3) throw Error(ErrorCode::DomainError, "only exponent denominators 1, 2, 3 are supported");
  const S a0 = a.value();
  if (is_zero(a0)) throw Error(ErrorCode::DomainError, "fractional power of a jet with zero constant term");
  if (den == 2 && to_double(a0) < 0) throw Error(ErrorCode::DomainError, "square root of a negative constant term");
  const S root = den == 2 ? fn::sqrt(a0) : fn::cbrt(a0);
  const S a0r = ipow(root, num);
  const int K = a.is_constant() ? 0 : a.order();
  std::vector<S> t(static_cast<std::size_t>(K) + 1);
  const S r = S(num) / S(den);
  S binom(1), a0k(1);
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      binom = binom * (r - S(k - 1)) / S(k);
      a0k *= a0;
    }
    t[static_cast<std::size_t>(k)] = binom * a0r / a0k;
  }
  return apply_series(a, t);
}

template <class S>
MultiJet<S> sqrt(const MultiJet<S>& a) {
  return pow(a, 1, 2);
}
template <class S>
MultiJet<S> cbrt(const MultiJet<S>& a) {
  return pow(a, 1, 3);
}

namespace fn {
template <class S>
MultiJet<S> exp(const MultiJet<S>& a) {
  return sympinv::exp(a);
}
template <class S>
MultiJet<S> log(const MultiJet<S>& a) {
  return sympinv::log(a);
}
template <class S>
MultiJet<S> sin(const MultiJet<S>& a) {
  return sympinv::sin(a);
}
template <class S>
MultiJet<S> cos(const MultiJet<S>& a) {
  return sympinv::cos(a);
}
template <class S>
MultiJet<S> sqrt(const MultiJet<S>& a) {
  return sympinv::sqrt(a);
}
template <class S>
MultiJet<S> cbrt(const MultiJet<S>& a) {
  return sympinv::cbrt(a);
}
}  // namespace fn

// ---------------------------------------------------------------------------
// Small dense linear algebra over any field-like scalar (pivoting by magnitude).

template <class T>
struct LinearSolve {
  std::vector<std::vector<T>> inverse;
  T determinant;
};

// Gauss-Jordan inverse; throws SingularLinearPart if a pivot vanishes.
template <class T>
LinearSolve<T> invert_matrix(std::vector<std::vector<T>> m, double rel_tol = 1e-12) {
  const std::size_t n = m.size();
  std::vector<std::vector<T>> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  double scale = 1.0;
  for (const auto& row : m) {
    double norm = 0;
    for (const auto& v : row) norm = std::max(norm, magnitude(v));
    scale *= std::max(norm, 1e-300);
  }
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (magnitude(m[r][col]) > magnitude(m[piv][col])) piv = r;
    if constexpr (is_exact_scalar<T>::value) {
      if (is_zero(m[piv][col])) throw Error(ErrorCode::SingularLinearPart, "singular linear part");
    } else {
      if (!(magnitude(m[piv][col]) > 0)) throw Error(ErrorCode::SingularLinearPart, "singular linear part");
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    det = det * m[col][col];
    const T p = T(1) / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] = m[col][c] * p;
      inv[col][c] = inv[col][c] * p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = m[r][col];
      if (is_zero(f)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= f * m[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  if constexpr (!is_exact_scalar<T>::value) {
    if (magnitude(det) <= rel_tol * scale) throw Error(ErrorCode::SingularLinearPart, "linear part is numerically singular");
  }
  return {std::move(inv), det};
}

template <class S>
std::vector<MultiJet<S>> invert_series(const std::vector<MultiJet<S>>& s) {
  const std::size_t p = s.size();
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "invert_series of an empty map");
  int order = kConstantOrder;
  for (const auto& c : s) {
    if (c.is_constant() || c.nvars() != static_cast<int>(p))
      throw Error(ErrorCode::InvalidArgument, "invert_series needs p jets in p variables");
    order = std::min(order, c.order());
  }
  std::vector<S> x0 = s[0].basepoint();
  if (x0.empty()) x0.assign(p, S(0));
  const auto& layout = *JetLayout::get(static_cast<int>(p), order);
  // Linear part L[i][j] = d s_i / d x_j.
  std::vector<std::vector<S>> L(p, std::vector<S>(p, S(0)));
  MultiIndex e(p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    e.assign(p, 0);
    e[j] = 1;
    for (std::size_t i = 0; i < p; ++i) L[i][j] = s[i].coeff(e);
  }
  const auto Linv = invert_matrix(L).inverse;
  std::vector<S> y0(p);
  for (std::size_t i = 0; i < p; ++i) y0[i] = s[i].value();
  // Nonlinear remainder of s at x0.
  std::vector<MultiJet<S>> nonlinear;
  for (std::size_t i = 0; i < p; ++i) {
    MultiJet<S> t = s[i].truncate(order);
    for (std::size_t k = 0; k < layout.size() && layout.degree(k) <= 1; ++k) t[k] = S(0);
    nonlinear.push_back(t);
  }
  // delta_i = y_i - y0_i as jets in y.
  std::vector<MultiJet<S>> delta;
  for (std::size_t i = 0; i < p; ++i)
    delta.push_back(MultiJet<S>::variable(static_cast<int>(p), order, static_cast<int>(i), y0).nilpotent());
  auto y_base = delta[0].base();
  // rho = L^{-1} (delta - N(x0 + rho)); each sweep fixes one more order.
  std::vector<MultiJet<S>> rho(p);
  for (std::size_t i = 0; i < p; ++i) {
    MultiJet<S> acc = MultiJet<S>::zero(static_cast<int>(p), order, y_base);
    for (std::size_t j = 0; j < p; ++j) acc += delta[j] * Linv[i][j];
    rho[i] = acc;
  }
  for (int sweep = 2; sweep <= order; ++sweep) {
    std::vector<MultiJet<S>> point(p);
    for (std::size_t i = 0; i < p; ++i) point[i] = rho[i] + MultiJet<S>(x0[i]);
    std::vector<MultiJet<S>> rhs(p);
    for (std::size_t i = 0; i < p; ++i) rhs[i] = delta[i] - compose(nonlinear[i], point);
    for (std::size_t i = 0; i < p; ++i) {
      MultiJet<S> acc = MultiJet<S>::zero(static_cast<int>(p), order, y_base);
      for (std::size_t j = 0; j < p; ++j) acc += rhs[j] * Linv[i][j];
      rho[i] = acc;
    }
  }
  std::vector<MultiJet<S>> out(p);
  for (std::size_t i = 0; i < p; ++i) out[i] = (rho[i] + MultiJet<S>(x0[i])).with_base(y_base);
  return out;
}

}  // namespace sympinv
