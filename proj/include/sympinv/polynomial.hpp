#pragma once

#include <map>
#include <string>
#include <vector>

#include "sympinv/error.hpp"
#include "sympinv/scalar.hpp"

namespace sympinv {

// Sparse polynomial in a fixed number of variables.
template <class S>
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const S& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, S(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Monomial, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const S& c) {
    if (static_cast<int>(m.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "monomial arity mismatch");
    S& slot = terms_[m];
    slot += c;
    if (sympinv::is_zero(slot)) terms_.erase(m);
  }

  int degree() const { return weighted_degree(std::vector<int>(static_cast<std::size_t>(nvars_), 1)); }
  int weighted_degree(const std::vector<int>& w) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int dm = 0;
      for (std::size_t i = 0; i < m.size(); ++i) dm += w[i] * m[i];
      d = std::max(d, dm);
    }
    return d;
  }

  Polynomial diff(int i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      const int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      Monomial mm = m;
      --mm[static_cast<std::size_t>(i)];
      r.add_term(mm, c * S(e));
    }
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Polynomial operator*(const S& s, Polynomial a) {
    Polynomial r(a.nvars_);
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }
  Polynomial operator-() const { return S(-1) * *this; }

  template <class T>
  T eval(const std::vector<T>& x) const {
    T acc(S(0));
    for (const auto& [m, c] : terms_) {
      T term(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) term = term * ipow(x[i], m[i]);
      acc = acc + term;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += std::to_string(to_double(it->second));
      for (std::size_t i = 0; i < it->first.size(); ++i)
        if (it->first[i] > 0) out += "*" + names[i] + (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    }
    return out;
  }

 private:
  int nvars_;
  std::map<Monomial, S> terms_;
};

// Polynomial vector field: component i is the coefficient of d/dx_i.
template <class S>
using VectorField = std::vector<Polynomial<S>>;

// Standard commutator [X, Y] = X(Y) - Y(X) acting on coordinate functions.
template <class S>
VectorField<S> lie_bracket(const VectorField<S>& X, const VectorField<S>& Y) {
  const std::size_t n = X.size();
  VectorField<S> r(n, Polynomial<S>(static_cast<int>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i] = r[i] + X[j] * Y[i].diff(static_cast<int>(j)) - Y[j] * X[i].diff(static_cast<int>(j));
  return r;
}

}  // namespace sympinv
