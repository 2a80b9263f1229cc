#pragma once

// Scalar types accepted by the jet and invariant code:
//   double          - the working precision
//   Rational        - exact arithmetic for oracle cross-checks on polynomial input
//   Dual<S>         - first-order forward-mode numbers, used for Jacobian ranks in
//                     jet fibers and for infinitesimal (Lie-derivative) checks.
// All elementary functions go through the overload set in namespace `fn` so the
// same generic code compiles for every scalar.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sympinv/error.hpp"

namespace sympinv {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<Rational> : std::true_type {};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& x) { return std::fabs(x.convert_to<double>()); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x == 0; }

// Exact decimal literal ("0.125", "3e-2") to scalar.
template <class S>
S scalar_from_decimal(const std::string& text);

template <>
inline double scalar_from_decimal<double>(const std::string& text) {
  return std::stod(text);
}

Rational rational_from_decimal(const std::string& text);

template <>
inline Rational scalar_from_decimal<Rational>(const std::string& text) {
  return rational_from_decimal(text);
}

// ---------------------------------------------------------------------------
// Dual numbers: value + gradient. An empty gradient is an exact constant.

template <class S>
class Dual {
 public:
  Dual() : value_(0) {}
  Dual(const S& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  template <class A, class = std::enable_if_t<std::is_arithmetic_v<A> && !std::is_same_v<A, S>>>
  Dual(A v) : value_(S(v)) {}  // NOLINT(google-explicit-constructor)
  Dual(S v, std::vector<S> grad) : value_(std::move(v)), grad_(std::move(grad)) {}

  // Independent variable number `index` out of `count`.
  static Dual variable(const S& v, std::size_t index, std::size_t count) {
    std::vector<S> g(count, S(0));
    g[index] = S(1);
    return Dual(v, std::move(g));
  }

  const S& value() const { return value_; }
  const std::vector<S>& gradient() const { return grad_; }
  S partial(std::size_t i) const { return i < grad_.size() ? grad_[i] : S(0); }

  Dual operator-() const {
    Dual r(-value_);
    r.grad_.reserve(grad_.size());
    for (const auto& g : grad_) r.grad_.push_back(-g);
    return r;
  }

  Dual& operator+=(const Dual& o) {
    value_ += o.value_;
    axpy(S(1), o.grad_);
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value_ -= o.value_;
    axpy(S(-1), o.grad_);
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (auto& g : grad_) g *= o.value_;
    axpy(value_, o.grad_);
    value_ *= o.value_;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (is_zero(o.value_)) throw Error(ErrorCode::DivisionByZeroJet, "dual division by zero");
    const S inv = S(1) / o.value_;
    value_ *= inv;
    for (auto& g : grad_) g *= inv;
    axpy(-value_ * inv, o.grad_);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

  // Chain rule: f(value) with derivative df.
  Dual chain(const S& f, const S& df) const {
    Dual r(f);
    r.grad_.reserve(grad_.size());
    for (const auto& g : grad_) r.grad_.push_back(df * g);
    return r;
  }

 private:
  void axpy(const S& a, const std::vector<S>& g) {
    if (g.size() > grad_.size()) grad_.resize(g.size(), S(0));
    for (std::size_t i = 0; i < g.size(); ++i) grad_[i] += a * g[i];
  }

  S value_;
  std::vector<S> grad_;
};

template <class S>
struct is_exact_scalar<Dual<S>> : is_exact_scalar<S> {};

template <class S>
double to_double(const Dual<S>& x) {
  return to_double(x.value());
}
template <class S>
double magnitude(const Dual<S>& x) {
  return magnitude(x.value());
}
template <class S>
bool is_zero(const Dual<S>& x) {
  if (!is_zero(x.value())) return false;
  return std::all_of(x.gradient().begin(), x.gradient().end(), [](const S& g) { return is_zero(g); });
}

// ---------------------------------------------------------------------------
// Elementary functions. The Rational versions succeed only where the result is
// rational (exp(0), log(1), perfect squares and cubes, ...).

namespace fn {

inline double exp(double x) { return std::exp(x); }
inline double log(double x) {
  if (!(x > 0)) throw Error(ErrorCode::DomainError, "log of non-positive value");
  return std::log(x);
}
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double sqrt(double x) {
  if (x < 0) throw Error(ErrorCode::DomainError, "sqrt of negative value");
  return std::sqrt(x);
}
inline double cbrt(double x) { return std::cbrt(x); }

Rational exp(const Rational& x);
Rational log(const Rational& x);
Rational sin(const Rational& x);
Rational cos(const Rational& x);
Rational sqrt(const Rational& x);
Rational cbrt(const Rational& x);

template <class S>
Dual<S> exp(const Dual<S>& x) {
  const S e = fn::exp(x.value());
  return x.chain(e, e);
}
template <class S>
Dual<S> log(const Dual<S>& x) {
  return x.chain(fn::log(x.value()), S(1) / x.value());
}
template <class S>
Dual<S> sin(const Dual<S>& x) {
  return x.chain(fn::sin(x.value()), fn::cos(x.value()));
}
template <class S>
Dual<S> cos(const Dual<S>& x) {
  return x.chain(fn::cos(x.value()), -fn::sin(x.value()));
}
template <class S>
Dual<S> sqrt(const Dual<S>& x) {
  const S r = fn::sqrt(x.value());
  if (is_zero(r)) throw Error(ErrorCode::DomainError, "sqrt not differentiable at 0");
  return x.chain(r, S(1) / (S(2) * r));
}
template <class S>
Dual<S> cbrt(const Dual<S>& x) {
  const S r = fn::cbrt(x.value());
  if (is_zero(r)) throw Error(ErrorCode::DomainError, "cbrt not differentiable at 0");
  return x.chain(r, S(1) / (S(3) * r * r));
}

}  // namespace fn

// Integer power by repeated squaring; negative exponents invert first.
template <class T>
T ipow(const T& base, int e) {
  if (e < 0) return ipow(T(1) / base, -e);
  T result(1);
  T b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

}  // namespace sympinv
