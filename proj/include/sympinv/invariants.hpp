#pragma once

// Common containers for the invariant modules. Invariants are returned as jets
// along the submanifold (their constant term is the value at the basepoint),
// so invariant derivations can be applied to them directly.

#include <algorithm>
#include <string>
#include <vector>

#include "sympinv/graph.hpp"
#include "sympinv/jet.hpp"

namespace sympinv {

template <class S>
struct InvariantSet {
  std::vector<std::string> names;
  std::vector<MultiJet<S>> values;
  std::vector<std::string> derivation_names;
  std::vector<Derivation<S>> derivations;

  void add(std::string name, MultiJet<S> v) {
    names.push_back(std::move(name));
    values.push_back(std::move(v));
  }
  void add_derivation(std::string name, Derivation<S> d) {
    derivation_names.push_back(std::move(name));
    derivations.push_back(std::move(d));
  }
  const MultiJet<S>& operator[](const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::InvalidArgument, "no invariant named '" + name + "'");
    return values[static_cast<std::size_t>(it - names.begin())];
  }
  const Derivation<S>& derivation(const std::string& name) const {
    auto it = std::find(derivation_names.begin(), derivation_names.end(), name);
    if (it == derivation_names.end()) throw Error(ErrorCode::InvalidArgument, "no derivation named '" + name + "'");
    return derivations[static_cast<std::size_t>(it - derivation_names.begin())];
  }
};

// A relation sum_i term_i = 0, kept termwise so that the residual can be
// normalized by the largest term.
template <class S>
struct Residual {
  S sum = S(0);
  double scale = 0.0;

  void add(const S& term) {
    sum += term;
    scale = std::max(scale, magnitude(term));
  }
  double normalized() const { return scale > 0 ? magnitude(sum) / scale : magnitude(sum); }
  bool exact_zero() const { return is_zero(sum); }
};

// Evaluate a residual built from jets at the basepoint.
template <class S>
Residual<S> residual_of(const std::vector<MultiJet<S>>& terms) {
  Residual<S> r;
  for (const auto& t : terms) r.add(t.value());
  return r;
}

// The component with the largest normalized residual (for vector identities).
template <class S>
Residual<S> worst_component(const std::vector<std::vector<MultiJet<S>>>& components) {
  Residual<S> best;
  double score = -1;
  for (const auto& terms : components) {
    auto r = residual_of(terms);
    const double s = r.normalized() + (r.exact_zero() ? 0.0 : 1e-300);
    if (s > score) {
      best = r;
      score = s;
    }
  }
  return best;
}

// Raise DegenerateError(code) when |v| is (numerically) zero.
template <class S>
void require_nonzero(const S& v, ErrorCode code, const std::string& reason, double tol = 1e-12) {
  if constexpr (is_exact_scalar<S>::value) {
    if (is_zero(v)) throw DegenerateError(code, reason);
  } else {
    if (!(magnitude(v) > tol)) throw DegenerateError(code, reason);
  }
}

}  // namespace sympinv
