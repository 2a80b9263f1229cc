#pragma once

// Jets of user-defined functions and graphs given as expressions.

#include <map>
#include <string>
#include <vector>

#include "sympinv/expr.hpp"
#include "sympinv/geometry.hpp"

namespace sympinv {

// Jet at `base` of an expression in the named coordinates.
template <class S>
MultiJet<S> expression_jet(const Expr& e, const std::vector<std::string>& names, const std::vector<S>& base, int order) {
  std::map<std::string, MultiJet<S>> bind;
  const int p = static_cast<int>(names.size());
  for (int i = 0; i < p; ++i) bind[names[static_cast<std::size_t>(i)]] = MultiJet<S>::variable(p, order, i, base);
  auto j = eval_on_jets(e, bind);
  if (j.is_constant()) {
    auto z = MultiJet<S>::zero(p, order, std::make_shared<const std::vector<S>>(base));
    z[0] = j.value();
    return z;
  }
  return j;
}

template <class S>
FunctionJet<S> function_jet(const Expr& e, const std::vector<std::string>& names, const std::vector<S>& base, int order) {
  return {base, expression_jet(e, names, base, order)};
}

template <class S>
FunctionJet<S> function_jet(const std::string& src, const std::vector<std::string>& names, const std::vector<S>& base,
                            int order) {
  return function_jet(parse_expr(src, names), names, base, order);
}

// Graph jet of a geometry from one expression per dependent coordinate,
// written in the independent coordinate names.
template <class S>
GraphJet<S> graph_jet(const GeometryInfo& info, const std::vector<Expr>& dep, const std::vector<S>& base, int order) {
  if (dep.size() != info.dep.size()) throw Error(ErrorCode::InvalidArgument, "wrong number of dependent expressions");
  std::vector<std::string> names;
  for (int i : info.indep) names.push_back(info.names[static_cast<std::size_t>(i)]);
  GraphJet<S> g;
  g.ambient_dim = static_cast<int>(info.names.size());
  g.indep = info.indep;
  g.dep = info.dep;
  g.base = base;
  for (const auto& e : dep) g.u.push_back(expression_jet(e, names, base, order));
  return g;
}

template <class S>
GraphJet<S> graph_jet(const GeometryInfo& info, const std::vector<std::string>& dep, const std::vector<S>& base,
                      int order) {
  std::vector<std::string> names;
  for (int i : info.indep) names.push_back(info.names[static_cast<std::size_t>(i)]);
  std::vector<Expr> e;
  for (const auto& s : dep) e.push_back(parse_expr(s, names));
  return graph_jet(info, e, base, order);
}

}  // namespace sympinv
