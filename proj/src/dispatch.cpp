#include "sympinv/dispatch.hpp"

#include "sympinv/inv_contact.hpp"
#include "sympinv/inv_curves.hpp"
#include "sympinv/inv_extended.hpp"
#include "sympinv/inv_functions.hpp"
#include "sympinv/inv_hypersurf.hpp"
#include "sympinv/inv_surfaces.hpp"

namespace sympinv {

bool is_supported(const GeometryInfo& info, Flavor flavor) {
  const bool extended = flavor == Flavor::CSp || flavor == Flavor::ASp || flavor == Flavor::ACSp;
  switch (info.geometry) {
    case Geometry::Curve:
    case Geometry::Function: return flavor == Flavor::Sp || (extended && info.n == 1);
    case Geometry::Hypersurface: return flavor == Flavor::Sp && info.n >= 2;
    case Geometry::Surface: return flavor == Flavor::Sp;
    case Geometry::ContactCurve:
    case Geometry::ContactSurface:
    case Geometry::ContactFunction: return is_contact(flavor);
  }
  return false;
}

void require_supported(const GeometryInfo& info, Flavor flavor) {
  if (!is_supported(info, flavor))
    throw Error(ErrorCode::InvalidArgument, std::string("flavor '") + to_string(flavor) + "' is not available for " +
                                                to_string(info.geometry) + " with n = " + std::to_string(info.n));
}

template <class S>
InvariantSet<S> invariants_of(const GeometryInfo& info, Flavor flavor, const GraphJet<S>& g) {
  require_supported(info, flavor);
  switch (info.geometry) {
    case Geometry::Curve:
      switch (flavor) {
        case Flavor::CSp: return csp_curve_invariants(g);
        case Flavor::ASp: return asp_curve_invariants(g);
        case Flavor::ACSp: return acsp_curve_invariants(g);
        default:
          if (info.n == 1) return curve_invariants_n1(g);
          if (info.n == 2) return curve_invariants_n2(info.space, curve_from_graph(g));
          return curve_invariants(info.space, curve_from_graph(g));
      }
    case Geometry::Hypersurface:
      return info.n == 2 ? hypersurface_invariants_r4(info.space, g) : hypersurface_invariants(info.space, g);
    case Geometry::Surface: return surface_invariants(info.space, g);
    case Geometry::ContactCurve:
      return flavor == Flavor::Contact ? contact_curve_invariants_g(g) : contact_curve_invariants(g);
    case Geometry::ContactSurface:
      return flavor == Flavor::Contact ? contact_surface_invariants_g(g) : contact_surface_invariants(g);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string(to_string(info.geometry)) + " is described by a function jet");
}

template <class S>
InvariantSet<S> invariants_of(const GeometryInfo& info, Flavor flavor, const FunctionJet<S>& f) {
  require_supported(info, flavor);
  if (info.geometry == Geometry::ContactFunction) return contact_function_invariants(f);
  if (info.geometry != Geometry::Function)
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(info.geometry)) + " is described by a graph jet");
  switch (flavor) {
    case Flavor::CSp: return csp_function_invariants(f);
    case Flavor::ASp: return asp_function_invariants(f);
    case Flavor::ACSp: return acsp_function_invariants(f);
    default: return info.n == 1 ? function_invariants_n1(f) : function_generators(info.space, f);
  }
}

namespace {

// Words over m letters of length <= depth, shortest first, lexicographic.
std::vector<std::vector<std::size_t>> words(std::size_t m, int depth) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::vector<std::size_t>> level{{}};
  for (int L = 1; L <= depth && m > 0; ++L) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : level)
      for (std::size_t k = 0; k < m; ++k) {
        auto v = w;
        v.push_back(k);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace

template <class S>
std::vector<std::string> derived_names(const InvariantSet<S>& set, int depth) {
  std::vector<std::string> out;
  for (const auto& w : words(set.derivations.size(), depth))
    for (const auto& name : set.names) {
      std::string s = name;
      for (std::size_t k : w) s = set.derivation_names[k] + "(" + s + ")";
      out.push_back(s);
    }
  return out;
}

template <class S>
std::vector<MultiJet<S>> derived_jets(const InvariantSet<S>& set, int depth) {
  std::vector<MultiJet<S>> out;
  for (const auto& w : words(set.derivations.size(), depth))
    for (const auto& v : set.values) {
      MultiJet<S> j = v;
      for (std::size_t k : w) j = set.derivations[k].apply(j);
      out.push_back(j);
    }
  return out;
}

template <class S>
std::vector<S> derived_values(const InvariantSet<S>& set, int depth) {
  std::vector<S> out;
  for (const auto& j : derived_jets(set, depth)) out.push_back(j.value());
  return out;
}

double pushforward_conditioning(const GraphJet<double>& jet, const GroupElement<double>& g) {
  const auto img = g.apply(jet.ambient());
  const int p = jet.nvars();
  const int d = jet.ambient_dim;
  Eigen::MatrixXd J(p, p), T(d, p);
  for (int v = 0; v < p; ++v) {
    std::vector<int> alpha(static_cast<std::size_t>(p), 0);
    alpha[static_cast<std::size_t>(v)] = 1;
    for (int a = 0; a < d; ++a) T(a, v) = img[static_cast<std::size_t>(a)].coeff(alpha);
    for (int i = 0; i < p; ++i) J(i, v) = T(jet.indep[static_cast<std::size_t>(i)], v);
  }
  const double full = Eigen::JacobiSVD<Eigen::MatrixXd>(T).singularValues().minCoeff();
  return Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues().minCoeff() / full;
}

#define SYMPINV_INSTANTIATE(S)                                                                        \
  template InvariantSet<S> invariants_of(const GeometryInfo&, Flavor, const GraphJet<S>&);            \
  template InvariantSet<S> invariants_of(const GeometryInfo&, Flavor, const FunctionJet<S>&);         \
  template std::vector<std::string> derived_names(const InvariantSet<S>&, int);                       \
  template std::vector<MultiJet<S>> derived_jets(const InvariantSet<S>&, int);                        \
  template std::vector<S> derived_values(const InvariantSet<S>&, int);

SYMPINV_INSTANTIATE(double)
SYMPINV_INSTANTIATE(Rational)

}  // namespace sympinv
