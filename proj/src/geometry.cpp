#include "sympinv/geometry.hpp"

#include <map>

namespace sympinv {

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::Curve: return "curve";
    case Geometry::Hypersurface: return "hypersurface";
    case Geometry::Surface: return "surface";
    case Geometry::Function: return "function";
    case Geometry::ContactCurve: return "contact-curve";
    case Geometry::ContactSurface: return "contact-surface";
    case Geometry::ContactFunction: return "contact-function";
  }
  return "?";
}

Geometry parse_geometry(const std::string& s) {
  for (Geometry g : {Geometry::Curve, Geometry::Hypersurface, Geometry::Surface, Geometry::Function,
                     Geometry::ContactCurve, Geometry::ContactSurface, Geometry::ContactFunction}) {
    const std::string name = to_string(g);
    if (s == name || s == name + "s") return g;
  }
  if (s == "contact-functions") return Geometry::ContactFunction;
  throw Error(ErrorCode::InvalidArgument, "unknown geometry '" + s + "'");
}

GeometryInfo geometry_info(Geometry g, int n) {
  GeometryInfo info;
  info.geometry = g;
  info.n = n;
  switch (g) {
    case Geometry::Curve:
      info.space = SymplecticSpace::for_curves(n);
      info.names = info.space.names();
      info.indep = {0};
      for (int i = 1; i < 2 * n; ++i) info.dep.push_back(i);
      break;
    case Geometry::Hypersurface:
      info.space = SymplecticSpace::for_hypersurfaces(n);
      info.names = info.space.names();
      for (int i = 0; i < 2 * n - 1; ++i) info.indep.push_back(i);
      info.dep = {2 * n - 1};
      break;
    case Geometry::Surface:
      if (n != 2) throw Error(ErrorCode::InvalidArgument, "surfaces are supported in R^4 only");
      info.space = SymplecticSpace::for_surfaces();
      info.names = info.space.names();
      info.indep = {0, 1};
      info.dep = {2, 3};
      break;
    case Geometry::Function:
      info.space = SymplecticSpace::darboux(n);
      info.names = info.space.names();
      for (int i = 0; i < 2 * n; ++i) info.indep.push_back(i);
      info.names.push_back("u");
      info.dep = {2 * n};
      info.function = true;
      break;
    case Geometry::ContactCurve:
    case Geometry::ContactSurface:
    case Geometry::ContactFunction: {
      if (n != 1) throw Error(ErrorCode::InvalidArgument, "contact geometries are supported for n = 1");
      const ContactSpace cs(n);
      info.space = cs.base();
      info.names = cs.names();
      info.contact = true;
      if (g == Geometry::ContactCurve) {
        info.indep = {0};
        info.dep = {1, 2};
      } else if (g == Geometry::ContactSurface) {
        info.indep = {0, 1};
        info.dep = {2};
      } else {
        info.indep = {0, 1, 2};
        info.dep = {3};
        info.names.push_back("u");
        info.function = true;
      }
      break;
    }
  }
  return info;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel * s(0)) ++r;
  return r;
}

int jet_space_dimension(const GeometryInfo& info, int k) {
  const int p = static_cast<int>(info.indep.size()), m = static_cast<int>(info.dep.size());
  return p + m * static_cast<int>(JetLayout::get(p, k)->size());
}

Eigen::MatrixXd prolonged_field_matrix(const GeometryInfo& info, const std::vector<VectorField<double>>& basis,
                                       const GraphJet<double>& jet, int k) {
  if (jet.order() < k + 1) throw Error(ErrorCode::OrderExhausted, "prolongation to order k needs a (k+1)-jet");
  const int p = jet.nvars();
  const auto amb = jet.ambient();
  const auto layout = JetLayout::get(p, k);
  const int cols = jet_space_dimension(info, k);
  Eigen::MatrixXd M(static_cast<Eigen::Index>(basis.size()), cols);
  std::vector<MultiJet<double>> point(amb.begin(), amb.begin() + info.group_dim());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::vector<MultiJet<double>> X;
    for (int a = 0; a < static_cast<int>(amb.size()); ++a)
      X.push_back(a < info.group_dim() ? basis[r][static_cast<std::size_t>(a)].eval(point) : MultiJet<double>(0.0));
    int c = 0;
    std::vector<double> xi;
    for (int i : jet.indep) xi.push_back(X[static_cast<std::size_t>(i)].value());
    for (double v : xi) M(static_cast<Eigen::Index>(r), c++) = v;
    for (std::size_t j = 0; j < jet.dep.size(); ++j) {
      const auto& u = jet.u[j];
      // Characteristic phi = eta - xi^i u_i; prolongation component of u_sigma is
      // D_sigma phi + xi^i u_{sigma+i}.
      MultiJet<double> phi = X[static_cast<std::size_t>(jet.dep[j])];
      for (int i = 0; i < p; ++i) phi = phi - X[static_cast<std::size_t>(jet.indep[static_cast<std::size_t>(i)])] * total_derivative(u, i);
      for (std::size_t s = 0; s < layout->size(); ++s) {
        double v = phi.coeffs().size() > s ? phi[s] * layout->factorial(s) : 0.0;
        if (phi.is_constant()) v = s == 0 ? phi.value() : 0.0;
        for (int i = 0; i < p; ++i) {
          const std::size_t up = u.layout()->raise(i, s);
          v += xi[static_cast<std::size_t>(i)] * u[up] * u.layout()->factorial(up);
        }
        M(static_cast<Eigen::Index>(r), c++) = v;
      }
    }
  }
  return M;
}

int orbit_dimension(const GeometryInfo& info, Flavor flavor, int k, std::uint64_t seed) {
  const auto basis = algebra_basis(info.space, flavor);
  std::mt19937_64 rng(seed);
  std::map<int, int> seen;
  for (int attempt = 0; attempt < 5; ++attempt) {
    const auto jet = random_graph_jet(static_cast<int>(info.names.size()), info.indep, info.dep, k + 1, rng);
    const int r = numeric_rank(prolonged_field_matrix(info, basis, jet, k));
    if (++seen[r] >= 2) return r;
  }
  throw Error(ErrorCode::NonGenericSample, "orbit rank unstable across resamples");
}

}  // namespace sympinv
