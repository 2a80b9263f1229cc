#pragma once

#include <string>
#include <vector>

#include "sympinv/graph.hpp"
#include "sympinv/group.hpp"
#include "sympinv/space.hpp"

namespace sympinv {

enum class Geometry { Curve, Hypersurface, Surface, Function, ContactCurve, ContactSurface, ContactFunction };

const char* to_string(Geometry g);
Geometry parse_geometry(const std::string& s);

// Coordinates and chart of a geometry. For functions the dependent coordinate
// u is appended after the ambient coordinates and is not moved by the group.
struct GeometryInfo {
  Geometry geometry = Geometry::Curve;
  int n = 1;
  SymplecticSpace space;           // the symplectic space (the base for contact geometries)
  std::vector<std::string> names;  // ambient coordinate names (+ "u" for functions)
  std::vector<int> indep, dep;
  bool function = false;
  bool contact = false;
  int group_dim() const { return static_cast<int>(names.size()) - (function ? 1 : 0); }
};

GeometryInfo geometry_info(Geometry g, int n);

// Rank with singular values below rel * sigma_max treated as zero.
int numeric_rank(const Eigen::MatrixXd& m, double rel = 1e-9);

// Rows are the prolonged basis fields at the jet (which must have order >= k+1).
Eigen::MatrixXd prolonged_field_matrix(const GeometryInfo& info, const std::vector<VectorField<double>>& basis,
                                       const GraphJet<double>& jet, int k);

// Orbit dimension of the prolonged action on J^k at random generic jets.
// Resamples up to five times; throws NonGenericSample when no rank repeats.
int orbit_dimension(const GeometryInfo& info, Flavor flavor, int k, std::uint64_t seed);

// dim J^k of the geometry.
int jet_space_dimension(const GeometryInfo& info, int k);

}  // namespace sympinv
