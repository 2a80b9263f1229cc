#pragma once

// Jacobian ranks of invariant maps with respect to jet coordinates, via
// forward-mode dual numbers seeded on the jet coefficients.

#include <functional>
#include <vector>

#include "sympinv/geometry.hpp"

namespace sympinv {

using DualD = Dual<double>;

// Rank after scaling every row to unit length. Invariants of different
// weights differ by powers of the normalizing denominators, and row scaling
// does not change the rank.
inline int normalized_rank(Eigen::MatrixXd J, double rel = 1e-9) {
  for (Eigen::Index r = 0; r < J.rows(); ++r) {
    const double n = J.row(r).norm();
    if (n > 0) J.row(r) /= n;
  }
  return numeric_rank(J, rel);
}

// Flat coordinates of a graph jet: independent values, then the Taylor
// coefficients of each dependent jet.
inline std::vector<double> graph_coordinates(const GraphJet<double>& g) {
  std::vector<double> out(g.base);
  for (const auto& u : g.u) out.insert(out.end(), u.coeffs().begin(), u.coeffs().end());
  return out;
}

// Positions in graph_coordinates of the dependent coefficients of degree
// lo..hi; lo < 0 also includes the independent coordinates.
inline std::vector<int> graph_coordinates_of_degree(const GraphJet<double>& g, int lo, int hi) {
  std::vector<int> idx;
  int offset = g.nvars();
  if (lo < 0)
    for (int i = 0; i < g.nvars(); ++i) idx.push_back(i);
  for (const auto& u : g.u) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      const int d = u.layout()->degree(k);
      if (d >= lo && d <= hi) idx.push_back(offset + static_cast<int>(k));
    }
    offset += static_cast<int>(u.size());
  }
  return idx;
}

// The graph jet with dual seeds on the coordinates listed in `seeds`
// (gradient index = position in `seeds`).
inline GraphJet<DualD> seed_graph_jet(const GraphJet<double>& g, const std::vector<int>& seeds) {
  const auto flat = graph_coordinates(g);
  std::vector<DualD> d(flat.begin(), flat.end());
  for (std::size_t s = 0; s < seeds.size(); ++s)
    d[static_cast<std::size_t>(seeds[s])] = DualD::variable(flat[static_cast<std::size_t>(seeds[s])], s, seeds.size());
  GraphJet<DualD> out;
  out.ambient_dim = g.ambient_dim;
  out.indep = g.indep;
  out.dep = g.dep;
  out.base.assign(d.begin(), d.begin() + g.nvars());
  auto base = std::make_shared<const std::vector<DualD>>(out.base);
  std::size_t offset = static_cast<std::size_t>(g.nvars());
  for (const auto& u : g.u) {
    std::vector<DualD> c(d.begin() + static_cast<std::ptrdiff_t>(offset),
                         d.begin() + static_cast<std::ptrdiff_t>(offset + u.size()));
    out.u.emplace_back(u.layout(), std::move(c), base);
    offset += u.size();
  }
  return out;
}

// Rank of d F / d(seeded coordinates) at g, F returning invariant values.
inline int jacobian_rank(const std::function<std::vector<DualD>(const GraphJet<DualD>&)>& F, const GraphJet<double>& g,
                         const std::vector<int>& seeds, double rel = 1e-9) {
  const auto vals = F(seed_graph_jet(g, seeds));
  Eigen::MatrixXd J(static_cast<Eigen::Index>(vals.size()), static_cast<Eigen::Index>(seeds.size()));
  for (std::size_t r = 0; r < vals.size(); ++r)
    for (std::size_t c = 0; c < seeds.size(); ++c)
      J(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vals[r].partial(c);
  return normalized_rank(J, rel);
}

// Same for function jets: seeds index the Taylor coefficients of u (base fixed
// unless `with_base`, in which case indices 0..p-1 are the basepoint).
inline FunctionJet<DualD> seed_function_jet(const FunctionJet<double>& f, const std::vector<int>& seeds, bool with_base) {
  const int p = f.nvars();
  std::vector<double> flat(f.base);
  flat.insert(flat.end(), f.u.coeffs().begin(), f.u.coeffs().end());
  std::vector<DualD> d(flat.begin(), flat.end());
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const std::size_t at = static_cast<std::size_t>(seeds[s] + (with_base ? 0 : p));
    d[at] = DualD::variable(flat[at], s, seeds.size());
  }
  FunctionJet<DualD> out;
  out.base.assign(d.begin(), d.begin() + p);
  out.u = MultiJet<DualD>(f.u.layout(), std::vector<DualD>(d.begin() + p, d.end()),
                          std::make_shared<const std::vector<DualD>>(out.base));
  return out;
}

inline int jacobian_rank(const std::function<std::vector<DualD>(const FunctionJet<DualD>&)>& F,
                         const FunctionJet<double>& f, const std::vector<int>& seeds, bool with_base,
                         double rel = 1e-9) {
  const auto vals = F(seed_function_jet(f, seeds, with_base));
  Eigen::MatrixXd J(static_cast<Eigen::Index>(vals.size()), static_cast<Eigen::Index>(seeds.size()));
  for (std::size_t r = 0; r < vals.size(); ++r)
    for (std::size_t c = 0; c < seeds.size(); ++c)
      J(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vals[r].partial(c);
  return normalized_rank(J, rel);
}

}  // namespace sympinv
