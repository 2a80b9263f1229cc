#pragma once

// Coordinate conventions. Every space lists its coordinates in the order used
// by the corresponding geometry and records the Darboux pairs (q_i, p_i) with
// omega = sum dq_i ^ dp_i, so omega(u, v) = sum u_q v_p - u_p v_q.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sympinv/error.hpp"

namespace sympinv {

class SymplecticSpace {
 public:
  SymplecticSpace() = default;
  SymplecticSpace(std::vector<std::string> names, std::vector<std::pair<int, int>> pairs);

  // x1..xn, y1..yn (x, y for n = 1).
  static SymplecticSpace darboux(int n);
  // Curves: (x, y) for n = 1, (t, x, y, z) with omega = dt^dy + dx^dz for n = 2.
  static SymplecticSpace for_curves(int n);
  // Hypersurfaces: (x, y, z, u) with omega = dx^dz + dy^du for n = 2.
  static SymplecticSpace for_hypersurfaces(int n);
  // Surfaces in R^4: (t, s, x, y) with omega = dt^ds + dx^dy.
  static SymplecticSpace for_surfaces();

  int n() const { return static_cast<int>(pairs_.size()); }
  int dim() const { return 2 * n(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  // omega(u, v) = u^T J v.
  const Eigen::MatrixXd& J() const { return J_; }

  template <class T>
  T omega(const std::vector<T>& u, const std::vector<T>& v) const {
    T acc(0);
    for (const auto& [q, p] : pairs_) {
      acc = acc + u[static_cast<std::size_t>(q)] * v[static_cast<std::size_t>(p)] -
            u[static_cast<std::size_t>(p)] * v[static_cast<std::size_t>(q)];
    }
    return acc;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> pairs_;
  Eigen::MatrixXd J_;
};

// R^{2n+1}(x, y, z) with alpha = dz - sum y_i dx_i; coordinates x1..xn, y1..yn, z.
class ContactSpace {
 public:
  explicit ContactSpace(int n = 1);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  int z_index() const { return 2 * n_; }
  const std::vector<std::string>& names() const { return names_; }
  // The symplectic quotient coordinates (x, y).
  const SymplecticSpace& base() const { return base_; }

  // I0 = 2z - sum x_i y_i.
  template <class T>
  T base_invariant(const std::vector<T>& p) const {
    T acc = T(2) * p[static_cast<std::size_t>(2 * n_)];
    for (int i = 0; i < n_; ++i) acc = acc - p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(n_ + i)];
    return acc;
  }

 private:
  int n_;
  std::vector<std::string> names_;
  SymplecticSpace base_;
};

}  // namespace sympinv
