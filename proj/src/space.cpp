#include "sympinv/space.hpp"

namespace sympinv {

SymplecticSpace::SymplecticSpace(std::vector<std::string> names, std::vector<std::pair<int, int>> pairs)
    : names_(std::move(names)), pairs_(std::move(pairs)) {
  const int d = static_cast<int>(names_.size());
  if (d != 2 * static_cast<int>(pairs_.size()) || d == 0)
    throw Error(ErrorCode::InvalidArgument, "symplectic space needs 2n names and n Darboux pairs");
  std::vector<int> seen(static_cast<std::size_t>(d), 0);
  J_ = Eigen::MatrixXd::Zero(d, d);
  for (const auto& [q, p] : pairs_) {
    if (q < 0 || p < 0 || q >= d || p >= d || seen[static_cast<std::size_t>(q)]++ || seen[static_cast<std::size_t>(p)]++)
      throw Error(ErrorCode::InvalidArgument, "Darboux pairs must partition the coordinates");
    J_(q, p) = 1.0;
    J_(p, q) = -1.0;
  }
}

SymplecticSpace SymplecticSpace::darboux(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  if (n == 1) {
    names = {"x", "y"};
  } else {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
  return SymplecticSpace(names, pairs);
}

SymplecticSpace SymplecticSpace::for_curves(int n) {
  if (n == 2) return SymplecticSpace({"t", "x", "y", "z"}, {{0, 2}, {1, 3}});
  return darboux(n);
}

SymplecticSpace SymplecticSpace::for_hypersurfaces(int n) {
  if (n == 2) return SymplecticSpace({"x", "y", "z", "u"}, {{0, 2}, {1, 3}});
  return darboux(n);
}

SymplecticSpace SymplecticSpace::for_surfaces() { return SymplecticSpace({"t", "s", "x", "y"}, {{0, 1}, {2, 3}}); }

ContactSpace::ContactSpace(int n) : n_(n), base_(SymplecticSpace::darboux(n)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  names_ = base_.names();
  names_.push_back("z");
}

}  // namespace sympinv
