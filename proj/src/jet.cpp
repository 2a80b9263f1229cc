#include "sympinv/jet.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sympinv {

namespace {

// All multi-indices of total degree d in graded-descending-lex order.
void enumerate_degree(int nvars, int d, std::vector<int>& cur, int var, std::vector<int>& out) {
  if (var == nvars - 1) {
    cur[static_cast<std::size_t>(var)] = d;
    out.insert(out.end(), cur.begin(), cur.end());
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = e;
    enumerate_degree(nvars, d - e, cur, var + 1, out);
  }
}

}  // namespace

JetLayout::JetLayout(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars <= 0 || order < 0) throw Error(ErrorCode::InvalidArgument, "jet layout needs nvars >= 1 and order >= 0");
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  degree_offsets_.push_back(0);
  for (int d = 0; d <= order; ++d) {
    enumerate_degree(nvars, d, cur, 0, exps_);
    const std::size_t count = exps_.size() / static_cast<std::size_t>(nvars);
    degree_.resize(count, d);
    degree_offsets_.push_back(count);
  }
  const std::size_t n = degree_.size();
  factorial_.resize(n);
  factorial_int_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    long long f = 1;
    for (int a : exponents(k))
      for (int i = 2; i <= a; ++i) f *= i;
    factorial_int_[k] = f;
    factorial_[k] = static_cast<double>(f);
  }
  raise_.assign(static_cast<std::size_t>(nvars) * n, npos);
  std::vector<int> alpha(static_cast<std::size_t>(nvars));
  for (std::size_t k = 0; k < n; ++k) {
    if (degree_[k] >= order) continue;
    for (int v = 0; v < nvars; ++v) {
      auto e = exponents(k);
      alpha.assign(e.begin(), e.end());
      ++alpha[static_cast<std::size_t>(v)];
      raise_[static_cast<std::size_t>(v) * n + k] = find(alpha);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (degree_[i] + degree_[j] > order) break;
      auto a = exponents(i), b = exponents(j);
      for (int v = 0; v < nvars; ++v) alpha[static_cast<std::size_t>(v)] = a[static_cast<std::size_t>(v)] + b[static_cast<std::size_t>(v)];
      products_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(find(alpha))});
    }
  }
  std::stable_sort(products_.begin(), products_.end(), [](const Product& x, const Product& y) { return x.out < y.out; });
}

std::size_t JetLayout::count_through(int d) const {
  if (d < 0) return 0;
  if (d > order_) d = order_;
  return degree_offsets_[static_cast<std::size_t>(d) + 1];
}

std::size_t JetLayout::find(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_) return npos;
  int d = 0;
  for (int a : alpha) {
    if (a < 0) return npos;
    d += a;
  }
  if (d > order_) return npos;
  // Position inside degree block: count entries of the same degree that precede alpha.
  // Entries are ordered by descending alpha_0, then descending alpha_1, ...
  auto count_with = [](int vars, int deg) -> std::size_t {
    // number of multi-indices in `vars` variables with total degree exactly deg
    if (vars == 0) return deg == 0 ? 1 : 0;
    std::size_t r = 1;
    for (int i = 1; i < vars; ++i) r = r * static_cast<std::size_t>(deg + i) / static_cast<std::size_t>(i);
    return r;
  };
  std::size_t pos = degree_offsets_[static_cast<std::size_t>(d)];
  int rem = d;
  for (int v = 0; v < nvars_ - 1; ++v) {
    const int rest = nvars_ - v - 1;
    for (int e = rem; e > alpha[static_cast<std::size_t>(v)]; --e) pos += count_with(rest, rem - e);
    rem -= alpha[static_cast<std::size_t>(v)];
  }
  return pos;
}

std::shared_ptr<const JetLayout> JetLayout::get(int nvars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, order}];
  if (!slot) slot = std::make_shared<const JetLayout>(nvars, order);
  return slot;
}

}  // namespace sympinv
