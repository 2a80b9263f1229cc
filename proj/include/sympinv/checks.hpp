#pragma once

// Batteries over random generic jets: invariance under random group
// elements, the displayed syzygies, reduction identities, and orbit-dimension
// counts against the reference tables.

#include <cstdint>
#include <string>
#include <vector>

#include "sympinv/geometry.hpp"

namespace sympinv {

struct CheckLine {
  std::string name;
  double observed = 0.0;  // worst residual, or an observed count
  double expected = 0.0;  // tolerance, or the reference count
  bool count = false;     // observed/expected are integers compared for equality
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool pass() const;
  void add(CheckLine line) { lines.push_back(std::move(line)); }
};

// The exported invariants agree at a jet and at its image under `elements`
// random elements, for `jets` random generic jets: relative error
// |a - b| / max(1, |a|, |b|) <= tol. Their first derivatives along the
// invariant derivations are reported on a second line against
// kDerivedTolerance.
inline constexpr double kDerivedTolerance = 1e-6;

CheckReport invariance_suite(const GeometryInfo& info, Flavor flavor, int jets, int elements, std::uint64_t seed,
                             double tol = 1e-8);

// The displayed syzygies of the geometry/flavor at random generic jets
// (normalized residual <= tol) and, with `exact`, exact zero at random
// polynomial jets with rational coefficients.
CheckReport syzygy_suite(const GeometryInfo& info, Flavor flavor, int trials, std::uint64_t seed, bool exact = true,
                         double tol = 1e-7);

// Reduction identities and functional dependences.
CheckReport reduction_suite(const GeometryInfo& info, Flavor flavor, int trials, std::uint64_t seed,
                            double tol = 1e-9);

// Observed orbit dimensions (and derived counts h_k) against the reference
// tables; combinations without a table report observed values only.
CheckReport counting_suite(const GeometryInfo& info, Flavor flavor, std::uint64_t seed);

// The flavor whose tables and syzygies apply by default.
Flavor default_flavor(Geometry g);

std::string format_report(const CheckReport& r);

}  // namespace sympinv
