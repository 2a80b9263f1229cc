#pragma once

// Submanifolds given by expressions, sampled evaluation of their invariants,
// and signature clouds: the image of the submanifold under the generating
// invariants and their derivatives along derivation words up to a depth.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/dispatch.hpp"
#include "sympinv/expr.hpp"

namespace sympinv {

// Submanifolds: one expression per ambient coordinate in the parameters.
// When the parameters are the independent coordinates themselves, their
// identity definitions may be omitted (graph form). Functions: a single
// definition u = expr in the ambient coordinates.
struct Submanifold {
  GeometryInfo info;
  std::vector<std::string> parameters;
  std::vector<Expr> coordinates;  // ambient coordinates, or {u} for functions
};

Submanifold make_submanifold(Geometry geometry, int n, const std::vector<std::pair<std::string, std::string>>& definitions,
                             std::vector<std::string> parameters = {});

struct SamplingOptions {
  double window_lo = 0.5;
  double window_hi = 1.5;
  int samples = 64;
  int depth = 1;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Sample parameter points: evenly spaced (endpoints included) for one
// parameter, seeded uniform in the window cube otherwise.
std::vector<std::vector<double>> sample_parameters(int nparams, const SamplingOptions& opt);

struct SampleRow {
  std::vector<double> parameters;
  std::vector<double> point;   // ambient basepoint (functions: coordinates, then u)
  std::vector<double> values;  // derived invariants, empty when degenerate
  std::vector<double> slopes;  // d(values)/d(chart coordinate), one-parameter submanifolds only
  bool degenerate = false;
  std::string reason;
};

struct SampleTable {
  GeometryInfo info;
  Flavor flavor = Flavor::Sp;
  int depth = 1;
  std::vector<std::string> generators;
  std::vector<SampleRow> rows;
  int degenerate_count() const;
};

// Evaluate the derived invariants at every sample. Degenerate samples are
// flagged with the reason; invalid definitions propagate as errors.
SampleTable evaluate_samples(const Submanifold& m, Flavor flavor, const SamplingOptions& opt);

struct SignatureCloud {
  std::string geometry;
  int n = 1;
  std::string flavor;
  std::vector<std::string> generators;
  int depth = 1;
  double window_lo = 0.5, window_hi = 1.5;
  int sample_count = 0;
  int degenerate_count = 0;
  std::vector<int> indices;  // sample index of each point
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> slopes;  // per point, empty unless one-parameter
};

// Throws AllSamplesDegenerate when no sample survives.
SignatureCloud signature_of(const Submanifold& m, Flavor flavor, const SamplingOptions& opt);
SignatureCloud signature_from(const SampleTable& table, const SamplingOptions& opt);

enum class Verdict { Equivalent, Distinct, Inconclusive };
const char* to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Inconclusive;
  double distance = 0.0;  // symmetric Hausdorff distance in normalized coordinates
  double forward = 0.0;   // sup over c1 of the distance to c2
  double backward = 0.0;  // sup over c2 of the distance to c1
};

// Coordinates are scaled by the extent of the union of both clouds. Clouds of
// one-parameter submanifolds are compared against the cubic Hermite curves
// through their points (using the stored slopes); others pointwise.
// Throws IncomparableClouds when geometry, flavor, depth or generators differ.
Comparison equivalent(const SignatureCloud& c1, const SignatureCloud& c2, double tol);

// JSON with a fixed key order and 17 significant digits.
std::string to_json(const SignatureCloud& c);
SignatureCloud cloud_from_json(const std::string& text);

// "%.17g" in the C locale.
std::string format_double(double v);

}  // namespace sympinv
