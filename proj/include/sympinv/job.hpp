#pragma once

// Job files: plain-text "key = value" lines, then an [expressions] block of
// "coordinate = expression" lines. '#' starts a comment.
//
//   geometry = curve
//   n = 1
//   flavor = sp
//   parameters = t
//   window = 1:2
//   samples = 4
//   depth = 1
//   seed = 1
//   format = csv
//   [expressions]
//   x = t
//   y = t^2

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/error.hpp"
#include "sympinv/signature.hpp"

namespace sympinv {

struct JobSpec {
  std::string geometry = "curve";
  int n = 1;
  std::string flavor = "sp";
  std::vector<std::string> parameters;  // empty: the independent coordinates
  double window_lo = 0.5, window_hi = 1.5;
  int samples = 64;
  int depth = 1;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::vector<std::pair<std::string, std::string>> definitions;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

// Validation failure naming the offending field.
class JobError : public Error {
 public:
  JobError(std::string field, const std::string& what)
      : Error(ErrorCode::InvalidArgument, field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

JobSpec parse_job(const std::string& text);
JobSpec read_job(const std::string& path);
std::string format_job(const JobSpec& job);

// "A:B" -> (A, B) with A < B.
std::pair<double, double> parse_window(const std::string& s);

// Cross-field checks (geometry, flavor, definitions); throws JobError.
Submanifold job_submanifold(const JobSpec& job);
SamplingOptions job_sampling(const JobSpec& job, int threads = 1);
Flavor job_flavor(const JobSpec& job);

}  // namespace sympinv
