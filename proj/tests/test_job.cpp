#include "doctest.h"

#include <random>

#include "sympinv/job.hpp"

using namespace sympinv;

namespace {

const char* kParabola = R"(# parabola
geometry = curve
n = 1
flavor = sp
parameters = t
window = 1:2
samples = 4
[expressions]
x = t
y = t^2   # graph
)";

std::string field_of(const std::string& text) {
  try {
    job_submanifold(parse_job(text));
  } catch (const JobError& e) {
    return e.field();
  }
  return {};
}

}  // namespace

TEST_CASE("job files parse with defaults and comments") {
  const JobSpec job = parse_job(kParabola);
  CHECK(job.geometry == "curve");
  CHECK(job.n == 1);
  CHECK(job.parameters == std::vector<std::string>{"t"});
  CHECK(job.window_lo == 1.0);
  CHECK(job.window_hi == 2.0);
  CHECK(job.samples == 4);
  CHECK(job.depth == 1);
  CHECK(job.seed == 1);
  CHECK(job.format == "csv");
  REQUIRE(job.definitions.size() == 2);
  CHECK(job.definitions[1].first == "y");
  CHECK(job.definitions[1].second == "t^2");
  const Submanifold m = job_submanifold(job);
  CHECK(m.parameters.size() == 1);
}

TEST_CASE("property: format_job and parse_job round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  const char* geometries[] = {"curve", "function", "surface", "hypersurface", "contact-curve"};
  const char* flavors[] = {"sp", "csp", "asp", "acsp", "contact"};
  for (int trial = 0; trial < 200; ++trial) {
    JobSpec job;
    job.geometry = geometries[rng() % 5];
    job.n = 1 + static_cast<int>(rng() % 3);
    job.flavor = flavors[rng() % 5];
    if (rng() % 2) job.parameters = {"t", "s"};
    const double a = u(rng), b = u(rng);
    job.window_lo = std::min(a, b);
    job.window_hi = std::max(a, b) + 1e-3;
    job.samples = 1 + static_cast<int>(rng() % 500);
    job.depth = static_cast<int>(rng() % 4);
    job.seed = rng();
    job.format = rng() % 2 ? "csv" : "json";
    job.definitions = {{"x", "t"}, {"y", "sin(t) + " + std::to_string(trial)}};
    CHECK(parse_job(format_job(job)) == job);
  }
}

TEST_CASE("job errors name the offending field") {
  auto parse_field = [](const std::string& text) -> std::string {
    try {
      parse_job(text);
    } catch (const JobError& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
      return e.field();
    }
    return {};
  };
  CHECK(parse_field("window = 2:1\n[expressions]\nx = t\n") == "window");
  CHECK(parse_field("window = 1\n[expressions]\nx = t\n") == "window");
  CHECK(parse_field("samples = many\n[expressions]\nx = t\n") == "samples");
  CHECK(parse_field("samples = 0\n[expressions]\nx = t\n") == "samples");
  CHECK(parse_field("colour = red\n[expressions]\nx = t\n") == "colour");
  CHECK(parse_field("n = 1\nn = 2\n[expressions]\nx = t\n") == "n");
  CHECK(parse_field("format = xml\n[expressions]\nx = t\n") == "format");
  CHECK(parse_field("geometry = curve\n") == "expressions");
  CHECK(parse_field("[expressions]\nx t\n") == "expressions");

  CHECK(field_of("geometry = blob\n[expressions]\nx = t\n") == "geometry");
  CHECK(field_of("flavor = nope\n[expressions]\nx = t\ny = t\n") == "flavor");
  CHECK(field_of("geometry = surface\nn = 2\nflavor = csp\n[expressions]\nx = t\n") == "flavor");
  // Surface job with curve definitions.
  CHECK(field_of("geometry = surface\nn = 2\nparameters = t\n[expressions]\nx = t\ny = t^2\n") == "parameters");
  CHECK(field_of("parameters = t\n[expressions]\nx = t\ny = s\n") == "expressions");
  CHECK(field_of("parameters = t\n[expressions]\nx = t\n") == "expressions");
  CHECK(field_of("parameters = t\n[expressions]\nx = t\ny = t\nw = t\n") == "expressions");
  CHECK(field_of(kParabola).empty());
}
