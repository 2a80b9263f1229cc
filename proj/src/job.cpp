#include "sympinv/job.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace sympinv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& field, const std::string& s) {
  double v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty())
    throw JobError(field, "expected a number, got '" + s + "'");
  return v;
}

template <class I>
I to_integer(const std::string& field, const std::string& s) {
  I v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty())
    throw JobError(field, "expected an integer, got '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw JobError("parameters", "empty name in list");
    out.push_back(item);
  }
  return out;
}

}  // namespace

std::pair<double, double> parse_window(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw JobError("window", "expected A:B, got '" + s + "'");
  const double a = to_double("window", trim(s.substr(0, colon)));
  const double b = to_double("window", trim(s.substr(colon + 1)));
  if (!(a < b)) throw JobError("window", "needs A < B");
  return {a, b};
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  std::set<std::string> seen;
  bool in_expressions = false;
  std::stringstream ss(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line == "[expressions]") {
      if (in_expressions) throw JobError("expressions", "block opened twice");
      in_expressions = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw JobError(in_expressions ? "expressions" : "line " + std::to_string(lineno),
                     "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (in_expressions) {
      if (key.empty() || value.empty()) throw JobError("expressions", "incomplete definition '" + line + "'");
      job.definitions.emplace_back(key, value);
      continue;
    }
    if (!seen.insert(key).second) throw JobError(key, "given twice");
    if (key == "geometry") {
      job.geometry = value;
    } else if (key == "n") {
      job.n = to_integer<int>(key, value);
      if (job.n < 1) throw JobError(key, "must be positive");
    } else if (key == "flavor") {
      job.flavor = value;
    } else if (key == "parameters") {
      job.parameters = split_list(value);
    } else if (key == "window") {
      std::tie(job.window_lo, job.window_hi) = parse_window(value);
    } else if (key == "samples") {
      job.samples = to_integer<int>(key, value);
      if (job.samples < 1) throw JobError(key, "must be positive");
    } else if (key == "depth") {
      job.depth = to_integer<int>(key, value);
      if (job.depth < 0) throw JobError(key, "must be non-negative");
    } else if (key == "seed") {
      job.seed = to_integer<std::uint64_t>(key, value);
    } else if (key == "format") {
      if (value != "csv" && value != "json") throw JobError(key, "expected csv or json, got '" + value + "'");
      job.format = value;
    } else {
      throw JobError(key, "unknown key");
    }
  }
  if (job.definitions.empty()) throw JobError("expressions", "no definitions");
  return job;
}

JobSpec read_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JobError("job", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job(ss.str());
}

std::string format_job(const JobSpec& job) {
  std::string s;
  s += "geometry = " + job.geometry + "\n";
  s += "n = " + std::to_string(job.n) + "\n";
  s += "flavor = " + job.flavor + "\n";
  if (!job.parameters.empty()) {
    s += "parameters = ";
    for (std::size_t i = 0; i < job.parameters.size(); ++i) s += (i ? ", " : "") + job.parameters[i];
    s += "\n";
  }
  s += "window = " + format_double(job.window_lo) + ":" + format_double(job.window_hi) + "\n";
  s += "samples = " + std::to_string(job.samples) + "\n";
  s += "depth = " + std::to_string(job.depth) + "\n";
  s += "seed = " + std::to_string(job.seed) + "\n";
  s += "format = " + job.format + "\n";
  s += "[expressions]\n";
  for (const auto& [k, v] : job.definitions) s += k + " = " + v + "\n";
  return s;
}

Flavor job_flavor(const JobSpec& job) {
  try {
    return parse_flavor(job.flavor);
  } catch (const Error& e) {
    throw JobError("flavor", "unknown flavor '" + job.flavor + "'");
  }
}

Submanifold job_submanifold(const JobSpec& job) {
  Geometry g;
  try {
    g = parse_geometry(job.geometry);
  } catch (const Error&) {
    throw JobError("geometry", "unknown geometry '" + job.geometry + "'");
  }
  GeometryInfo info;
  try {
    info = geometry_info(g, job.n);
  } catch (const Error& e) {
    throw JobError("n", e.what());
  }
  const Flavor f = job_flavor(job);
  if (!is_supported(info, f))
    throw JobError("flavor", std::string("'") + to_string(f) + "' is not available for " + to_string(g) + " with n = " +
                                 std::to_string(job.n));
  try {
    return make_submanifold(g, job.n, job.definitions, job.parameters);
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.find("parameters:") != std::string::npos) throw JobError("parameters", what);
    throw JobError("expressions", what);
  }
}

SamplingOptions job_sampling(const JobSpec& job, int threads) {
  SamplingOptions o;
  o.window_lo = job.window_lo;
  o.window_hi = job.window_hi;
  o.samples = job.samples;
  o.depth = job.depth;
  o.seed = job.seed;
  o.threads = threads;
  return o;
}

}  // namespace sympinv
