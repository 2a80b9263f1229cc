// sympinv: evaluate differential invariants along submanifolds given in job
// files, run the identity batteries, and compute and compare signatures.
//
// Exit codes: 0 ok / equivalent, 1 check failure, 2 parse or validation
// error, 3 all samples degenerate, 4 distinct, 5 inconclusive.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympinv/checks.hpp"
#include "sympinv/job.hpp"
#include "sympinv/signature.hpp"

using namespace sympinv;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kAllDegenerate = 3, kDistinct = 4, kInconclusive = 5 };

struct Overrides {
  std::optional<std::string> flavor, geometry, window, format;
  std::optional<int> samples, depth, n;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

void add_job_flags(CLI::App* app, Overrides& o) {
  app->add_option("--flavor", o.flavor, "sp, csp, asp, acsp, contact or contact-csp");
  app->add_option("--geometry", o.geometry, "curve, hypersurface, surface, function, contact-curve, ...");
  app->add_option("--n", o.n, "half the dimension of the symplectic space");
  app->add_option("--samples", o.samples, "number of sample points");
  app->add_option("--window", o.window, "parameter window A:B");
  app->add_option("--depth", o.depth, "length of derivation words");
  app->add_option("--seed", o.seed, "seed for multi-parameter sampling");
  app->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--threads", o.threads, "worker threads for sample evaluation")->check(CLI::Range(1, 64));
}

JobSpec load_job(const std::string& path, const Overrides& o) {
  JobSpec job = read_job(path);
  if (o.flavor) job.flavor = *o.flavor;
  if (o.geometry) job.geometry = *o.geometry;
  if (o.n) job.n = *o.n;
  if (o.samples) {
    if (*o.samples < 1) throw JobError("samples", "must be positive");
    job.samples = *o.samples;
  }
  if (o.window) std::tie(job.window_lo, job.window_hi) = parse_window(*o.window);
  if (o.depth) {
    if (*o.depth < 0) throw JobError("depth", "must be non-negative");
    job.depth = *o.depth;
  }
  if (o.seed) job.seed = *o.seed;
  if (o.format) job.format = *o.format;
  return job;
}

std::string json_strings(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + nlohmann::json(v[i]).dump();
  return s + "]";
}

std::string json_numbers(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<std::string> coordinate_names(const Submanifold& m) { return m.info.names; }

void print_table(const JobSpec& job, const Submanifold& m, const SampleTable& t) {
  const auto coords = coordinate_names(m);
  if (job.format == "json") {
    std::string s = "{\n";
    s += "  \"geometry\": " + nlohmann::json(job.geometry).dump() + ",\n";
    s += "  \"n\": " + std::to_string(job.n) + ",\n";
    s += "  \"flavor\": " + nlohmann::json(job.flavor).dump() + ",\n";
    s += "  \"depth\": " + std::to_string(t.depth) + ",\n";
    s += "  \"parameters\": " + json_strings(m.parameters) + ",\n";
    s += "  \"coordinates\": " + json_strings(coords) + ",\n";
    s += "  \"generators\": " + json_strings(t.generators) + ",\n";
    s += "  \"rows\": [";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto& r = t.rows[i];
      s += std::string(i ? "," : "") + "\n    {\"sample\": " + std::to_string(i);
      s += ", \"parameters\": " + json_numbers(r.parameters);
      s += ", \"point\": " + json_numbers(r.point);
      s += ", \"values\": " + (r.degenerate ? std::string("null") : json_numbers(r.values));
      s += ", \"status\": " + std::string(r.degenerate ? "\"degenerate\"" : "\"ok\"");
      if (r.degenerate) s += ", \"reason\": " + nlohmann::json(r.reason).dump();
      s += "}";
    }
    s += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    std::fwrite(s.data(), 1, s.size(), stdout);
    return;
  }
  std::string s = "sample";
  for (const auto& p : m.parameters) s += "," + csv_field(p);
  for (const auto& c : coords) s += "," + csv_field(c);
  for (const auto& g : t.generators) s += "," + csv_field(g);
  s += ",status\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    s += std::to_string(i);
    for (double v : r.parameters) s += "," + format_double(v);
    for (std::size_t k = 0; k < coords.size(); ++k) s += "," + (k < r.point.size() ? format_double(r.point[k]) : "");
    for (std::size_t k = 0; k < t.generators.size(); ++k) s += "," + (r.degenerate ? "" : format_double(r.values[k]));
    s += "," + (r.degenerate ? csv_field("degenerate: " + r.reason) : std::string("ok")) + "\n";
  }
  std::fwrite(s.data(), 1, s.size(), stdout);
}

int cmd_invariants(const std::string& path, const Overrides& o) {
  const JobSpec job = load_job(path, o);
  const auto m = job_submanifold(job);
  const auto table = evaluate_samples(m, job_flavor(job), job_sampling(job, o.threads));
  print_table(job, m, table);
  if (table.degenerate_count() == static_cast<int>(table.rows.size())) {
    std::cerr << "error: AllSamplesDegenerate: all " << table.rows.size() << " samples are degenerate\n";
    return kAllDegenerate;
  }
  return kOk;
}

SignatureCloud cloud_of(const JobSpec& job, int threads) {
  return signature_of(job_submanifold(job), job_flavor(job), job_sampling(job, threads));
}

int cmd_signature(const std::string& path, const Overrides& o) {
  const JobSpec job = load_job(path, o);
  const auto cloud = cloud_of(job, o.threads);
  if (job.format == "json") {
    std::cout << to_json(cloud);
    return kOk;
  }
  std::string s = "sample";
  for (const auto& g : cloud.generators) s += "," + csv_field(g);
  s += "\n";
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    s += std::to_string(cloud.indices[i]);
    for (double v : cloud.points[i]) s += "," + format_double(v);
    s += "\n";
  }
  std::fwrite(s.data(), 1, s.size(), stdout);
  return kOk;
}

int cmd_equivalence(const std::vector<std::string>& paths, const Overrides& o, double tol) {
  if (paths.size() != 2) throw JobError("job", "equivalence needs exactly two job files");
  const JobSpec a = load_job(paths[0], o);
  const JobSpec b = load_job(paths[1], o);
  if (a.geometry != b.geometry || a.n != b.n) throw JobError("geometry", "the jobs describe different geometries");
  if (a.flavor != b.flavor) throw JobError("flavor", "the jobs use different flavors");
  if (a.depth != b.depth) throw JobError("depth", "the jobs use different depths");
  const auto c1 = cloud_of(a, o.threads);
  const auto c2 = cloud_of(b, o.threads);
  const auto cmp = equivalent(c1, c2, tol);
  std::string gens;
  for (std::size_t i = 0; i < c1.generators.size(); ++i) gens += (i ? ", " : "") + c1.generators[i];
  std::cout << "verdict: " << to_string(cmp.verdict) << "\n"
            << "distance: " << format_double(cmp.distance) << "\n"
            << "forward: " << format_double(cmp.forward) << "\n"
            << "backward: " << format_double(cmp.backward) << "\n"
            << "tol: " << format_double(tol) << "\n"
            << "generators: " << gens << "\n"
            << "samples: " << c1.points.size() << " / " << c2.points.size() << " non-degenerate\n";
  switch (cmp.verdict) {
    case Verdict::Equivalent: return kOk;
    case Verdict::Distinct: return kDistinct;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_check(const std::vector<std::string>& args, const Overrides& o, int trials) {
  if (args.size() < 2) throw JobError("suite", "usage: check {invariance|syzygy|reduction|counting} GEOMETRY [n=K]");
  const std::string suite = args[0];
  Geometry g;
  try {
    g = parse_geometry(args[1]);
  } catch (const Error&) {
    throw JobError("geometry", "unknown geometry '" + args[1] + "'");
  }
  int n = o.n.value_or(1);
  if (g == Geometry::Surface && !o.n) n = 2;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i].rfind("n=", 0) != 0) throw JobError("n", "unexpected argument '" + args[i] + "'");
    try {
      n = std::stoi(args[i].substr(2));
    } catch (const std::exception&) {
      throw JobError("n", "expected n=K, got '" + args[i] + "'");
    }
    if (n < 1) throw JobError("n", "must be positive");
  }
  GeometryInfo info;
  try {
    info = geometry_info(g, n);
  } catch (const Error& e) {
    throw JobError("n", e.what());
  }
  Flavor f = default_flavor(g);
  if (o.flavor) {
    try {
      f = parse_flavor(*o.flavor);
    } catch (const Error&) {
      throw JobError("flavor", "unknown flavor '" + *o.flavor + "'");
    }
  }
  if (!is_supported(info, f))
    throw JobError("flavor", std::string("'") + to_string(f) + "' is not available for " + to_string(g) +
                                 " with n = " + std::to_string(n));
  const std::uint64_t seed = o.seed.value_or(1);
  CheckReport report;
  if (suite == "invariance") {
    report = invariance_suite(info, f, trials, 50, seed);
  } else if (suite == "syzygy") {
    report = syzygy_suite(info, f, trials, seed);
  } else if (suite == "reduction") {
    report = reduction_suite(info, f, trials, seed);
  } else if (suite == "counting") {
    report = counting_suite(info, f, seed);
  } else {
    throw JobError("suite", "unknown suite '" + suite + "'");
  }
  std::cout << format_report(report);
  return report.pass() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential invariants of symplectic and contact group actions"};
  app.require_subcommand(1);
  Overrides o;
  std::string job;
  std::vector<std::string> jobs, check_args;
  double tol = 1e-6;
  int trials = 20;

  auto* inv = app.add_subcommand("invariants", "tabulate invariants at sample points of a job");
  inv->add_option("--job,job", job, "job file")->required();
  add_job_flags(inv, o);

  auto* sig = app.add_subcommand("signature", "signature cloud of a job");
  sig->add_option("--job,job", job, "job file")->required();
  add_job_flags(sig, o);

  auto* eq = app.add_subcommand("equivalence", "compare the signatures of two jobs");
  eq->add_option("--job,jobs", jobs, "two job files")->required()->expected(2);
  eq->add_option("--tol", tol, "Hausdorff tolerance after normalization");
  add_job_flags(eq, o);

  auto* chk = app.add_subcommand("check", "identity batteries: invariance, syzygy, reduction, counting");
  chk->add_option("args", check_args, "SUITE GEOMETRY [n=K]")->required();
  chk->add_option("--trials", trials, "random jets per identity")->check(CLI::Range(1, 100000));
  add_job_flags(chk, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*inv) return cmd_invariants(job, o);
    if (*sig) return cmd_signature(job, o);
    if (*eq) return cmd_equivalence(jobs, o, tol);
    if (*chk) return cmd_check(check_args, o, trials);
  } catch (const JobError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::AllSamplesDegenerate) return kAllDegenerate;
    return kInvalid;
  }
  return kInvalid;
}
