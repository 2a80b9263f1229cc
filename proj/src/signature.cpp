#include "sympinv/signature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "sympinv/sample.hpp"

namespace sympinv {

Submanifold make_submanifold(Geometry geometry, int n, const std::vector<std::pair<std::string, std::string>>& definitions,
                             std::vector<std::string> parameters) {
  Submanifold m;
  m.info = geometry_info(geometry, n);
  const auto& names = m.info.names;
  std::set<std::string> seen;
  for (const auto& [key, src] : definitions)
    if (!seen.insert(key).second) throw Error(ErrorCode::InvalidArgument, "expressions: '" + key + "' is defined twice");

  if (m.info.function) {
    const std::vector<std::string> coords(names.begin(), names.end() - 1);
    if (!parameters.empty() && parameters != coords)
      throw Error(ErrorCode::InvalidArgument, "parameters: functions are parametrized by their coordinates");
    if (definitions.size() != 1 || definitions[0].first != "u")
      throw Error(ErrorCode::InvalidArgument, "expressions: a function needs exactly one definition 'u = ...'");
    m.parameters = coords;
    m.coordinates.push_back(parse_expr(definitions[0].second, coords));
    return m;
  }

  std::vector<std::string> indep_names;
  for (int i : m.info.indep) indep_names.push_back(names[static_cast<std::size_t>(i)]);
  if (parameters.empty()) parameters = indep_names;
  if (parameters.size() != m.info.indep.size())
    throw Error(ErrorCode::InvalidArgument, "parameters: " + std::string(to_string(geometry)) + " needs " +
                                                std::to_string(m.info.indep.size()) + " parameter(s), got " +
                                                std::to_string(parameters.size()));
  for (const auto& [key, src] : definitions)
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw Error(ErrorCode::InvalidArgument,
                  "expressions: '" + key + "' is not a coordinate of " + std::string(to_string(geometry)));
  m.parameters = parameters;
  const bool graph_form = parameters == indep_names;
  for (const auto& name : names) {
    auto it = std::find_if(definitions.begin(), definitions.end(), [&](const auto& d) { return d.first == name; });
    if (it != definitions.end()) {
      m.coordinates.push_back(parse_expr(it->second, parameters));
    } else if (graph_form && std::find(indep_names.begin(), indep_names.end(), name) != indep_names.end()) {
      m.coordinates.push_back(parse_expr(name, parameters));
    } else {
      throw Error(ErrorCode::InvalidArgument, "expressions: missing definition of '" + name + "'");
    }
  }
  return m;
}

std::vector<std::vector<double>> sample_parameters(int nparams, const SamplingOptions& opt) {
  if (opt.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples: must be positive");
  if (!(opt.window_lo < opt.window_hi)) throw Error(ErrorCode::InvalidArgument, "window: needs A < B");
  std::vector<std::vector<double>> out;
  if (nparams == 1) {
    for (int i = 0; i < opt.samples; ++i) {
      const double s = opt.samples == 1 ? 0.5 : static_cast<double>(i) / (opt.samples - 1);
      out.push_back({opt.window_lo + s * (opt.window_hi - opt.window_lo)});
    }
    return out;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(opt.window_lo, opt.window_hi);
  for (int i = 0; i < opt.samples; ++i) {
    std::vector<double> p(static_cast<std::size_t>(nparams));
    for (auto& v : p) v = u(rng);
    out.push_back(p);
  }
  return out;
}

int SampleTable::degenerate_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SampleRow& r) { return r.degenerate; }));
}

namespace {

bool is_configuration_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownFunction:
    case ErrorCode::ArityError:
    case ErrorCode::UnboundVariable: return true;
    default: return false;
  }
}

struct Evaluated {
  std::vector<std::string> names;
  SampleRow row;
};

// One attempt at jet order K; throws OrderExhausted when K is too small.
Evaluated evaluate_at(const Submanifold& m, Flavor flavor, const std::vector<double>& p, int depth, int K) {
  const auto& info = m.info;
  const bool slopes = !info.function && m.parameters.size() == 1;
  Evaluated out;
  out.row.parameters = p;
  std::vector<MultiJet<double>> jets;
  double dxdt = 0.0;
  if (info.function) {
    const FunctionJet<double> f{p, expression_jet(m.coordinates[0], m.parameters, p, K)};
    const auto set = invariants_of(info, flavor, f);
    out.names = derived_names(set, depth);
    jets = derived_jets(set, depth);
    out.row.point = p;
    out.row.point.push_back(f.u.value());
  } else {
    std::vector<MultiJet<double>> ambient;
    for (const auto& e : m.coordinates) ambient.push_back(expression_jet(e, m.parameters, p, K));
    const auto g = regraph(ambient, info.indep, info.dep);
    const auto set = invariants_of(info, flavor, g);
    out.names = derived_names(set, depth);
    jets = derived_jets(set, depth);
    out.row.point = g.point();
    if (slopes) {
      const auto& x = ambient[static_cast<std::size_t>(info.indep[0])];
      dxdt = x.is_constant() ? 0.0 : x.coeff({1});
    }
  }
  for (const auto& j : jets) {
    out.row.values.push_back(j.value());
    if (slopes) {
      if (j.is_constant()) {
        out.row.slopes.push_back(0.0);
      } else {
        if (j.order() < 1) throw Error(ErrorCode::OrderExhausted, "slope needs a 1-jet");
        out.row.slopes.push_back(j.coeff({1}) * dxdt);
      }
    }
  }
  for (double v : out.row.values)
    if (!std::isfinite(v)) throw DegenerateError(ErrorCode::DomainError, "non-finite invariant value");
  for (double v : out.row.slopes)
    if (!std::isfinite(v)) throw DegenerateError(ErrorCode::DomainError, "non-finite invariant slope");
  return out;
}

Evaluated evaluate_sample(const Submanifold& m, Flavor flavor, const std::vector<double>& p, int depth) {
  for (int K = depth + 2; K <= depth + 10; ++K) {
    try {
      return evaluate_at(m, flavor, p, depth, K);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::OrderExhausted) continue;
      if (is_configuration_error(e.code())) throw;
      Evaluated bad;
      bad.row.parameters = p;
      bad.row.degenerate = true;
      const auto* d = dynamic_cast<const DegenerateError*>(&e);
      bad.row.reason = d ? std::string(to_string(d->code())) + ": " + d->reason() : e.what();
      return bad;
    }
  }
  throw Error(ErrorCode::OrderExhausted, "could not reach the jet order needed for depth " + std::to_string(depth));
}

}  // namespace

SampleTable evaluate_samples(const Submanifold& m, Flavor flavor, const SamplingOptions& opt) {
  require_supported(m.info, flavor);
  if (opt.depth < 0) throw Error(ErrorCode::InvalidArgument, "depth: must be non-negative");
  const auto params = sample_parameters(static_cast<int>(m.parameters.size()), opt);
  std::vector<Evaluated> results(params.size());
  std::vector<std::exception_ptr> errors(params.size());
  const auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < params.size(); i += step) {
      try {
        results[i] = evaluate_sample(m, flavor, params[i], opt.depth);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = static_cast<std::size_t>(std::clamp(opt.threads, 1, 64));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SampleTable table;
  table.info = m.info;
  table.flavor = flavor;
  table.depth = opt.depth;
  for (auto& r : results) {
    if (table.generators.empty() && !r.row.degenerate) table.generators = r.names;
    table.rows.push_back(std::move(r.row));
  }
  return table;
}

SignatureCloud signature_from(const SampleTable& table, const SamplingOptions& opt) {
  SignatureCloud c;
  c.geometry = to_string(table.info.geometry);
  c.n = table.info.n;
  c.flavor = to_string(table.flavor);
  c.generators = table.generators;
  c.depth = table.depth;
  c.window_lo = opt.window_lo;
  c.window_hi = opt.window_hi;
  c.sample_count = static_cast<int>(table.rows.size());
  c.degenerate_count = table.degenerate_count();
  if (c.degenerate_count == c.sample_count)
    throw Error(ErrorCode::AllSamplesDegenerate, "all " + std::to_string(c.sample_count) + " samples are degenerate");
  const double h = opt.samples > 1 ? (opt.window_hi - opt.window_lo) / (opt.samples - 1) : 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    if (r.degenerate) continue;
    c.indices.push_back(static_cast<int>(i));
    c.points.push_back(r.values);
    std::vector<double> t;
    for (double s : r.slopes) t.push_back(s * h);
    c.slopes.push_back(t);
  }
  return c;
}

SignatureCloud signature_of(const Submanifold& m, Flavor flavor, const SamplingOptions& opt) {
  return signature_from(evaluate_samples(m, flavor, opt), opt);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Distinct: return "distinct";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Point = std::vector<double>;

double dist2(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

struct Segment {
  Point p0, m0, p1, m1;
  Point at(double s) const {
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s, h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    Point q(p0.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = h00 * p0[i] + h10 * m0[i] + h01 * p1[i] + h11 * m1[i];
    return q;
  }
};

struct NormalizedCloud {
  std::vector<Point> points;
  std::vector<Segment> segments;
};

NormalizedCloud normalize(const SignatureCloud& c, const Point& lo, const Point& scale) {
  NormalizedCloud out;
  for (const auto& p : c.points) {
    Point q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = (p[i] - lo[i]) / scale[i];
    out.points.push_back(q);
  }
  for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
    if (c.indices[k + 1] != c.indices[k] + 1) continue;
    if (c.slopes[k].size() != c.points[k].size() || c.slopes[k + 1].size() != c.points[k + 1].size()) continue;
    Segment s{out.points[k], c.slopes[k], out.points[k + 1], c.slopes[k + 1]};
    for (std::size_t i = 0; i < scale.size(); ++i) {
      s.m0[i] /= scale[i];
      s.m1[i] /= scale[i];
    }
    out.segments.push_back(std::move(s));
  }
  return out;
}

double distance_to_segment(const Point& q, const Segment& seg) {
  constexpr int kGrid = 16;
  int best = 0;
  double bd = dist2(seg.at(0.0), q);
  for (int i = 1; i <= kGrid; ++i) {
    const double d = dist2(seg.at(static_cast<double>(i) / kGrid), q);
    if (d < bd) {
      bd = d;
      best = i;
    }
  }
  double a = std::max(0.0, (best - 1.0) / kGrid), b = std::min(1.0, (best + 1.0) / kGrid);
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = dist2(seg.at(x1), q), f2 = dist2(seg.at(x2), q);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = dist2(seg.at(x1), q);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = dist2(seg.at(x2), q);
    }
  }
  return std::sqrt(std::min({bd, f1, f2}));
}

double directed(const NormalizedCloud& from, const NormalizedCloud& to) {
  double worst = 0;
  for (const auto& q : from.points) {
    double d = INFINITY;
    for (const auto& p : to.points) d = std::min(d, std::sqrt(dist2(p, q)));
    for (const auto& s : to.segments) {
      if (d == 0) break;
      d = std::min(d, distance_to_segment(q, s));
    }
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace

Comparison equivalent(const SignatureCloud& c1, const SignatureCloud& c2, double tol) {
  if (c1.geometry != c2.geometry || c1.n != c2.n || c1.flavor != c2.flavor || c1.depth != c2.depth)
    throw Error(ErrorCode::IncomparableClouds, "clouds differ in geometry, dimension, flavor or depth");
  if (c1.generators != c2.generators) throw Error(ErrorCode::IncomparableClouds, "generator lists differ");
  if (c1.points.empty() || c2.points.empty()) throw Error(ErrorCode::IncomparableClouds, "empty cloud");
  const std::size_t r = c1.generators.size();
  Point lo(r, INFINITY), hi(r, -INFINITY), scale(r);
  for (const auto* c : {&c1, &c2})
    for (const auto& p : c->points)
      for (std::size_t i = 0; i < r; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
  // Constant coordinates keep their roundoff below the tolerance scale.
  for (std::size_t i = 0; i < r; ++i)
    scale[i] = std::max(hi[i] - lo[i], 1e-6 * std::max({1.0, std::fabs(lo[i]), std::fabs(hi[i])}));
  const auto a = normalize(c1, lo, scale);
  const auto b = normalize(c2, lo, scale);
  Comparison out;
  out.forward = directed(a, b);
  out.backward = directed(b, a);
  out.distance = std::max(out.forward, out.backward);
  out.verdict = out.distance <= tol ? Verdict::Equivalent : out.distance >= 10 * tol ? Verdict::Distinct
                                                                                       : Verdict::Inconclusive;
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string number_list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s + "]";
}

std::string rows(const std::vector<std::vector<double>>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += std::string(i ? ",\n    " : "\n    ") + number_list(v[i]);
  return s + (v.empty() ? "]" : "\n  ]");
}

}  // namespace

std::string to_json(const SignatureCloud& c) {
  std::string s = "{\n";
  s += "  \"geometry\": " + quote(c.geometry) + ",\n";
  s += "  \"n\": " + std::to_string(c.n) + ",\n";
  s += "  \"flavor\": " + quote(c.flavor) + ",\n";
  s += "  \"generators\": [";
  for (std::size_t i = 0; i < c.generators.size(); ++i) s += (i ? ", " : "") + quote(c.generators[i]);
  s += "],\n";
  s += "  \"depth\": " + std::to_string(c.depth) + ",\n";
  s += "  \"window\": " + number_list({c.window_lo, c.window_hi}) + ",\n";
  s += "  \"sample_count\": " + std::to_string(c.sample_count) + ",\n";
  s += "  \"degenerate_count\": " + std::to_string(c.degenerate_count) + ",\n";
  s += "  \"indices\": [";
  for (std::size_t i = 0; i < c.indices.size(); ++i) s += (i ? ", " : "") + std::to_string(c.indices[i]);
  s += "],\n";
  s += "  \"points\": " + rows(c.points) + ",\n";
  s += "  \"slopes\": " + rows(c.slopes) + "\n";
  return s + "}\n";
}

SignatureCloud cloud_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SignatureCloud c;
    c.geometry = j.at("geometry").get<std::string>();
    c.n = j.at("n").get<int>();
    c.flavor = j.at("flavor").get<std::string>();
    c.generators = j.at("generators").get<std::vector<std::string>>();
    c.depth = j.at("depth").get<int>();
    const auto w = j.at("window").get<std::vector<double>>();
    if (w.size() != 2) throw Error(ErrorCode::InvalidArgument, "window: expected [A, B]");
    c.window_lo = w[0];
    c.window_hi = w[1];
    c.sample_count = j.at("sample_count").get<int>();
    c.degenerate_count = j.at("degenerate_count").get<int>();
    c.indices = j.at("indices").get<std::vector<int>>();
    c.points = j.at("points").get<std::vector<std::vector<double>>>();
    c.slopes = j.at("slopes").get<std::vector<std::vector<double>>>();
    if (c.indices.size() != c.points.size() || c.slopes.size() != c.points.size())
      throw Error(ErrorCode::InvalidArgument, "points: indices, points and slopes differ in length");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("cloud json: ") + e.what());
  }
}

}  // namespace sympinv
