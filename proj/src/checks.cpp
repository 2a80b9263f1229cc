#include "sympinv/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "sympinv/dispatch.hpp"
#include "sympinv/inv_contact.hpp"
#include "sympinv/inv_curves.hpp"
#include "sympinv/inv_extended.hpp"
#include "sympinv/inv_functions.hpp"
#include "sympinv/rank.hpp"

namespace sympinv {

bool CheckReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

Flavor default_flavor(Geometry g) {
  switch (g) {
    case Geometry::ContactCurve:
    case Geometry::ContactSurface:
    case Geometry::ContactFunction: return Flavor::ContactCSp;
    default: return Flavor::Sp;
  }
}

namespace {

double rel_diff(double a, double b) { return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}); }

bool is_degeneracy(const Error& e) {
  switch (e.code()) {
    case ErrorCode::OrderExhausted:
    case ErrorCode::InvalidArgument: return false;
    default: return true;
  }
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 4);
  std::bernoulli_distribution sign(0.5);
  const Rational r(num(rng), den(rng));
  return sign(rng) ? r : Rational(-r);
}

MultiJet<Rational> random_rational_jet(int nvars, int order, const std::vector<Rational>& base, std::mt19937_64& rng) {
  auto j = MultiJet<Rational>::zero(nvars, order, std::make_shared<const std::vector<Rational>>(base));
  for (std::size_t k = 0; k < j.size(); ++k) j[k] = random_rational(rng);
  return j;
}

FunctionJet<Rational> random_rational_function_jet(int nvars, int order, std::mt19937_64& rng) {
  FunctionJet<Rational> f;
  for (int i = 0; i < nvars; ++i) f.base.push_back(random_rational(rng));
  f.u = random_rational_jet(nvars, order, f.base, rng);
  return f;
}

GraphJet<Rational> random_rational_graph_jet(const GeometryInfo& info, int order, std::mt19937_64& rng) {
  GraphJet<Rational> g;
  g.ambient_dim = static_cast<int>(info.names.size());
  g.indep = info.indep;
  g.dep = info.dep;
  for (std::size_t i = 0; i < info.indep.size(); ++i) g.base.push_back(random_rational(rng));
  for (std::size_t j = 0; j < info.dep.size(); ++j)
    g.u.push_back(random_rational_jet(static_cast<int>(info.indep.size()), order, g.base, rng));
  return g;
}

int ambient_dim(const GeometryInfo& info) { return static_cast<int>(info.names.size()) - (info.function ? 1 : 0); }

// Retry `draw` until it produces a sample on which `use` succeeds.
template <class Draw, class Use>
bool with_generic(std::mt19937_64& rng, Draw&& draw, Use&& use, int attempts = 50) {
  for (int a = 0; a < attempts; ++a) {
    auto jet = draw(rng);
    try {
      use(jet);
      return true;
    } catch (const Error& e) {
      if (!is_degeneracy(e)) throw;
    }
  }
  return false;
}

// Lowest jet order at which depth-1 derived invariants are available.
int working_order(const GeometryInfo& info, Flavor flavor, std::mt19937_64& rng) {
  for (int K = 2; K <= 10; ++K) {
    for (int a = 0; a < 20; ++a) {
      try {
        if (info.function)
          derived_values(invariants_of(info, flavor, random_function_jet(ambient_dim(info), K, rng)), 1);
        else
          derived_values(invariants_of(info, flavor, random_graph_jet(ambient_dim(info), info.indep, info.dep, K, rng)), 1);
        return K;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::OrderExhausted) break;
        if (!is_degeneracy(e)) throw;
      }
    }
  }
  throw Error(ErrorCode::OrderExhausted, "no working jet order up to 10");
}

CheckLine residual_line(const std::string& name, double worst, double tol, const std::string& detail = {}) {
  return {name, worst, tol, false, worst <= tol, detail};
}

CheckLine count_line(const std::string& name, int observed, int expected) {
  return {name, double(observed), double(expected), true, observed == expected, {}};
}

CheckLine observed_line(const std::string& name, int observed) {
  return {name, double(observed), -1.0, true, true, "no reference value"};
}

using FloatSuite = std::function<std::vector<Residual<double>>(std::mt19937_64&)>;
using ExactSuite = std::function<std::vector<Residual<Rational>>(std::mt19937_64&)>;

void run_residuals(CheckReport& report, const std::vector<std::string>& labels, const FloatSuite& fl,
                   const ExactSuite& ex, int trials, std::uint64_t seed, double tol, bool exact,
                   const std::vector<std::string>& details = {}) {
  std::mt19937_64 rng(seed);
  std::vector<double> worst(labels.size(), 0.0);
  int used = 0;
  for (int t = 0; t < trials * 4 && used < trials; ++t) {
    std::vector<Residual<double>> r;
    try {
      r = fl(rng);
    } catch (const Error& e) {
      if (!is_degeneracy(e)) throw;
      continue;
    }
    ++used;
    for (std::size_t i = 0; i < labels.size(); ++i) worst[i] = std::max(worst[i], r[i].normalized());
  }
  std::vector<double> exact_worst(labels.size(), 0.0);
  int exact_used = 0;
  if (exact) {
    for (int t = 0; t < 40 && exact_used < 10; ++t) {
      std::vector<Residual<Rational>> r;
      try {
        r = ex(rng);
      } catch (const Error& e) {
        if (!is_degeneracy(e)) throw;
        continue;
      }
      ++exact_used;
      for (std::size_t i = 0; i < labels.size(); ++i)
        exact_worst[i] = std::max(exact_worst[i], std::fabs(to_double(r[i].sum)));
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string d = std::to_string(used) + " generic jets";
    if (i < details.size() && !details[i].empty()) d += "; " + details[i];
    auto line = residual_line(labels[i], worst[i], tol, d);
    if (used < trials) {
      line.pass = false;
      line.detail += " (too few generic jets)";
    }
    report.add(line);
    if (exact) {
      auto ex_line = residual_line(labels[i] + " (rational)", exact_worst[i], 0.0,
                                   std::to_string(exact_used) + " polynomial jets, exact arithmetic");
      ex_line.pass = exact_used >= 10 && exact_worst[i] == 0.0;
      report.add(ex_line);
    }
  }
}

}  // namespace

namespace {

struct InvarianceTally {
  double worst_exported = 0.0, worst_derived = 0.0;
  int jets_used = 0, short_jets = 0;
  long comparisons = 0;
};

template <class Jet, class Draw>
void run_invariance(const GeometryInfo& info, Flavor flavor, int jets, int elements, std::mt19937_64& rng, Draw&& draw,
                    InvarianceTally& t) {
  const auto values = [&](const Jet& jet, std::size_t& exported) {
    const auto set = invariants_of(info, flavor, jet);
    exported = set.values.size();
    return derived_values(set, 1);
  };
  for (int j = 0; j < jets; ++j) {
    Jet base;
    std::vector<double> a;
    std::size_t exported = 0;
    if (!with_generic(rng, draw, [&](const Jet& jet) {
          a = values(jet, exported);
          base = jet;
        }))
      continue;
    int used = 0;
    for (int e = 0; e < 8 * elements && used < elements; ++e) {
      const auto h = random_group_element(info.space, flavor, rng());
      if constexpr (std::is_same_v<Jet, GraphJet<double>>) {
        if (pushforward_conditioning(base, h) < 0.3) continue;
      }
      std::vector<double> b;
      try {
        std::size_t ignored = 0;
        b = values(pushforward(base, h), ignored);
      } catch (const Error& err) {
        if (!is_degeneracy(err)) throw;
        continue;
      }
      ++used;
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto& w = i < exported ? t.worst_exported : t.worst_derived;
        w = std::max(w, rel_diff(a[i], b[i]));
      }
      t.comparisons += static_cast<long>(a.size());
    }
    if (used < elements) ++t.short_jets;
    ++t.jets_used;
  }
}

}  // namespace

CheckReport invariance_suite(const GeometryInfo& info, Flavor flavor, int jets, int elements, std::uint64_t seed,
                             double tol) {
  require_supported(info, flavor);
  CheckReport report;
  report.suite = std::string("invariance ") + to_string(info.geometry) + " n=" + std::to_string(info.n) + " " +
                 to_string(flavor);
  std::mt19937_64 rng(seed);
  const int K = working_order(info, flavor, rng);
  const int d = ambient_dim(info);
  InvarianceTally t;
  if (info.function)
    run_invariance<FunctionJet<double>>(info, flavor, jets, elements, rng,
                                        [&](std::mt19937_64& r) { return random_function_jet(d, K, r); }, t);
  else
    run_invariance<GraphJet<double>>(
        info, flavor, jets, elements, rng,
        [&](std::mt19937_64& r) { return random_graph_jet(d, info.indep, info.dep, K, r); }, t);
  const std::string detail = std::to_string(t.jets_used) + " jets x " + std::to_string(elements) + " elements, " +
                             std::to_string(K) + "-jets";
  const bool enough = t.jets_used == jets && t.short_jets == 0;
  auto exported = residual_line("exported invariants unchanged", t.worst_exported, tol, detail);
  auto derived = residual_line("first derivatives nabla_j(I) unchanged", t.worst_derived, kDerivedTolerance,
                               std::to_string(t.comparisons) + " comparisons in total");
  for (auto* l : {&exported, &derived})
    if (!enough) {
      l->pass = false;
      l->detail += " (too few generic samples)";
    }
  report.add(exported);
  report.add(derived);
  return report;
}

CheckReport syzygy_suite(const GeometryInfo& info, Flavor flavor, int trials, std::uint64_t seed, bool exact,
                         double tol) {
  require_supported(info, flavor);
  CheckReport report;
  report.suite = std::string("syzygy ") + to_string(info.geometry) + " n=" + std::to_string(info.n) + " " +
                 to_string(flavor);
  const int d = ambient_dim(info);
  const auto fn = [&](auto&& f, int order) -> std::pair<FloatSuite, ExactSuite> {
    return {[=](std::mt19937_64& r) { return f(random_function_jet(d, order, r)); },
            [=](std::mt19937_64& r) { return f(random_rational_function_jet(d, order, r)); }};
  };
  const std::vector<std::string> R3{"R1", "R2", "R3"};
  if (info.geometry == Geometry::Function && info.n == 1 && flavor == Flavor::Sp) {
    auto [fl, ex] = fn([](const auto& f) { return function_syzygies_n1(f); }, 3);
    run_residuals(report, R3, fl, ex, trials, seed, tol, exact);
  } else if (info.geometry == Geometry::Function && flavor == Flavor::CSp) {
    auto [fl, ex] = fn([](const auto& f) { return csp_function_syzygies(f); }, 4);
    run_residuals(report, {"R1", "R2", "R3", "R4"}, fl, ex, trials, seed, tol, exact);
  } else if (info.geometry == Geometry::Function && flavor == Flavor::ASp) {
    auto [fl, ex] = fn([](const auto& f) { return asp_function_syzygies(f); }, 4);
    run_residuals(report, {"R1", "R2", "R3", "nabla1'(I0) = I2c"}, fl, ex, trials, seed, tol, exact);
  } else if (info.geometry == Geometry::ContactSurface) {
    FloatSuite fl = [info](std::mt19937_64& r) {
      return contact_surface_syzygies(random_graph_jet(3, info.indep, info.dep, 4, r));
    };
    ExactSuite ex = [info](std::mt19937_64& r) {
      return contact_surface_syzygies(random_rational_graph_jet(info, 4, r));
    };
    run_residuals(report, {"R1", "R2"}, fl, ex, trials, seed, tol, exact);
  } else if (info.geometry == Geometry::ContactFunction) {
    auto [fl, ex] = fn([](const auto& f) { return contact_syzygy_suite(f); }, 3);
    std::vector<std::string> details(7);
    details[6] = "with +4 I2f nabla2(I0); the -4 form fails";
    run_residuals(report, {"R1", "R2", "R3", "R4", "R5", "R6", "R7"}, fl, ex, trials, seed, tol, exact, details);
  }
  return report;
}

CheckReport reduction_suite(const GeometryInfo& info, Flavor flavor, int trials, std::uint64_t seed, double tol) {
  require_supported(info, flavor);
  CheckReport report;
  report.suite = std::string("reduction ") + to_string(info.geometry) + " n=" + std::to_string(info.n) + " " +
                 to_string(flavor);
  const int d = ambient_dim(info);
  if (info.geometry == Geometry::Function && info.n == 1 && flavor == Flavor::Sp) {
    run_residuals(
        report, {"I1 = nabla1(I0)", "I2a = nabla1^2(I0) - nabla1(I0)", "I2b = -nabla2 nabla1(I0)"},
        [d](std::mt19937_64& r) { return function_reductions_n1(random_function_jet(d, 3, r)); },
        [d](std::mt19937_64& r) { return function_reductions_n1(random_rational_function_jet(d, 3, r)); }, trials, seed,
        tol, false);
  } else if (info.geometry == Geometry::Curve && info.n == 2 && flavor == Flavor::Sp) {
    std::mt19937_64 rng(seed);
    int worst_a = -1, worst_b = 4;
    for (int t = 0; t < trials; ++t) {
      const auto g = random_graph_jet(4, info.indep, info.dep, 4, rng);
      const auto seeds = graph_coordinates_of_degree(g, -1, 3);
      auto with = [&](const std::string& extra) {
        return jacobian_rank(
            [&](const GraphJet<DualD>& jd) {
              const auto inv = curve_invariants_n2(info.space, curve_from_graph(jd));
              const auto& i2 = inv["I2"];
              return std::vector<DualD>{i2.value(), inv.derivation("nabla").apply(i2).value(), inv[extra].value()};
            },
            g, seeds);
      };
      worst_a = std::max(worst_a, with("I3a"));
      worst_b = std::min(worst_b, with("I3b"));
    }
    auto a = count_line("rank {I2, nabla(I2), I3a} (I3a dependent)", worst_a, 2);
    a.detail = "largest rank over " + std::to_string(trials) + " 4-jets";
    report.add(a);
    auto b = count_line("rank {I2, nabla(I2), I3b} (control)", worst_b, 3);
    b.detail = "smallest rank over " + std::to_string(trials) + " 4-jets";
    report.add(b);
  } else if (info.geometry == Geometry::ContactSurface) {
    const auto gi = info;
    run_residuals(report,
                  {"I1 = nabla1(I0)/2", "I2a = nabla1(I1) - I1", "I2b = -(nabla2(I1) + I2a - I1)/2",
                   "I2a' = nabla1(I1') + 2 I1'^2 - I1'", "I2b' = -(nabla1 + nabla2)(I1')/2 - I1'^2 + I1'"},
                  [gi](std::mt19937_64& r) { return contact_surface_reductions(random_graph_jet(3, gi.indep, gi.dep, 3, r)); },
                  [gi](std::mt19937_64& r) { return contact_surface_reductions(random_rational_graph_jet(gi, 3, r)); },
                  trials, seed, tol, false);
  } else if (info.geometry == Geometry::ContactFunction) {
    const auto red = [](const auto& f) {
      const auto inv = contact_function_invariants(f);
      const auto& I0 = inv["I0"];
      const auto a = inv.derivation("nabla1").apply(I0);
      const auto b = inv.derivation("nabla2").apply(I0);
      using S = std::decay_t<decltype(I0.value())>;
      return std::vector<Residual<S>>{residual_of(std::vector{inv["I1a"], -b}),
                                      residual_of(std::vector{inv["I1b"], -a, -b})};
    };
    run_residuals(
        report, {"I1a = nabla2(I0)", "I1b = (nabla1 + nabla2)(I0)"},
        [red](std::mt19937_64& r) { return red(random_function_jet(3, 3, r)); },
        [red](std::mt19937_64& r) { return red(random_rational_function_jet(3, 3, r)); }, trials, seed, tol, false);
  }
  return report;
}

CheckReport counting_suite(const GeometryInfo& info, Flavor flavor, std::uint64_t seed) {
  CheckReport report;
  report.suite = std::string("counting ") + to_string(info.geometry) + " n=" + std::to_string(info.n) + " " +
                 to_string(flavor);
  const int n = info.n;
  int kmax = 3;
  if (info.geometry == Geometry::Curve && flavor == Flavor::Sp) kmax = 2 * n;
  std::vector<int> orbit, codim;
  for (int k = 0; k <= kmax; ++k) {
    orbit.push_back(orbit_dimension(info, flavor, k, seed + static_cast<std::uint64_t>(k)));
    codim.push_back(jet_space_dimension(info, k) - orbit.back());
  }
  const auto h = [&](int k) { return codim[static_cast<std::size_t>(k)] - (k ? codim[static_cast<std::size_t>(k - 1)] : 0); };
  const auto orbit_name = [](int k) { return "orbit dim J^" + std::to_string(k); };
  const auto h_name = [](int k) { return "h" + std::to_string(k); };

  if (info.geometry == Geometry::Curve && flavor == Flavor::Sp) {
    for (int k = 0; k <= kmax; ++k) {
      const int expected = std::min(2 * (k + 1) * n - k * (k + 1) / 2, n * (2 * n + 1));
      report.add(count_line(orbit_name(k), orbit[static_cast<std::size_t>(k)], expected));
    }
    for (int k = 1; k <= kmax; ++k) report.add(count_line(h_name(k), h(k), k - 1));
  } else if (info.geometry == Geometry::Function && n == 1 && flavor == Flavor::Sp) {
    for (int k = 0; k <= kmax; ++k) report.add(observed_line(orbit_name(k), orbit[static_cast<std::size_t>(k)]));
    report.add(count_line("codim J^1", codim[1], 2));
  } else if (info.geometry == Geometry::Hypersurface && n == 2 && flavor == Flavor::Sp) {
    report.add(count_line("orbit dim J^1 (open orbit)", orbit[1], jet_space_dimension(info, 1)));
    report.add(count_line(h_name(2), h(2), 3));
    report.add(count_line(h_name(3), h(3), 10));
  } else if (info.geometry == Geometry::Surface && flavor == Flavor::Sp) {
    report.add(count_line(h_name(2), h(2), 4));
    report.add(count_line(h_name(3), h(3), 8));
  } else if (info.geometry == Geometry::ContactFunction && flavor == Flavor::ContactCSp) {
    report.add(count_line(h_name(0), h(0), 1));
    report.add(count_line(h_name(1), h(1), 2));
    for (int k = 2; k <= kmax; ++k) report.add(observed_line(h_name(k), h(k)));
  } else {
    for (int k = 0; k <= kmax; ++k) report.add(observed_line(orbit_name(k), orbit[static_cast<std::size_t>(k)]));
    for (int k = 0; k <= kmax; ++k) report.add(observed_line(h_name(k), h(k)));
  }
  return report;
}

std::string format_report(const CheckReport& r) {
  std::string s;
  char buf[256];
  for (const auto& l : r.lines) {
    if (l.count) {
      if (l.expected < 0)
        std::snprintf(buf, sizeof buf, "  %s  %-50s observed %d\n", "INFO", l.name.c_str(), int(l.observed));
      else
        std::snprintf(buf, sizeof buf, "  %s  %-50s observed %d  expected %d\n", l.pass ? "PASS" : "FAIL",
                      l.name.c_str(), int(l.observed), int(l.expected));
    } else {
      std::snprintf(buf, sizeof buf, "  %s  %-50s max residual %.3e  tol %.1e\n", l.pass ? "PASS" : "FAIL",
                    l.name.c_str(), l.observed, l.expected);
    }
    s += buf;
    if (!l.detail.empty() && !(l.count && l.expected < 0)) s += "        " + l.detail + "\n";
  }
  const auto passed = std::count_if(r.lines.begin(), r.lines.end(), [](const CheckLine& l) { return l.pass; });
  if (r.lines.empty()) return s + r.suite + ": no identities displayed for this combination\n";
  std::snprintf(buf, sizeof buf, "%s: %s (%ld/%zu)\n", r.suite.c_str(), r.pass() ? "PASS" : "FAIL", long(passed),
                r.lines.size());
  return s + buf;
}

}  // namespace sympinv
