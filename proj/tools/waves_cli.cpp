// waves: command-line front end over the waves_core library.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "waves/acceptance.hpp"
#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/region_mapper.hpp"
#include "waves/reporting.hpp"
#include "waves/spectral_oracle.hpp"
#include "waves/stokes_expansion.hpp"

namespace {

using namespace waves;

enum Exit { kOk = 0, kUsage = 2, kSolver = 3, kVerify = 4 };

struct Options {
  std::optional<double> a, d, t;
  double tol = 0.0;
  std::string grid = "8x200";
  std::string out;
  std::string format;
  std::string curve;
  int figure = 0;
  bool quick = false;
  double a_min = NAN, a_max = NAN;
  int points = 400;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OracleGrid parse_grid(const std::string& s) {
  static const std::regex pattern(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw UsageError("--grid must look like 8x200 (n_modes x n_y)");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

// Accepts "a=0 d=2" as well as "--a=0 --d=2".
std::vector<std::string> normalise(int argc, char** argv) {
  static const std::regex key_value(R"([A-Za-z_][A-Za-z0-9_-]*=.*)");
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string s = argv[i];
    if (s.rfind("-", 0) != 0 && std::regex_match(s, key_value)) s = "--" + s;
    args.push_back(std::move(s));
  }
  return args;
}

void print_error(const char* kind, const std::string& message) {
  Json j{{"error", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

bool is_precondition(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain:
    case ErrorKind::OutOfBranch:
    case ErrorKind::Degenerate:
    case ErrorKind::IllConditioned:
    case ErrorKind::Request:
      return true;
    default:
      return false;
  }
}

FlowParams require_flow(const Options& o) {
  if (!o.a || !o.d) throw UsageError("compute needs both a and d");
  const FlowParams p = flow(*o.a, *o.d);
  if (classify(p) != DepthClass::Subcritical) {
    std::ostringstream os;
    os << "precondition d > d_c(a) violated: d=" << p.d << ", d_c=" << critical_depth(p.a);
    fail(ErrorKind::OutOfBranch, os.str());
  }
  return p;
}

std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

int run_compute(const Options& o) {
  const std::string fmt = format_or(o, "json");
  if (fmt != "json") throw UsageError("compute emits json only");
  const FlowParams p = require_flow(o);
  Json j = compute_report(p, o.tol > 0.0 ? o.tol : 1e-14);
  if (o.t) {
    if (!(*o.t >= 0.0)) throw UsageError("t must be >= 0");
    const BranchState s = make_branch(p, *o.t);
    const BranchResiduals r = branch_residuals(s);
    Json branch{{"t", *o.t},
                {"lambda", branch_lambda(s)},
                {"residual_field", r.field},
                {"residual_kinematic", r.kinematic},
                {"residual_bernoulli", r.bernoulli}};
    const OracleGrid g = parse_grid(o.grid);
    const EigenEstimate e = eigenvalues(assemble(s, g.n_modes, g.n_y), 3);
    branch["oracle_grid"] = {g.n_modes, g.n_y};
    branch["oracle_eigenvalues"] = std::vector<double>(e.mu_values.begin(), e.mu_values.end());
    j["branch"] = std::move(branch);
  }
  write_output(o.out, j.dump(2) + "\n");
  return kOk;
}

void emit_table(const Options& o, const Table& t, const PlotSpec* plot) {
  const std::string fmt = format_or(o, "csv");
  if (fmt == "csv") {
    write_output(o.out, to_csv(t));
  } else if (fmt == "json") {
    write_output(o.out, to_json(t).dump(2) + "\n");
  } else if (fmt == "svg") {
    if (!plot) throw UsageError("svg is available for figures only");
    write_output(o.out, to_svg(t, *plot));
  } else {
    throw UsageError("--format must be csv, json or svg");
  }
}

int run_curve(const Options& o) {
  const CurveId id = parse_curve(o.curve);
  if (o.points < 1) throw UsageError("--points must be >= 1");
  std::vector<double> grid;
  if (id == CurveId::YStarOnD0) {
    const double lo = std::isnan(o.a_min) ? -1000.0 : o.a_min;
    const double hi = std::isnan(o.a_max) ? a0() : o.a_max;
    grid = logspace(lo, hi, o.points);
  } else {
    grid = linspace(std::isnan(o.a_min) ? -6.0 : o.a_min, std::isnan(o.a_max) ? 4.0 : o.a_max, o.points);
  }
  const RegionCurve c = id == CurveId::YStarOnD0 ? ystar_on_d0(grid) : sample_curve(id, grid);
  const std::string fmt = format_or(o, "csv");
  if (fmt == "csv") {
    write_output(o.out, to_csv(c));
    return kOk;
  }
  Table t{{"a", "d", "value", "converged"}, {}};
  for (const auto& s : c.samples) t.rows.push_back({s.a, s.d, s.value, s.converged ? 1.0 : 0.0});
  emit_table(o, t, nullptr);
  return kOk;
}

int run_figure(const Options& o) {
  if (o.figure < 1 || o.figure > 6) throw UsageError("figure must be 1..6");
  const Table t = figure_table(o.figure);
  const PlotSpec plot = figure_plot(o.figure);
  emit_table(o, t, &plot);
  return kOk;
}

int run_verify(const Options& o) {
  const std::string fmt = format_or(o, "text");
  if (fmt != "text" && fmt != "json") throw UsageError("verify emits text or json");
  const OracleGrid grid = parse_grid(o.grid);
  const auto results = run_acceptance();
  std::vector<OracleRow> survey;
  if (!o.quick) survey = oracle_survey(grid);

  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  for (const auto& r : survey) ok = ok && r.passed;

  if (fmt == "json") {
    Json j{{"criteria", Json::array()}, {"oracle", Json::array()}, {"passed", ok}};
    for (const auto& r : results)
      j["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                               {"seconds", r.seconds}, {"detail", r.detail}});
    for (const auto& r : survey)
      j["oracle"].push_back({{"a", r.params.a}, {"d", r.params.d}, {"zone", r.zone},
                             {"oracle_mu2", r.result.mu2_estimate}, {"formula_mu2", r.result.mu2_formula},
                             {"relative_error", r.result.relative_error}, {"passed", r.passed}});
    write_output(o.out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    char line[512];
    for (const auto& r : results) {
      std::snprintf(line, sizeof line, "criterion %d %-4s %7.2fs  %s\n    %s\n", r.id,
                    r.passed ? "PASS" : "FAIL", r.seconds, r.title.c_str(), r.detail.c_str());
      os << line;
    }
    if (!survey.empty()) {
      os << "\noracle survey (n_modes=" << grid.n_modes << ", n_y=" << grid.n_y << ")\n";
      std::snprintf(line, sizeof line, "%8s %8s %-14s %14s %14s %10s\n", "a", "d", "zone", "oracle",
                    "formula", "rel.err");
      os << line;
      for (const auto& r : survey) {
        std::snprintf(line, sizeof line, "%8.3f %8.3f %-14s %14.7g %14.7g %10.2e %s\n", r.params.a,
                      r.params.d, r.zone.c_str(), r.result.mu2_estimate, r.result.mu2_formula,
                      r.result.relative_error, r.passed ? "PASS" : "FAIL");
        os << line;
      }
    }
    os << (ok ? "all checks passed\n" : "verification FAILED\n");
    write_output(o.out, os.str());
  }
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady water waves with constant vorticity: dispersion, Stokes branch, stability"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--format", o.format, "csv, json or svg");
  };

  auto* compute = app.add_subcommand("compute", "All quantities of one laminar flow as JSON");
  compute->add_option("--a", o.a, "Vorticity")->required();
  compute->add_option("--d", o.d, "Depth")->required();
  compute->add_option("--t", o.t, "Also evaluate the truncated branch at amplitude t");
  compute->add_option("--tol", o.tol, "Dispersion solver tolerance");
  compute->add_option("--grid", o.grid, "Oracle grid n_modes x n_y used with --t");
  add_common(compute);

  auto* curve = app.add_subcommand("curve", "Sample a curve of the (a, d) plane");
  curve->add_option("id", o.curve, "critical-depth | stagnation-depth | d0 | b-plus-boundary | ystar-on-d0")
      ->required();
  curve->add_option("--a-min", o.a_min, "Smallest a");
  curve->add_option("--a-max", o.a_max, "Largest a");
  curve->add_option("--points", o.points, "Number of a samples");
  add_common(curve);

  auto* figure = app.add_subcommand("figure", "Table (or SVG plot) behind figure 1..6");
  figure->add_option("n", o.figure, "Figure number")->required();
  add_common(figure);

  auto* verify = app.add_subcommand("verify", "Acceptance suite and oracle survey");
  verify->add_flag("--quick", o.quick, "Acceptance criteria only");
  verify->add_option("--grid", o.grid, "Oracle grid n_modes x n_y for the survey");
  add_common(verify);

  std::vector<std::string> args = normalise(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kUsage;
  }

  try {
    if (*compute) return run_compute(o);
    if (*curve) return run_curve(o);
    if (*figure) return run_figure(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    print_error("usage", e.what());
    return kUsage;
  } catch (const WavesError& e) {
    print_error(std::string(to_string(e.kind())).c_str(), e.what());
    return is_precondition(e.kind()) ? kUsage : kSolver;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kSolver;
  }
  return kUsage;
}
