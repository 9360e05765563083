#include "waves/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/region_mapper.hpp"
#include "waves/stability.hpp"
#include "waves/stokes_expansion.hpp"

namespace waves {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << "FAILED " << what << "; ";
    }
  }
};

std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

const double kT[] = {0.02, 0.01, 0.005};

// ---- criteria ----

void constants(Check& c) {
  const double q1 = large_depth_constant(), n = counter_current_constant();
  const double m = large_depth_mu2_constant(), M = counter_current_mu2_constant();
  c.note << "q1=" << fmt(q1) << " n-=" << fmt(n) << " m=" << fmt(m) << " M=" << fmt(M)
         << " d_c(0)=" << fmt(critical_depth(0.0), 17) << "; ";
  c.expect(std::abs(q1 - 1.915008) <= 1e-6, "q1");
  c.expect(std::abs(n - 1.034021) <= 1e-6, "n-");
  c.expect(std::abs(m + 0.406748) <= 1e-5, "m");
  c.expect(std::abs(M - 4.287466) <= 1e-5, "M");
  c.expect(critical_depth(0.0) == 1.0, "d_c(0) == 1");
}

void vorticity_a0(Check& c) {
  const double v = a0();
  c.note << "a0=" << fmt(v) << "; ";
  c.expect(std::abs(v + 1.01803) <= 1e-3, "|a0 + 1.01803| <= 1e-3");
}

void vorticity_a1(Check& c) {
  const double v = a1();
  c.note << "a1=" << fmt(v) << "; ";
  c.expect(std::abs(v - 0.15196) <= 2e-3, "|a1 - 0.15196| <= 2e-3");
}

void ystar_max(Check& c) {
  const double a = -1000.0;
  const double d = d0(a);
  const double y = relative_stagnation_height(a * d * d);
  c.note << "d0(-1000)=" << fmt(d) << " Y*=" << fmt(y) << "; ";
  c.expect(std::abs(y - 0.314507) <= 0.01, "|Y* - 0.314507| <= 0.01");
}

void identities(Check& c) {
  double worst_mu = 0.0, worst_sigma = 0.0, worst_rp = 0.0;
  for (const FlowParams& p : subcritical_sample(100, 20240901, {})) {
    const Mu2Result m = mu2(p);
    c.expect(m.A > 0.0 && m.H_value > 0.0, "A > 0 at a=" + fmt(p.a) + " d=" + fmt(p.d));
    worst_mu = std::max(worst_mu, std::abs(m.mu2 - m.mu2_direct) / std::abs(m.mu2));
    const double rp = bernoulli(p).slope;
    worst_sigma = std::max(worst_sigma, std::abs(sigma(p, 0.0) + rp) / std::max(1.0, std::abs(rp)));
  }
  for (double a : linspace(-50.0, 50.0, 201))
    worst_rp = std::max(worst_rp, std::abs(bernoulli(FlowParams{a, critical_depth(a)}).slope));
  c.note << "max rel |mu2 + A lambda2|=" << fmt(worst_mu, 3) << " max |sigma(0)+R'|=" << fmt(worst_sigma, 3)
         << " max |R'(d_c)|=" << fmt(worst_rp, 3) << "; ";
  c.expect(worst_mu <= 1e-10, "mu2 = -A lambda2 to 1e-10");
  c.expect(worst_sigma <= 1e-12, "sigma(0) = -R' to 1e-12");
  c.expect(worst_rp <= 1e-10, "R'(d_c) = 0 to 1e-10");
}

double loglog_slope(double t1, double r1, double t2, double r2) {
  return std::log(r1 / r2) / std::log(t1 / t2);
}

void residual_order(Check& c) {
  const SampleDomain domain{-3.0, 3.0, 0.2, 2.0, 0.3, 0.2};
  const double ts[] = {1e-1, 1e-2, 1e-3};
  double worst = INFINITY;
  for (const FlowParams& p : subcritical_sample(20, 777, domain)) {
    BranchResiduals r[3];
    for (int i = 0; i < 3; ++i) r[i] = branch_residuals(make_branch(p, ts[i]));
    auto slope = [&](double BranchResiduals::*field) {
      return std::min(loglog_slope(ts[0], r[0].*field, ts[1], r[1].*field),
                      loglog_slope(ts[1], r[1].*field, ts[2], r[2].*field));
    };
    for (auto [name, field] : {std::pair{"field", &BranchResiduals::field},
                               std::pair{"kinematic", &BranchResiduals::kinematic},
                               std::pair{"bernoulli", &BranchResiduals::bernoulli}}) {
      const double s = slope(field);
      worst = std::min(worst, s);
      c.expect(s >= 3.7, std::string(name) + " slope " + fmt(s, 4) + " at a=" + fmt(p.a) + " d=" + fmt(p.d));
    }
  }
  c.note << "smallest slope over 20 samples x 3 residuals=" << fmt(worst, 5) << "; ";
}

void oracle_agreement(Check& c) {
  const FlowParams points[] = {{0.0, 1.5}, {-2.0, 1.2}, {1.0, 1.1}, {-4.0, 0.9}};
  for (const FlowParams& p : points) {
    const Mu2Verification v = verify_mu2(p, kT, OracleGrid{8, 200});
    bool negative = true;
    for (double mu : v.mu_first) negative = negative && mu < 0.0;
    c.note << "(" << p.a << "," << p.d << "): oracle " << fmt(v.mu2_estimate, 7) << " formula "
           << fmt(v.mu2_formula, 7) << " rel " << fmt(v.relative_error, 3) << "; ";
    c.expect(v.conclusive, "oracle fit conclusive");
    c.expect(v.relative_error <= 0.05, "oracle within 5%");
    c.expect(negative, "first eigenvalue negative");
  }
  // Figures 3 and 4: the single sign change of each slice sits at d0(a).
  for (int fig : {3, 4}) {
    const Table t = figure_table(fig);
    const std::vector<double> as = figure_vorticities(fig);
    for (std::size_t k = 0; k < as.size(); ++k) {
      std::vector<const std::vector<double>*> rows;
      for (const auto& r : t.rows)
        if (r[0] == double(k + 1) && std::isfinite(r[4])) rows.push_back(&r);
      int changes = 0;
      double crossing = NAN;
      for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double y0 = (*rows[i])[4], y1 = (*rows[i + 1])[4];
        if (y0 == 0.0) {
          crossing = (*rows[i])[2];
          continue;
        }
        if (y1 != 0.0 && std::signbit(y0) != std::signbit(y1)) {
          ++changes;
          const double x0 = (*rows[i])[2], x1 = (*rows[i + 1])[2];
          crossing = x0 - y0 * (x1 - x0) / (y1 - y0);
        } else if (y1 == 0.0 && i + 2 < rows.size() &&
                   std::signbit(y0) != std::signbit((*rows[i + 2])[4])) {
          ++changes;
        }
      }
      const double root = d0(as[k]);
      c.expect(changes == 1 && std::abs(crossing - root) <= 1e-6,
               "figure " + std::to_string(fig) + " slice a=" + fmt(as[k]) + " crosses at d0");
    }
  }
  // Figure 5: every Y* row is Y*(a, d0(a)).
  double worst = 0.0;
  for (const auto& r : figure_table(5).rows) {
    const double d = d0(r[0]);
    worst = std::max({worst, std::abs(r[1] - d), std::abs(r[2] - relative_stagnation_height(r[0] * d * d))});
  }
  c.note << "figure 5 max deviation " << fmt(worst, 3) << "; ";
  c.expect(worst <= 1e-6, "figure 5 rows match d0");
}

struct Ladder {
  std::string name;
  std::vector<FlowParams> points;
  std::function<double(const FlowParams&)> approx;
  std::function<double(const FlowParams&)> exact;
};

void asymptotic_convergence(Check& c) {
  auto tau_exact = [](const FlowParams& p) { return solve_dispersion(p).tau_star; };
  auto mu_exact = [](const FlowParams& p) { return mu2(p).mu2; };
  auto tau = [](AsymptoticRegime r) {
    return [r](const FlowParams& p) { return tau_asymptotic(p, r); };
  };
  auto mu = [](AsymptoticRegime r) {
    return [r](const FlowParams& p) { return mu2_asymptotic(p, r); };
  };
  auto near_critical = [](double a, std::initializer_list<double> eps) {
    std::vector<FlowParams> v;
    for (double e : eps) v.push_back({a, critical_depth(a) + e});
    return v;
  };
  auto near_stagnation = [](double a, std::initializer_list<double> eps) {
    std::vector<FlowParams> v;
    for (double e : eps) v.push_back({a, stagnation_depth(a) + e});
    return v;
  };
  auto on_curve = [](std::initializer_list<double> ds) {
    std::vector<FlowParams> v;
    for (double d : ds) v.push_back({-4.0 / (d * d), d});
    return v;
  };
  using R = AsymptoticRegime;
  const std::vector<Ladder> ladders = {
      {"tau large-depth a=1", {{1, 10}, {1, 20}, {1, 40}}, tau(R::LargeDepth), tau_exact},
      {"tau near-critical a=0", near_critical(0, {1e-2, 1e-3, 1e-4}), tau(R::NearCritical), tau_exact},
      {"tau near-critical a=1", near_critical(1, {1e-2, 1e-3, 1e-4}), tau(R::NearCritical), tau_exact},
      {"tau near-critical a=-2", near_critical(-2, {1e-2, 1e-3, 1e-4}), tau(R::NearCritical), tau_exact},
      {"tau near-stagnation a=2", near_stagnation(2, {1e-2, 5e-3, 2.5e-3}), tau(R::NearStagnation), tau_exact},
      {"tau counter-current", on_curve({0.4, 0.2, 0.1}), tau(R::CounterCurrentCurve), tau_exact},
      {"mu2 large-depth a=-1", {{-1, 20}, {-1, 80}, {-1, 320}}, mu(R::LargeDepth), mu_exact},
      {"mu2 near-critical a=0", near_critical(0, {1e-2, 1e-3, 1e-4}), mu(R::NearCritical), mu_exact},
      {"mu2 near-critical a=2", near_critical(2, {1e-2, 1e-3, 1e-4}), mu(R::NearCritical), mu_exact},
      {"mu2 near-critical a=-2", near_critical(-2, {1e-2, 1e-3, 1e-4}), mu(R::NearCritical), mu_exact},
      {"mu2 near-stagnation a=3", near_stagnation(3, {0.04, 0.01, 0.0025}), mu(R::NearStagnation), mu_exact},
      {"mu2 counter-current", on_curve({0.2, 0.1, 0.05}), mu(R::CounterCurrentCurve), mu_exact},
  };
  for (const Ladder& l : ladders) {
    std::vector<double> err;
    for (const FlowParams& p : l.points) {
      const double e = l.exact(p);
      err.push_back(std::abs(l.approx(p) - e) / std::abs(e));
    }
    c.note << l.name << ": " << fmt(err[0], 3) << " " << fmt(err[1], 3) << " " << fmt(err[2], 3) << "; ";
    c.expect(err[1] <= 0.5 * err[0] && err[2] <= 0.5 * err[1], l.name + " halves per step");
  }
}

void sign_structure(Check& c) {
  constexpr int n = 40;
  const std::vector<double> as = linspace(-6.0, 4.0, n);
  std::vector<double> ds(n);
  for (int j = 0; j < n; ++j) ds[j] = 3.0 * (j + 1) / n;

  std::vector<std::vector<int>> b_mask(n, std::vector<int>(n, 0));
  int checked = 0, mismatches = 0, b_mismatches = 0;
  for (int i = 0; i < n; ++i) {
    const double a = as[i];
    const double root = d0(a);
    const BPlusSlice slice = b_plus_boundary(a);
    const double dc = critical_depth(a);
    int changes = 0, last = 0;
    for (int j = 0; j < n; ++j) {
      const FlowParams p{a, ds[j]};
      if (ds[j] <= dc * (1.0 + 1e-6)) continue;
      if (a > 0.0 && std::abs(ds[j] - stagnation_depth(a)) < kStagnationGuard * stagnation_depth(a)) continue;
      const StabilityReport r = stability_report(p);
      const int s = r.mu2.mu2 > 0.0 ? 1 : -1;
      ++checked;
      if (s != (ds[j] < root ? 1 : -1)) ++mismatches;
      if (last != 0 && s != last) ++changes;
      last = s;
      const bool b_pos = r.formal.B > 0.0;
      b_mask[i][j] = b_pos;
      const bool inside = slice.exists && ds[j] > slice.lower && ds[j] < slice.upper;
      if (b_pos != inside) ++b_mismatches;
      if (b_pos && r.mu2.mu2 <= 0.0) ++b_mismatches;
    }
    c.expect(changes <= 1, "single sign change of mu2 in column a=" + fmt(a));
  }
  // Connectivity of the B > 0 cells (8-neighbourhood flood fill).
  int cells = 0, start_i = -1, start_j = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b_mask[i][j]) {
        ++cells;
        if (start_i < 0) start_i = i, start_j = j;
      }
  int reached = 0;
  if (cells > 0) {
    std::vector<std::pair<int, int>> stack{{start_i, start_j}};
    b_mask[start_i][start_j] = 2;
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      ++reached;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          const int u = i + di, v = j + dj;
          if (u < 0 || v < 0 || u >= n || v >= n || b_mask[u][v] != 1) continue;
          b_mask[u][v] = 2;
          stack.emplace_back(u, v);
        }
    }
  }
  c.note << "grid points checked " << checked << ", mu2 sign mismatches " << mismatches
         << ", B+ cells " << cells << " (connected " << reached << "), B+ mismatches " << b_mismatches << "; ";
  c.expect(mismatches == 0, "mu2 sign matches d0 split");
  c.expect(cells > 0 && reached == cells, "B > 0 cells form one connected band");
  c.expect(b_mismatches == 0, "B > 0 cells match the B+ slices");
}

struct CriterionDef {
  int id;
  const char* title;
  double limit;
  void (*body)(Check&);
};

const CriterionDef kCriteria[] = {
    {1, "constants q1, n-, m, M, d_c(0)", 1.0, constants},
    {2, "a0 = -1.01803 +- 1e-3", 10.0, vorticity_a0},
    {3, "a1 = 0.15196 +- 2e-3", 60.0, vorticity_a1},
    {4, "Y*(-1e3, d0) = 0.314507 +- 0.01", 10.0, ystar_max},
    {5, "identity suite", 60.0, identities},
    {6, "expansion residual order >= 3.7", 120.0, residual_order},
    {7, "spectral oracle agreement and figure tables", 300.0, oracle_agreement},
    {8, "asymptotic regime convergence", 60.0, asymptotic_convergence},
    {9, "sign structure of mu2 and B on a 40x40 grid", 120.0, sign_structure},
};

}  // namespace

std::vector<FlowParams> subcritical_sample(std::size_t n, unsigned long long seed,
                                           const SampleDomain& domain) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ua(domain.a_lo, domain.a_hi);
  std::uniform_real_distribution<double> ud(std::log1p(domain.rel_lo), std::log1p(domain.rel_hi));
  std::vector<FlowParams> out;
  while (out.size() < n) {
    const double a = ua(rng);
    const double d = critical_depth(a) * std::exp(ud(rng));
    const FlowParams p{a, d};
    if (std::abs(surface_shear(p).kappa) < domain.kappa_min) continue;
    if (a > 0.0) {
      const double ds = stagnation_depth(a);
      if (std::abs(d - ds) < kStagnationGuard * ds * 10.0) continue;
      if (domain.stagnation_margin > 0.0 && d > (1.0 - domain.stagnation_margin) * ds) continue;
    }
    out.push_back(p);
  }
  return out;
}

CriterionResult run_criterion(int id) {
  for (const auto& def : kCriteria) {
    if (def.id != id) continue;
    CriterionResult r{def.id, def.title, false, "", 0.0, def.limit};
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      def.body(c);
    } catch (const WavesError& e) {
      c.ok = false;
      c.note << "error (" << to_string(e.kind()) << "): " << e.what();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "error: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > def.limit) {
      c.ok = false;
      c.note << "FAILED runtime " << fmt(r.seconds, 3) << " s over " << def.limit << " s; ";
    }
    r.passed = c.ok;
    r.detail = c.note.str();
    return r;
  }
  fail(ErrorKind::Request, "no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const auto& def : kCriteria) out.push_back(run_criterion(def.id));
  return out;
}

std::vector<OracleRow> oracle_survey(const OracleGrid& grid) {
  const std::vector<std::pair<FlowParams, std::string>> points = {
      {{0.0, 1.5}, "theta"},           {{0.0, 2.0}, "theta"},
      {{1.0, 1.1}, "theta"},           {{0.5, 1.5}, "theta"},
      {{-2.0, 1.2}, "upsilon-"},       {{-4.0, 0.9}, "upsilon-"},
      {{-3.0, 1.0}, "upsilon-"},       {{-1.0, 2.5}, "upsilon-"},
      {{0.0, 1.05}, "near-critical"},  {{-2.0, 0.86}, "near-critical"},
  };
  std::vector<OracleRow> rows;
  for (const auto& [p, zone] : points) {
    OracleRow r{p, zone, verify_mu2(p, kT, grid), true, false};
    for (double mu : r.result.mu_first) r.first_negative = r.first_negative && mu < 0.0;
    r.passed = r.result.conclusive && r.result.relative_error <= 0.05 && r.first_negative;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace waves
