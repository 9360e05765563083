#pragma once

#include <string>
#include <vector>

#include "waves/laminar_flow.hpp"
#include "waves/spectral_oracle.hpp"

namespace waves {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; exceeding it fails the criterion
};

/// Acceptance criteria 1 to 9 in order.
std::vector<CriterionResult> run_acceptance();

/// One criterion by number.
CriterionResult run_criterion(int id);

/// Subcritical (a, d) drawn from a fixed seed: a uniform on [a_lo, a_hi],
/// d = d_c exp(u) with u uniform on [log(1 + rel_lo), log(1 + rel_hi)],
/// kept when |kappa| >= kappa_min and, for a > 0, d < (1 - stagnation_margin) d_s.
struct SampleDomain {
  double a_lo = -10.0, a_hi = 10.0;
  double rel_lo = 1e-3, rel_hi = 3.0;
  double kappa_min = 0.05;
  double stagnation_margin = 0.0;
};
std::vector<FlowParams> subcritical_sample(std::size_t n, unsigned long long seed,
                                           const SampleDomain& domain);

struct OracleRow {
  FlowParams params;
  std::string zone;
  Mu2Verification result;
  bool first_negative = false;
  bool passed = false;
};

/// Oracle against formula on points spanning Theta, Upsilon- and the
/// near-critical zone.
std::vector<OracleRow> oracle_survey(const OracleGrid& grid = {});

}  // namespace waves
