#pragma once

#include "waves/dispersion.hpp"
#include "waves/laminar_flow.hpp"

namespace waves {

/// H(z) = z + (1 - z coth z) coth z = coth z - z / sinh^2 z; H(0) = 0.
double h_function(double z);

/// Curvature of the second eigenvalue along the branch and its factorisation
/// mu2 = -A lambda2 with A = 2 kappa^2 tau* H(tau* d) > 0.
struct Mu2Result {
  double mu2;          // canonical -A * lambda2
  double mu2_direct;   // unfactorised expression, kept as a cross-check
  double A;
  double lambda2;
  double H_value;
  double tau_star;
  double kappa;
};

Mu2Result mu2(const FlowParams& p);

/// First-eigenvalue correction and the formal-stability coefficient.
struct FormalStability {
  double mu0;  // sigma(0), first laminar eigenvalue
  double mu01; // order-t correction of the first eigenvalue, identically 0
  double p0;
  double C;    // p0 + gamma'(d; tau*)
  double B;    // (C^2/2) mu0 + mu2
};

FormalStability p0_and_B(const FlowParams& p);
FormalStability p0_and_B(const FlowParams& p, const Mu2Result& m);

struct StabilityReport {
  Mu2Result mu2;
  FormalStability formal;
};

StabilityReport stability_report(const FlowParams& p);

/// (q1^6 - 11 q1^4 + 28 q1^2 - 16) / (8 q1^2): large-depth coefficient of mu2 d / a^2.
double large_depth_mu2_constant();
/// (729 n^6 - 3078 n^4 + 3168 n^2 - 512) / (54 n^2): mu2 d^5 on a = -4/d^2.
double counter_current_mu2_constant();

/// Leading asymptotic form of mu2 in the given regime.
double mu2_asymptotic(const FlowParams& p, AsymptoticRegime regime);

struct NearCriticalB {
  double B_minus1;  // coefficient of (d - d_c)^-1
  double B_0;       // constant term
};

NearCriticalB B_asymptotic_near_critical(double a);

}  // namespace waves
