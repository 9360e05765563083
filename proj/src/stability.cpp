#include "waves/stability.hpp"

#include <cmath>

#include "critical_forms.hpp"
#include "waves/errors.hpp"
#include "waves/hyperbolic.hpp"
#include "waves/stokes_expansion.hpp"

namespace waves {

double h_function(double z) {
  if (z < 0.0) fail(ErrorKind::Domain, "h_function: z must be >= 0");
  return hyp::coth_minus_z_csch2(z);
}

Mu2Result mu2(const FlowParams& p) {
  const ExpansionCoefficients e = expansion_coefficients(p);
  const double a = p.a, d = p.d, t = e.tau_star, kappa = e.kappa;
  const double z = t * d;
  Mu2Result r{};
  r.tau_star = t;
  r.kappa = kappa;
  r.lambda2 = e.o3.lambda2;
  r.H_value = h_function(z);
  r.A = 2.0 * kappa * kappa * t * r.H_value;
  r.mu2 = -r.A * r.lambda2;
  const double cth = hyp::coth(z);
  r.mu2_direct = -2.0 * kappa * kappa * t * r.lambda2 *
                 (z + (1.0 - (1.0 - a * kappa) * d / (kappa * kappa)) * cth);
  return r;
}

FormalStability p0_and_B(const FlowParams& p) { return p0_and_B(p, mu2(p)); }

FormalStability p0_and_B(const FlowParams& p, const Mu2Result& m) {
  const double a = p.a, d = p.d, k = m.kappa, t = m.tau_star;
  FormalStability f{};
  f.mu0 = sigma(p, 0.0);
  if (f.mu0 == 0.0) fail(ErrorKind::Criticality, "p0_and_B: sigma(0) == 0");
  if (k == 0.0) fail(ErrorKind::Degenerate, "p0_and_B: kappa == 0");
  const double k3 = k * k * k;
  f.mu01 = 0.0;
  f.p0 = (d * d * k3 * t * t - a * d * d - k3 - 2.0 * d * k) / (d * d * k * f.mu0);
  f.C = f.p0 + gamma_slope(t, d);
  f.B = 0.5 * f.C * f.C * f.mu0 + m.mu2;
  return f;
}

StabilityReport stability_report(const FlowParams& p) {
  const Mu2Result m = mu2(p);
  return {m, p0_and_B(p, m)};
}

double large_depth_mu2_constant() {
  const double q = large_depth_constant(), q2 = q * q;
  return (q2 * q2 * q2 - 11.0 * q2 * q2 + 28.0 * q2 - 16.0) / (8.0 * q2);
}

double counter_current_mu2_constant() {
  const double n = counter_current_constant(), n2 = n * n;
  return (729.0 * n2 * n2 * n2 - 3078.0 * n2 * n2 + 3168.0 * n2 - 512.0) / (54.0 * n2);
}

double mu2_asymptotic(const FlowParams& p, AsymptoticRegime regime) {
  const double a = p.a, d = p.d;
  switch (regime) {
    case AsymptoticRegime::LargeDepth:
      if (a == 0.0) fail(ErrorKind::Domain, "large-depth mu2 asymptotics need a != 0");
      return large_depth_mu2_constant() * a * a / d;
    case AsymptoticRegime::NearCritical: {
      const detail::CriticalForms f = detail::critical_forms(a);
      const double dc = f.dc;
      const double eps = d - dc;
      if (!(eps > 0.0)) fail(ErrorKind::Domain, "near-critical mu2 asymptotics need d > d_c");
      const double dc2 = dc * dc, dc3 = dc2 * dc, dc5 = dc3 * dc2, dc6 = dc3 * dc3;
      const double lead = 5.0 * (4.0 - dc3) / (12.0 * dc2 * dc2);
      const double c0 = (47.0 * dc6 + 15.0 * a * dc5 - 361.0 * dc3 - 195.0 * a * dc2 + 422.0) /
                        (-30.0 * dc5 * f.v);
      return lead / eps + c0;
    }
    case AsymptoticRegime::NearStagnation: {
      if (!(a > 0.0)) fail(ErrorKind::Domain, "near-stagnation mu2 asymptotics need a > 0");
      const double eps = d - stagnation_depth(a);
      if (eps == 0.0) fail(ErrorKind::Domain, "near-stagnation mu2 asymptotics need d != d_s");
      const double e2 = eps * eps;
      return -2.0 / (a * a * a * a * e2 * e2);
    }
    case AsymptoticRegime::CounterCurrentCurve: {
      if (std::abs(a * d * d + 4.0) > 1e-9 * 4.0)
        fail(ErrorKind::Domain, "counter-current mu2 asymptotics need a = -4/d^2");
      const double d2 = d * d;
      return counter_current_mu2_constant() / (d2 * d2 * d);
    }
  }
  fail(ErrorKind::Domain, "unknown regime");
}

NearCriticalB B_asymptotic_near_critical(double a) {
  const detail::CriticalForms f = detail::critical_forms(a);
  const double dc = f.dc;
  const double dc2 = dc * dc, dc3 = dc2 * dc, dc5 = dc3 * dc2, dc6 = dc3 * dc3;
  return {(dc3 - 4.0) / (12.0 * dc2 * dc2),
          (13.0 * dc6 + 15.0 * a * dc5 - 209.0 * dc3 - 195.0 * a * dc2 + 358.0) /
              (30.0 * dc5 * f.v)};
}

}  // namespace waves
