#pragma once

#include <string_view>

#include "waves/laminar_flow.hpp"

namespace waves {

/// Root of the dispersion function together with solver diagnostics.
struct DispersionSolution {
  double tau_star = 0.0;     // bifurcation wavenumber
  double lambda_star = 0.0;  // period 2 pi / tau_star
  int iterations = 0;
  double residual = 0.0;     // |sigma(tau_star)|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

enum class AsymptoticRegime { LargeDepth, NearCritical, NearStagnation, CounterCurrentCurve };

std::string_view to_string(AsymptoticRegime r) noexcept;
AsymptoticRegime parse_regime(std::string_view name);

/// sigma(tau) = kappa^2 tau coth(tau d) + a kappa - 1, with sigma(0) = -R'(d).
double sigma(const FlowParams& p, double tau);

/// sigma'(tau) = kappa^2 (coth z - z / sinh^2 z), z = tau d. Throws Degenerate when kappa = 0.
double sigma_prime(const FlowParams& p, double tau);

/// gamma'(d; tau) = tau coth(tau d), the surface slope of sinh(tau y)/sinh(tau d).
double gamma_slope(double tau, double d);

/// Relative half-width of the refused band around d_s(a) for a > 0.
inline constexpr double kStagnationGuard = 1e-6;

/// Unique positive root of sigma for a subcritical flow.
DispersionSolution solve_dispersion(const FlowParams& p, double tol = 1e-14);

/// Root q1 of q = 2 tanh(q).
double large_depth_constant();
/// Root n of n = (4/3) tanh(n).
double counter_current_constant();

/// Leading terms of the tau* expansion in the given regime.
double tau_asymptotic(const FlowParams& p, AsymptoticRegime regime);

}  // namespace waves
