#pragma once

#include <optional>
#include <string_view>

namespace waves {

/// The (a, d) coordinate of every computation: constant vorticity a and
/// laminar depth d > 0.
struct FlowParams {
  double a = 0.0;
  double d = 1.0;
};

/// Validated constructor; throws Domain for d <= 0 or non-finite input.
FlowParams flow(double a, double d);

enum class DepthClass { Subcritical, Critical, Supercritical };

/// Regions of the (a, d) plane separated by d_c(a) and d_s(a).
enum class RegionTag { Theta, UpsilonMinus, UpsilonPlus, Boundary };

std::string_view to_string(DepthClass c) noexcept;
std::string_view to_string(RegionTag t) noexcept;

/// U(y) = -(a/2) y (y - d) + y/d on 0 <= y <= d.
double stream_profile(const FlowParams& p, double y);

struct Bernoulli {
  double value;      // R(d)
  double slope;      // R'(d)
  double curvature;  // R''(d)
};

Bernoulli bernoulli(const FlowParams& p);

/// Minimiser of R over d > 0. Closed form through the resolvent cubic,
/// polished by one Newton step on R'.
double critical_depth(double a);

/// sqrt(2/|a|); +infinity for a = 0.
double stagnation_depth(double a);

struct SurfaceShear {
  double kappa;  // U'(d) = 1/d - a d / 2
  double rho0;   // 1 - a kappa
};

SurfaceShear surface_shear(const FlowParams& p);

/// Sub/super-criticality relative to d_c(a); |d - d_c| <= 1e-12 d_c is Critical.
DepthClass classify(const FlowParams& p);

/// Region of the (a, d) plane; d must exceed d_c(a).
RegionTag region(const FlowParams& p);

struct StagnationPoint {
  std::optional<double> y_star;  // height where U' = 0, none when a = 0
  std::optional<double> Y_star;  // y_star / d = (s + 2) / (2 s), s = a d^2
  RegionTag tag;
};

StagnationPoint stagnation_height(const FlowParams& p);

/// Y*(s) = (s + 2) / (2 s) as a function of s = a d^2 alone.
double relative_stagnation_height(double s);

}  // namespace waves
