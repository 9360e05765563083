#include "waves/laminar_flow.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "waves/errors.hpp"

namespace waves {

namespace {

constexpr double kBoundaryBand = 1e-12;

}  // namespace

std::string_view to_string(DepthClass c) noexcept {
  switch (c) {
    case DepthClass::Subcritical: return "subcritical";
    case DepthClass::Critical: return "critical";
    case DepthClass::Supercritical: return "supercritical";
  }
  return "?";
}

std::string_view to_string(RegionTag t) noexcept {
  switch (t) {
    case RegionTag::Theta: return "Theta";
    case RegionTag::UpsilonMinus: return "UpsilonMinus";
    case RegionTag::UpsilonPlus: return "UpsilonPlus";
    case RegionTag::Boundary: return "Boundary";
  }
  return "?";
}

FlowParams flow(double a, double d) {
  if (!std::isfinite(a) || !std::isfinite(d) || d <= 0.0) {
    std::ostringstream os;
    os << "flow parameters require finite a and d > 0 (got a=" << a << ", d=" << d << ")";
    fail(ErrorKind::Domain, os.str());
  }
  return {a, d};
}

double stream_profile(const FlowParams& p, double y) {
  if (!(y >= 0.0 && y <= p.d)) fail(ErrorKind::Domain, "stream_profile: y outside [0, d]");
  if (y == p.d) return 1.0;
  return -0.5 * p.a * y * (y - p.d) + y / p.d;
}

Bernoulli bernoulli(const FlowParams& p) {
  if (p.d <= 0.0) fail(ErrorKind::Domain, "bernoulli: d must be positive");
  const double a = p.a, d = p.d;
  const double d2 = d * d, d3 = d2 * d;
  return {0.5 * (1.0 / d2 - a + 0.25 * a * a * d2) + d,
          -1.0 / d3 + 0.25 * a * a * d + 1.0,
          3.0 / (d3 * d) + 0.25 * a * a};
}

double critical_depth(double a) {
  if (a == 0.0) return 1.0;
  // s = 1/d_c solves s^4 - s - p = 0. The resolvent root q of 8q^3 + 8pq - 1 = 0
  // is Cardano's u + v with u^3 + v^3 = 1/8 and uv = -p/3; the rationalised
  // form 1/(8(u^2 - uv + v^2)) avoids the cancellation in r - p/(3r).
  const double p = 0.25 * a * a;
  const double r = std::cbrt(std::sqrt(27.0 + 256.0 * p * p * p) / (16.0 * std::sqrt(27.0)) + 1.0 / 16.0);
  const double q = 1.0 / (8.0 * (r * r + p / 3.0 + p * p / (9.0 * r * r)));
  const double delta = std::sqrt(2.0 * q);
  const double s = 0.5 * delta + 0.5 * std::sqrt(std::max(2.0 / delta - delta * delta, 0.0));
  double d = 1.0 / s;
  const Bernoulli b = bernoulli({a, d});
  d -= b.slope / b.curvature;
  return d;
}

double stagnation_depth(double a) {
  if (a == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0 / std::abs(a));
}

SurfaceShear surface_shear(const FlowParams& p) {
  const double kappa = 1.0 / p.d - 0.5 * p.a * p.d;
  return {kappa, 1.0 - p.a * kappa};
}

DepthClass classify(const FlowParams& p) {
  const double dc = critical_depth(p.a);
  if (std::abs(p.d - dc) <= kBoundaryBand * dc) return DepthClass::Critical;
  return p.d > dc ? DepthClass::Subcritical : DepthClass::Supercritical;
}

RegionTag region(const FlowParams& p) {
  if (p.d <= critical_depth(p.a)) fail(ErrorKind::OutOfBranch, "region: d <= d_c(a)");
  if (p.a == 0.0) return RegionTag::Theta;
  const double ds = stagnation_depth(p.a);
  if (std::abs(p.d - ds) < kBoundaryBand * std::max(1.0, ds)) return RegionTag::Boundary;
  if (p.d < ds) return RegionTag::Theta;
  return p.a < 0.0 ? RegionTag::UpsilonMinus : RegionTag::UpsilonPlus;
}

double relative_stagnation_height(double s) { return (s + 2.0) / (2.0 * s); }

StagnationPoint stagnation_height(const FlowParams& p) {
  if (p.d <= critical_depth(p.a)) fail(ErrorKind::OutOfBranch, "stagnation_height: d <= d_c(a)");
  StagnationPoint out{std::nullopt, std::nullopt, region(p)};
  if (p.a == 0.0) return out;
  const double Y = relative_stagnation_height(p.a * p.d * p.d);
  out.Y_star = Y;
  out.y_star = Y * p.d;
  return out;
}

}  // namespace waves
