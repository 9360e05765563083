#include "waves/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "critical_forms.hpp"
#include "waves/errors.hpp"
#include "waves/hyperbolic.hpp"

namespace waves {

namespace {

// Root of x = c tanh(x) for c > 1 by Newton from x = c.
double tanh_fixed_point(double c) {
  double x = c;
  for (int i = 0; i < 100; ++i) {
    const double th = std::tanh(x);
    const double f = x - c * th;
    const double fp = 1.0 - c * (1.0 - th * th);
    const double step = f / fp;
    x -= step;
    if (std::abs(step) < 1e-16 * x) break;
  }
  return x;
}

void require_off_stagnation(const FlowParams& p, double kappa) {
  if (kappa == 0.0)
    fail(ErrorKind::Degenerate, "stagnation at the surface: sigma == -1, no dispersion root");
  if (p.a > 0.0) {
    const double ds = stagnation_depth(p.a);
    if (std::abs(p.d - ds) < kStagnationGuard * ds) {
      std::ostringstream os;
      os << "d=" << p.d << " lies inside the guard band around d_s=" << ds
         << "; tau* ~ (d-d_s)^-2 is not representable";
      fail(ErrorKind::IllConditioned, os.str());
    }
  }
}

}  // namespace

std::string_view to_string(AsymptoticRegime r) noexcept {
  switch (r) {
    case AsymptoticRegime::LargeDepth: return "large-depth";
    case AsymptoticRegime::NearCritical: return "near-critical";
    case AsymptoticRegime::NearStagnation: return "near-stagnation";
    case AsymptoticRegime::CounterCurrentCurve: return "counter-current-curve";
  }
  return "?";
}

AsymptoticRegime parse_regime(std::string_view name) {
  for (auto r : {AsymptoticRegime::LargeDepth, AsymptoticRegime::NearCritical,
                 AsymptoticRegime::NearStagnation, AsymptoticRegime::CounterCurrentCurve})
    if (name == to_string(r)) return r;
  fail(ErrorKind::Domain, "unknown asymptotic regime '" + std::string(name) + "'");
}

double gamma_slope(double tau, double d) { return hyp::z_coth_z(tau * d) / d; }

double sigma(const FlowParams& p, double tau) {
  const double kappa = surface_shear(p).kappa;
  return kappa * kappa * gamma_slope(tau, p.d) + p.a * kappa - 1.0;
}

double sigma_prime(const FlowParams& p, double tau) {
  const double kappa = surface_shear(p).kappa;
  if (kappa == 0.0) fail(ErrorKind::Degenerate, "sigma_prime: kappa == 0");
  return kappa * kappa * hyp::coth_minus_z_csch2(tau * p.d);
}

DispersionSolution solve_dispersion(const FlowParams& p, double tol) {
  if (p.d <= critical_depth(p.a))
    fail(ErrorKind::OutOfBranch, "no subcritical root: d <= d_c(a)");
  const double kappa = surface_shear(p).kappa;
  require_off_stagnation(p, kappa);

  const double scale = tol * (1.0 + std::abs(p.a * kappa - 1.0));
  double lo = 0.0;
  double hi = 1.0 / p.d;
  int iterations = 0;
  while (sigma(p, hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++iterations > 2000) fail(ErrorKind::NoSignChange, "solve_dispersion: no upper bracket");
  }
  const double bracket_lo = lo, bracket_hi = hi;

  double x = 0.5 * (lo + hi);
  double f = sigma(p, x);
  for (int it = 0; it < 400; ++it, ++iterations) {
    if (std::abs(f) <= scale) break;
    if (f < 0.0) lo = x; else hi = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    // Newton only while it stays inside the bracket; sigma' -> 0 at tau -> 0.
    const double fp = sigma_prime(p, x);
    double next = x - f / fp;
    if (!(fp > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    f = sigma(p, x);
  }
  return {x, 2.0 * std::numbers::pi / x, iterations, std::abs(f), bracket_lo, bracket_hi};
}

double large_depth_constant() {
  static const double q1 = tanh_fixed_point(2.0);
  return q1;
}

double counter_current_constant() {
  static const double n = tanh_fixed_point(4.0 / 3.0);
  return n;
}

double tau_asymptotic(const FlowParams& p, AsymptoticRegime regime) {
  const double a = p.a, d = p.d;
  switch (regime) {
    case AsymptoticRegime::LargeDepth: {
      if (a == 0.0) fail(ErrorKind::Domain, "large-depth tau asymptotics need a != 0");
      const double q1 = large_depth_constant();
      const double q2 = 4.0 * q1 / (a * a * (q1 * q1 - 2.0));
      return q1 / d + q2 / (d * d);
    }
    case AsymptoticRegime::NearCritical: {
      const detail::CriticalForms f = detail::critical_forms(a);
      const double dc = f.dc;
      const double eps = d - dc;
      if (!(eps > 0.0)) fail(ErrorKind::Domain, "near-critical tau asymptotics need d > d_c");
      const double dc2 = dc * dc, dc3 = dc2 * dc, dc5 = dc3 * dc2, dc6 = dc3 * dc3;
      const double w = f.w;
      const double s1 = std::sqrt(3.0) * std::sqrt(a * a * dc2 * dc2 + 12.0) / (std::sqrt(dc) * dc * w);
      const double s3 = -4.0 * std::sqrt(3.0) *
                        (14.0 * dc6 + 5.0 * a * dc5 - 92.0 * dc3 - 50.0 * a * dc2 + 84.0) /
                        (5.0 * std::pow(dc, 2.5) * w * w * w * std::sqrt(4.0 - dc3));
      return s1 * std::sqrt(eps) + s3 * eps * std::sqrt(eps);
    }
    case AsymptoticRegime::NearStagnation: {
      if (!(a > 0.0)) fail(ErrorKind::Domain, "near-stagnation tau asymptotics need a > 0");
      const double eps = d - stagnation_depth(a);
      if (eps == 0.0) fail(ErrorKind::Domain, "near-stagnation tau asymptotics need d != d_s");
      const double a32 = a * std::sqrt(a);
      return 1.0 / (a * a * eps * eps) + (1.0 + std::sqrt(2.0) * a32) / (std::sqrt(2.0) * a32 * eps) +
             (2.0 * std::sqrt(2.0) * a32 - 1.0) / (8.0 * a);
    }
    case AsymptoticRegime::CounterCurrentCurve: {
      if (std::abs(a * d * d + 4.0) > 1e-9 * 4.0)
        fail(ErrorKind::Domain, "counter-current tau asymptotics need a = -4/d^2");
      const double n = counter_current_constant();
      const double n2 = n / (9.0 * n * n - 4.0);
      return n / d + n2 * d * d;
    }
  }
  fail(ErrorKind::Domain, "unknown regime");
}

}  // namespace waves
