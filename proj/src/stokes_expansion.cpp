#include "waves/stokes_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/hyperbolic.hpp"

namespace waves {

namespace {

// Harmonic piece amp * cos(k x) * g(y) with g'' = k^2 g accumulated into a jet.
void add_harmonic(StreamJet& j, double amp, double k, double x, double y, double d) {
  if (amp == 0.0) return;
  const double c = std::cos(k * x), s = std::sin(k * x);
  const double g = hyp::sinh_ratio(k, y, d);
  const double gy = hyp::sinh_ratio_dy(k, y, d);
  const double k2 = k * k;
  j.psi += amp * c * g;
  j.psi_x += -amp * k * s * g;
  j.psi_y += amp * c * gy;
  j.psi_xx += -amp * k2 * c * g;
  j.psi_xy += -amp * k * s * gy;
  j.psi_yy += amp * k2 * c * g;
}

// amp * cos(k x) * y gamma'(y; k), the secular part of psi2.
void add_secular(StreamJet& j, double amp, double k, double x, double y, double d) {
  if (amp == 0.0) return;
  const double c = std::cos(k * x), s = std::sin(k * x);
  const double g = hyp::sinh_ratio(k, y, d);
  const double gy = hyp::sinh_ratio_dy(k, y, d);
  const double k2 = k * k;
  const double f = y * gy;
  const double fy = gy + y * k2 * g;
  const double fyy = 2.0 * k2 * g + y * k2 * gy;
  j.psi += amp * c * f;
  j.psi_x += -amp * k * s * f;
  j.psi_y += amp * c * fy;
  j.psi_xx += -amp * k2 * c * f;
  j.psi_xy += -amp * k * s * fy;
  j.psi_yy += amp * c * fyy;
}

StreamJet scaled(StreamJet j, double f) {
  return {j.psi * f, j.psi_x * f, j.psi_y * f, j.psi_xx * f, j.psi_xy * f, j.psi_yy * f};
}

void accumulate(StreamJet& into, const StreamJet& j) {
  into.psi += j.psi;
  into.psi_x += j.psi_x;
  into.psi_y += j.psi_y;
  into.psi_xx += j.psi_xx;
  into.psi_xy += j.psi_xy;
  into.psi_yy += j.psi_yy;
}

void check_root(const FlowParams& p, double tau_star) {
  const SurfaceShear sh = surface_shear(p);
  const double sig = sigma(p, tau_star);
  if (!(tau_star > 0.0) || std::abs(sig) > 1e-8 * (1.0 + std::abs(p.a * sh.kappa - 1.0))) {
    std::ostringstream os;
    os << "tau*=" << tau_star << " is not a dispersion root (sigma=" << sig << ")";
    fail(ErrorKind::Consistency, os.str());
  }
}

}  // namespace

double FirstOrderMode::eta(double x) const { return std::cos(tau_star * x); }

double FirstOrderMode::psi(double x, double y) const {
  return -kappa * std::cos(tau_star * x) * hyp::sinh_ratio(tau_star, y, d);
}

FirstOrderMode first_order(const FlowParams& p, double tau_star) {
  check_root(p, tau_star);
  return {tau_star, surface_shear(p).kappa, p.d};
}

Order2Coefficients order2_coefficients(const FlowParams& p, double tau_star) {
  if (sigma(p, 0.0) == 0.0) fail(ErrorKind::Criticality, "order2_coefficients: sigma(0) == 0");
  check_root(p, tau_star);
  const double a = p.a, d = p.d, t = tau_star;
  const double kappa = surface_shear(p).kappa;
  const double rho0 = 1.0 - a * kappa;
  const double g1 = gamma_slope(t, d);
  const double g2 = gamma_slope(2.0 * t, d);
  const double k2t2 = kappa * kappa * t * t;

  Order2Coefficients o{};
  o.A1 = -0.25 * a - 0.5 * kappa * g1;
  o.C1 = 0.5 * k2t2;
  o.B1 = -0.75 * k2t2 + 0.25 * a * a + 0.5 * a * kappa * g1 + 0.25 * kappa * kappa * g1 * g1;
  o.sigma0 = sigma(p, 0.0);
  o.sigma2 = sigma(p, 2.0 * t);
  if (o.sigma2 == 0.0) fail(ErrorKind::Resonance, "order2_coefficients: sigma(2 tau*) == 0");

  // kappa a1 + d c1 = -A1,  rho0 a1 + kappa c1 = -(B1 + C1);  det = d sigma(0)
  const double det0 = d * o.sigma0;
  o.a1 = (d * (o.B1 + o.C1) - kappa * o.A1) / det0;
  o.c1 = (rho0 * o.A1 - kappa * (o.B1 + o.C1)) / det0;
  // kappa b1 + d1 = -A1,  rho0 b1 + kappa g2 d1 = -B1;  det = sigma(2 tau*)
  o.b1 = (o.B1 - kappa * g2 * o.A1) / o.sigma2;
  o.d1 = (rho0 * o.A1 - kappa * o.B1) / o.sigma2;
  return o;
}

Order3Coefficients order3_coefficients(const FlowParams& p, double tau_star, double c2_free) {
  return order3_coefficients(p, tau_star, order2_coefficients(p, tau_star), c2_free);
}

Order3Coefficients order3_coefficients(const FlowParams& p, double tau_star,
                                       const Order2Coefficients& o2, double c2_free) {
  const double a = p.a, d = p.d, t = tau_star, t2 = t * t;
  const double kappa = surface_shear(p).kappa;
  const double rho0 = 1.0 - a * kappa;
  const double g1 = gamma_slope(t, d);
  const double g2 = gamma_slope(2.0 * t, d);
  const double g3 = gamma_slope(3.0 * t, d);
  const double k2t2 = kappa * kappa * t2;
  const auto& [A1, B1, C1, a1, b1, c1, d1, s0, s2] = o2;
  (void)A1; (void)B1; (void)C1; (void)s0; (void)s2;

  Order3Coefficients o{};
  o.Xi = -a - kappa * g1;
  const double Xi = o.Xi;
  o.A2 = (a1 + 0.5 * b1) * Xi + c1 + 0.5 * g2 * d1 - 0.375 * kappa * t2;
  o.B2 = 0.5 * b1 * Xi + 0.5 * g2 * d1 - 0.125 * kappa * t2;
  o.C2 = -(a1 + 0.5 * b1) * (a * Xi + k2t2) + c1 * Xi + d1 * (kappa * t2 + 0.5 * Xi * g2) +
         0.75 * a * kappa * t2 + 0.625 * k2t2 * g1;
  o.D2 = -0.5 * b1 * (a * Xi + k2t2) + d1 * (3.0 * kappa * t2 + 0.5 * Xi * g2) +
         0.25 * a * kappa * t2 - 0.125 * k2t2 * g1;

  // kappa a2 - d kappa g1 l2 = -(c2 + A2)
  // rho0 a2 - kappa^2 (d t^2 + g1) l2 = -(kappa g1 c2 + C2)
  const double w = d * t2 + g1;
  const double det = kappa * kappa * kappa * w - d * kappa * rho0 * g1;
  if (det == 0.0) fail(ErrorKind::Degenerate, "order3_coefficients: vanishing lambda2 denominator");
  o.c2 = c2_free;
  o.lambda2 = (kappa * o.C2 - rho0 * o.A2) / det;
  o.a2 = -c2_free / kappa + (-o.A2 * kappa * w + o.C2 * d * g1) / (kappa * kappa * w - d * rho0 * g1);

  o.sigma3 = sigma(p, 3.0 * t);
  if (o.sigma3 == 0.0) fail(ErrorKind::Resonance, "order3_coefficients: sigma(3 tau*) == 0");
  o.b2 = (o.D2 - kappa * g3 * o.B2) / o.sigma3;
  o.d2 = (rho0 * o.B2 - kappa * o.D2) / o.sigma3;
  return o;
}

ExpansionCoefficients expansion_coefficients(const FlowParams& p, double c2_free) {
  const double t = solve_dispersion(p).tau_star;
  ExpansionCoefficients e{};
  e.tau_star = t;
  e.kappa = surface_shear(p).kappa;
  e.gamma1 = gamma_slope(t, p.d);
  e.gamma2 = gamma_slope(2.0 * t, p.d);
  e.gamma3 = gamma_slope(3.0 * t, p.d);
  e.o2 = order2_coefficients(p, t);
  e.o3 = order3_coefficients(p, t, e.o2, c2_free);
  return e;
}

BranchState make_branch(const FlowParams& p, double t, int truncation_order, double c2_free) {
  if (truncation_order < 1 || truncation_order > 3)
    fail(ErrorKind::Domain, "truncation order must be 1, 2 or 3");
  if (!(t >= 0.0) || !std::isfinite(t)) fail(ErrorKind::Domain, "branch amplitude t must be >= 0");
  return {p, t, expansion_coefficients(p, c2_free), truncation_order};
}

double branch_lambda(const BranchState& s) {
  if (s.truncation_order < 2) return 1.0;
  return 1.0 + s.coeffs.o3.lambda2 * s.t * s.t;
}

SurfaceJet surface_jet(const BranchState& s, double x) {
  const auto& e = s.coeffs;
  const double k = e.tau_star, t = s.t;
  const double c1 = std::cos(k * x), s1 = std::sin(k * x);
  SurfaceJet j{s.params.d + t * c1, -t * k * s1, -t * k * k * c1};
  if (s.truncation_order >= 2) {
    const double c2 = std::cos(2 * k * x), s2 = std::sin(2 * k * x);
    const double t2 = t * t;
    j.eta += t2 * (e.o2.a1 + e.o2.b1 * c2);
    j.eta_x += -t2 * e.o2.b1 * 2 * k * s2;
    j.eta_xx += -t2 * e.o2.b1 * 4 * k * k * c2;
  }
  if (s.truncation_order >= 3) {
    const double c3 = std::cos(3 * k * x), s3 = std::sin(3 * k * x);
    const double t3 = t * t * t;
    j.eta += t3 * (e.o3.a2 * c1 + e.o3.b2 * c3);
    j.eta_x += -t3 * (e.o3.a2 * k * s1 + e.o3.b2 * 3 * k * s3);
    j.eta_xx += -t3 * (e.o3.a2 * k * k * c1 + e.o3.b2 * 9 * k * k * c3);
  }
  return j;
}

StreamJet stream_jet(const BranchState& s, double x, double y) {
  const auto& e = s.coeffs;
  const double a = s.params.a, d = s.params.d, k = e.tau_star, t = s.t;
  StreamJet out{-0.5 * a * y * (y - d) + y / d, 0.0, -a * y + 0.5 * a * d + 1.0 / d, 0.0, 0.0, -a};

  StreamJet o1{};
  add_harmonic(o1, -e.kappa, k, x, y, d);
  accumulate(out, scaled(o1, t));

  if (s.truncation_order >= 2) {
    StreamJet o2{e.o2.c1 * y, 0.0, e.o2.c1, 0.0, 0.0, 0.0};
    add_harmonic(o2, e.o2.d1, 2 * k, x, y, d);
    accumulate(out, scaled(o2, t * t));
  }
  if (s.truncation_order >= 3) {
    StreamJet o3{};
    add_secular(o3, -e.kappa * e.o3.lambda2, k, x, y, d);
    add_harmonic(o3, e.o3.c2, k, x, y, d);
    add_harmonic(o3, e.o3.d2, 3 * k, x, y, d);
    accumulate(out, scaled(o3, t * t * t));
  }
  return out;
}

BranchValue evaluate_branch(const BranchState& s, double x, double y) {
  const double eta = surface_jet(s, x).eta;
  if (!(y >= 0.0 && y <= eta)) fail(ErrorKind::Domain, "evaluate_branch: y outside [0, eta(x)]");
  return {eta, stream_jet(s, x, y).psi, branch_lambda(s)};
}

BranchResiduals branch_residuals(const BranchState& s, const ResidualGrid& grid) {
  if (grid.nx < 1 || grid.ny < 2) fail(ErrorKind::Domain, "branch_residuals: grid too small");
  const double period = 2.0 * std::numbers::pi / s.coeffs.tau_star;
  const double lam = branch_lambda(s), lam2 = lam * lam;
  const double R = bernoulli(s.params).value;
  BranchResiduals r{0.0, 0.0, 0.0};
  for (int i = 0; i < grid.nx; ++i) {
    const double x = period * i / grid.nx;
    const double eta = surface_jet(s, x).eta;
    if (!(eta > 0.0)) fail(ErrorKind::Domain, "branch_residuals: t too large, eta <= 0");
    for (int j = 0; j < grid.ny; ++j) {
      const double y = eta * j / (grid.ny - 1);
      const StreamJet q = stream_jet(s, x, y);
      r.field = std::max(r.field, std::abs(lam2 * q.psi_xx + q.psi_yy + s.params.a));
    }
    const StreamJet q = stream_jet(s, x, eta);
    r.kinematic = std::max(r.kinematic, std::abs(q.psi - 1.0));
    r.bernoulli = std::max(
        r.bernoulli, std::abs(0.5 * (q.psi_y * q.psi_y + lam2 * q.psi_x * q.psi_x) + eta - R));
  }
  return r;
}

}  // namespace waves
