#pragma once

#include "waves/laminar_flow.hpp"

namespace waves {

/// Order-t solution: eta0 = cos(tau x), psi0 = -kappa cos(tau x) gamma(y; tau).
struct FirstOrderMode {
  double tau_star;
  double kappa;
  double d;

  double eta(double x) const;
  double psi(double x, double y) const;
};

/// Throws Consistency when tau_star is not a root of sigma.
FirstOrderMode first_order(const FlowParams& p, double tau_star);

/// Order-t^2 right-hand side constants and the mean/second-harmonic
/// corrections eta1 = a1 + b1 cos 2tx, psi1 = c1 y + d1 cos 2tx gamma(y; 2t).
struct Order2Coefficients {
  double A1, B1, C1;
  double a1, b1, c1, d1;
  double sigma0;  // sigma(0), determinant of the (a1, c1) system over d
  double sigma2;  // sigma(2 tau*), determinant of the (b1, d1) system
};

Order2Coefficients order2_coefficients(const FlowParams& p, double tau_star);

/// Order-t^3 constants. c2 is the free amplitude normalisation.
struct Order3Coefficients {
  double Xi;
  double A2, B2, C2, D2;
  double a2, b2, c2, d2;
  double lambda2;
  double sigma3;  // sigma(3 tau*)
};

Order3Coefficients order3_coefficients(const FlowParams& p, double tau_star, double c2_free = 0.0);
Order3Coefficients order3_coefficients(const FlowParams& p, double tau_star,
                                       const Order2Coefficients& o2, double c2_free = 0.0);

struct ExpansionCoefficients {
  double tau_star;
  double kappa;
  double gamma1, gamma2, gamma3;  // gamma'(d; k tau*), k = 1, 2, 3
  Order2Coefficients o2;
  Order3Coefficients o3;
};

/// Solves the dispersion relation and all three orders.
ExpansionCoefficients expansion_coefficients(const FlowParams& p, double c2_free = 0.0);

/// Truncated Stokes branch at amplitude t.
struct BranchState {
  FlowParams params;
  double t = 0.0;
  ExpansionCoefficients coeffs;
  int truncation_order = 3;
};

BranchState make_branch(const FlowParams& p, double t, int truncation_order = 3, double c2_free = 0.0);

struct SurfaceJet {
  double eta, eta_x, eta_xx;
};

struct StreamJet {
  double psi, psi_x, psi_y, psi_xx, psi_xy, psi_yy;
};

struct BranchValue {
  double eta, psi, lambda;
};

double branch_lambda(const BranchState& s);
SurfaceJet surface_jet(const BranchState& s, double x);
/// Stream function and derivatives; y may exceed d (analytic continuation).
StreamJet stream_jet(const BranchState& s, double x, double y);

/// (eta(x;t), psi(x,y;t), lambda(t)); throws Domain unless 0 <= y <= eta(x).
BranchValue evaluate_branch(const BranchState& s, double x, double y);

struct ResidualGrid {
  int nx = 64;  // points over one period
  int ny = 64;  // points per column on [0, eta(x)]
};

struct BranchResiduals {
  double field;      // max |(lambda^2 d_xx + d_yy) psi + a| in D_eta
  double kinematic;  // max |psi(x, eta(x)) - 1|
  double bernoulli;  // max |(psi_y^2 + lambda^2 psi_x^2)/2 + eta - R| on y = eta
};

BranchResiduals branch_residuals(const BranchState& s, const ResidualGrid& grid = {});

}  // namespace waves
