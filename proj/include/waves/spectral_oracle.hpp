#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "waves/laminar_flow.hpp"
#include "waves/stokes_expansion.hpp"

namespace waves {

/// Laminar eigenvalues sigma(lambda k tau*), k = 0..k_max.
std::vector<double> laminar_spectrum(const FlowParams& p, double lambda, int k_max);

/// Boundary operator A h = D_N h - (rho_hat/psi_y) h of the truncated branch,
/// projected on cos(k tau* x), k = 0..n_modes. The eigenproblem
/// A v = mu v / psi_y becomes stiffness c = mu mass c.
struct SteklovDiscretization {
  BranchState state;
  int n_modes = 0;
  int n_y = 0;  // Chebyshev-Lobatto nodes across the flattened depth
  int n_x = 0;  // collocation intervals on the half period
  Eigen::MatrixXd stiffness;  // <A h_k, h_i>_1, symmetrised
  Eigen::MatrixXd mass;       // <h_k, h_i> with weight 1/psi_y^2
  double symmetry_defect = 0.0;  // ||K - K^T||_F / ||K||_F before symmetrisation

  /// L^{-1} K L^{-T} with mass = L L^T; diagonal sigma(k tau*) at t = 0.
  Eigen::MatrixXd reduced() const;
};

/// n_x = 0 picks max(16, 2 n_modes).
SteklovDiscretization assemble(const BranchState& state, int n_modes, int n_y, int n_x = 0);

struct EigenEstimate {
  Eigen::VectorXd mu_values;  // ascending
  int n_modes = 0;
  int n_y = 0;
  double t = 0.0;
};

EigenEstimate eigenvalues(const SteklovDiscretization& disc, int count);

struct OracleGrid {
  int n_modes = 8;
  int n_y = 200;
};

struct Mu2Verification {
  std::vector<double> t;
  std::vector<double> mu_first;
  std::vector<double> mu_second;
  double mu2_estimate = 0.0;   // intercept of mu(t)/t^2 = mu2 + c t^2
  double quartic_coefficient = 0.0;
  double fit_residual = 0.0;   // max deviation of mu(t)/t^2 from the fit, relative
  double mu2_formula = 0.0;
  double relative_error = 0.0;
  bool conclusive = false;
};

/// Fits the second eigenvalue of the truncated branch against t^2 and compares
/// with the closed-form mu2. t_list must be strictly decreasing and positive.
Mu2Verification verify_mu2(const FlowParams& p, std::span<const double> t_list,
                           const OracleGrid& grid = {});

}  // namespace waves
