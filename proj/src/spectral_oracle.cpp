#include "waves/spectral_oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/stability.hpp"

namespace waves {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Fourier differentiation on 2n equispaced points of the period 2 pi / k,
// folded onto the n + 1 nodes of the half period for even functions.
struct EvenFourier {
  MatrixXd d1, d2;
};

EvenFourier even_fourier(int n, double k) {
  const int full = 2 * n;
  const double h = std::numbers::pi / n;
  auto fold = [&](int l) { return l <= n ? l : full - l; };
  EvenFourier f{MatrixXd::Zero(n + 1, n + 1), MatrixXd::Zero(n + 1, n + 1)};
  for (int j = 0; j <= n; ++j) {
    for (int l = 0; l < full; ++l) {
      const int m = fold(l);
      if (l == j) {
        f.d2(j, m) += k * k * (-std::numbers::pi * std::numbers::pi / (3.0 * h * h) - 1.0 / 6.0);
        continue;
      }
      const double sign = ((j - l) % 2 == 0) ? 1.0 : -1.0;
      const double half = 0.5 * (j - l) * h;
      f.d1(j, m) += k * 0.5 * sign / std::tan(half);
      f.d2(j, m) += -k * k * sign / (2.0 * std::sin(half) * std::sin(half));
    }
  }
  return f;
}

// Chebyshev-Gauss-Lobatto nodes on [0, 1] (ascending) and the first
// derivative matrix from barycentric weights.
struct Chebyshev {
  VectorXd s;
  MatrixXd d1, d2;
};

Chebyshev chebyshev(int n) {
  const int m = n - 1;
  Chebyshev c{VectorXd(n), MatrixXd::Zero(n, n), MatrixXd()};
  VectorXd w(n);
  for (int i = 0; i < n; ++i) {
    c.s(i) = 0.5 * (1.0 - std::cos(std::numbers::pi * i / m));
    w(i) = ((i % 2 == 0) ? 1.0 : -1.0) * ((i == 0 || i == m) ? 0.5 : 1.0);
  }
  // Differences from the trigonometric identity keep nodes near s = 1 accurate.
  auto diff = [&](int i, int j) {
    return std::sin(0.5 * std::numbers::pi * (i + j) / m) * std::sin(0.5 * std::numbers::pi * (i - j) / m);
  };
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      c.d1(i, j) = (w(j) / w(i)) / diff(i, j);
      row += c.d1(i, j);
    }
    c.d1(i, i) = -row;
  }
  c.d2 = c.d1 * c.d1;
  return c;
}

}  // namespace

std::vector<double> laminar_spectrum(const FlowParams& p, double lambda, int k_max) {
  if (k_max < 0) fail(ErrorKind::Request, "laminar_spectrum: k_max must be >= 0");
  if (surface_shear(p).kappa == 0.0) fail(ErrorKind::Degenerate, "laminar_spectrum: kappa == 0");
  const double t = solve_dispersion(p).tau_star;
  std::vector<double> mu;
  mu.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) mu.push_back(sigma(p, lambda * k * t));
  return mu;
}

Eigen::MatrixXd SteklovDiscretization::reduced() const {
  const Eigen::LLT<MatrixXd> llt(mass);
  const MatrixXd linv = llt.matrixL().solve(MatrixXd::Identity(mass.rows(), mass.cols()));
  return linv * stiffness * linv.transpose();
}

SteklovDiscretization assemble(const BranchState& state, int n_modes, int n_y, int n_x) {
  if (n_modes < 1) fail(ErrorKind::Request, "assemble: n_modes must be >= 1");
  if (n_y < 4) fail(ErrorKind::Request, "assemble: n_y must be >= 4");
  if (n_x <= 0) n_x = std::max(16, 2 * n_modes);

  const double k = state.coeffs.tau_star;
  const double lam = branch_lambda(state), lam2 = lam * lam;
  const double half_period = std::numbers::pi / k;
  const int nc = n_x + 1;    // columns
  const int ni = n_y - 2;    // interior nodes per column
  const int top = n_y - 1;

  const EvenFourier fx = even_fourier(n_x, k);
  const Chebyshev cs = chebyshev(n_y);

  VectorXd x(nc), eta(nc), g(nc), curv(nc);
  for (int j = 0; j < nc; ++j) {
    x(j) = half_period * j / n_x;
    const SurfaceJet sj = surface_jet(state, x(j));
    if (!(sj.eta > 0.0)) fail(ErrorKind::Domain, "assemble: eta <= 0, amplitude too large");
    eta(j) = sj.eta;
    g(j) = sj.eta_x / sj.eta;
    curv(j) = sj.eta_xx / sj.eta;
  }

  // Mapped operator in (x, s), s = y / eta(x):
  //   lam^2 [W_xx - 2 s g W_xs + s^2 g^2 W_ss + s (2 g^2 - eta''/eta) W_s] + W_ss / eta^2
  const int n = nc * ni;
  auto idx = [ni](int j, int i) { return j * ni + (i - 1); };
  MatrixXd op = MatrixXd::Zero(n, n);
  MatrixXd boundary = MatrixXd::Zero(n, nc);  // coefficient of W(m, top) = h(x_m)
  for (int j = 0; j < nc; ++j) {
    for (int i = 1; i <= ni; ++i) {
      const int row = idx(j, i);
      const double s = cs.s(i);
      const double c_ss = lam2 * s * s * g(j) * g(j) + 1.0 / (eta(j) * eta(j));
      const double c_s = lam2 * s * (2.0 * g(j) * g(j) - curv(j));
      const double c_xs = -2.0 * lam2 * s * g(j);
      for (int q = 1; q <= top; ++q) {
        const double v = c_ss * cs.d2(i, q) + c_s * cs.d1(i, q);
        if (q == top) boundary(row, j) += v; else op(row, idx(j, q)) += v;
      }
      for (int m = 0; m < nc; ++m) {
        const double dxx = lam2 * fx.d2(j, m);
        op(row, idx(m, i)) += dxx;
        if (c_xs != 0.0 && fx.d1(j, m) != 0.0) {
          const double cx = c_xs * fx.d1(j, m);
          for (int q = 1; q <= top; ++q) {
            const double v = cx * cs.d1(i, q);
            if (q == top) boundary(row, m) += v; else op(row, idx(m, q)) += v;
          }
        }
      }
    }
  }

  const int nb = n_modes + 1;
  MatrixXd h(nc, nb), hx(nc, nb);
  for (int j = 0; j < nc; ++j)
    for (int b = 0; b < nb; ++b) {
      h(j, b) = std::cos(b * k * x(j));
      hx(j, b) = -b * k * std::sin(b * k * x(j));
    }

  const Eigen::PartialPivLU<MatrixXd> lu(op);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-15)) {
    std::ostringstream os;
    os << "assemble: collocation system is singular (rcond=" << rcond << ")";
    fail(ErrorKind::Resolution, os.str());
  }
  const MatrixXd interior = lu.solve(-boundary * h);

  // Surface derivative W_s(x_j, 1) for every basis function.
  MatrixXd ws(nc, nb);
  for (int j = 0; j < nc; ++j)
    for (int b = 0; b < nb; ++b) {
      double acc = cs.d1(top, top) * h(j, b);
      for (int q = 1; q <= ni; ++q) acc += cs.d1(top, q) * interior(idx(j, q), b);
      ws(j, b) = acc;
    }

  // Apply A on the surface and project with trapezoid weights (even, periodic).
  MatrixXd applied(nc, nb);
  VectorXd w1(nc), w2(nc);
  for (int j = 0; j < nc; ++j) {
    const StreamJet q = stream_jet(state, x(j), eta(j));
    if (!(q.psi_y > 0.0))
      fail(ErrorKind::Domain, "assemble: psi_y <= 0 on the surface (stagnation)");
    const double rho_hat = 1.0 + lam2 * q.psi_xy * q.psi_x + q.psi_yy * q.psi_y;
    const double weight = (j == 0 || j == n_x) ? 0.5 : 1.0;
    w1(j) = weight / q.psi_y;
    w2(j) = weight / (q.psi_y * q.psi_y);
    for (int b = 0; b < nb; ++b) {
      const double wy = ws(j, b) / eta(j);
      const double wx = hx(j, b) - g(j) * ws(j, b);
      applied(j, b) = lam2 * q.psi_x * wx + q.psi_y * wy - rho_hat / q.psi_y * h(j, b);
    }
  }

  SteklovDiscretization out;
  out.state = state;
  out.n_modes = n_modes;
  out.n_y = n_y;
  out.n_x = n_x;
  const MatrixXd raw = h.transpose() * w1.asDiagonal() * applied;
  out.symmetry_defect = (raw - raw.transpose()).norm() / raw.norm();
  out.stiffness = 0.5 * (raw + raw.transpose());
  out.mass = h.transpose() * w2.asDiagonal() * h;
  return out;
}

EigenEstimate eigenvalues(const SteklovDiscretization& disc, int count) {
  if (count < 1 || count > disc.n_modes)
    fail(ErrorKind::Request, "eigenvalues: count must lie in [1, n_modes]");
  const Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> solver(disc.stiffness, disc.mass,
                                                                  Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::Resolution, "eigenvalues: solver failed");
  return {solver.eigenvalues().head(count), disc.n_modes, disc.n_y, disc.state.t};
}

Mu2Verification verify_mu2(const FlowParams& p, std::span<const double> t_list, const OracleGrid& grid) {
  if (t_list.size() < 2) fail(ErrorKind::Request, "verify_mu2: need at least two amplitudes");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    if (!(t_list[i] > 0.0) || (i > 0 && !(t_list[i] < t_list[i - 1])))
      fail(ErrorKind::Request, "verify_mu2: t_list must be positive and strictly decreasing");
  }
  Mu2Verification v;
  v.mu2_formula = mu2(p).mu2;
  for (double t : t_list) {
    const BranchState state = make_branch(p, t);
    const EigenEstimate e = eigenvalues(assemble(state, grid.n_modes, grid.n_y), 2);
    v.t.push_back(t);
    v.mu_first.push_back(e.mu_values(0));
    v.mu_second.push_back(e.mu_values(1));
  }
  // Least squares of mu(t)/t^2 = mu2 + c t^2.
  const int n = static_cast<int>(v.t.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = v.t[i] * v.t[i];
    rhs(i) = v.mu_second[i] / (v.t[i] * v.t[i]);
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  v.mu2_estimate = coef(0);
  v.quartic_coefficient = coef(1);
  const double scale = std::max(std::abs(coef(0)), 1e-300);
  v.fit_residual = (design * coef - rhs).cwiseAbs().maxCoeff() / scale;
  v.relative_error = std::abs(v.mu2_estimate - v.mu2_formula) / std::abs(v.mu2_formula);
  // The t^2 correction must stay a correction over the sampled range.
  const double correction = std::abs(coef(1)) * v.t.front() * v.t.front() / scale;
  v.conclusive = std::isfinite(v.mu2_estimate) && v.fit_residual < 0.05 && correction < 0.5;
  return v;
}

}  // namespace waves
