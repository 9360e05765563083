#include <cmath>
#include <vector>

#include "doctest.h"
#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/spectral_oracle.hpp"
#include "waves/stability.hpp"

using namespace waves;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const WavesError& e) {
    return e.kind();
  }
  FAIL("expected a WavesError");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("spectral_oracle") {
  TEST_CASE("laminar spectrum straddles zero at the first harmonic") {
    const FlowParams p{0.0, 2.0};
    const auto above = laminar_spectrum(p, 1.01, 3);
    const auto below = laminar_spectrum(p, 0.99, 3);
    REQUIRE(above.size() == 4);
    CHECK(above[0] < 0.0);
    CHECK(above[1] > 0.0);
    CHECK(below[1] < 0.0);
    CHECK(above[2] > above[1]);
    CHECK(std::abs(laminar_spectrum(p, 1.0, 1)[1]) <= 1e-10);
    CHECK(kind_of([&] { laminar_spectrum(p, 1.0, -1); }) == ErrorKind::Request);
  }

  TEST_CASE("at t = 0 the reduced operator is diagonal with the laminar spectrum") {
    const FlowParams p{-2.0, 1.2};
    const BranchState s = make_branch(p, 0.0);
    const SteklovDiscretization disc = assemble(s, 6, 60);
    const Eigen::MatrixXd r = disc.reduced();
    const auto lam = laminar_spectrum(p, 1.0, 6);
    const double scale = r.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      CHECK(std::abs(r(i, i) - lam[i]) <= 1e-10 * scale);
      for (Eigen::Index j = 0; j < r.cols(); ++j)
        if (i != j) CHECK(std::abs(r(i, j)) <= 1e-10 * scale);
    }
  }

  TEST_CASE("symmetry defect comes from the truncated branch, not the grid") {
    const FlowParams p{0.0, 1.5};
    const BranchState s = make_branch(p, 0.02);
    const double coarse = assemble(s, 6, 20, 16).symmetry_defect;
    const double fine = assemble(s, 6, 80, 64).symmetry_defect;
    CHECK(std::abs(fine - coarse) <= 1e-3 * coarse);
    const double halved = assemble(make_branch(p, 0.01), 6, 20, 16).symmetry_defect;
    CHECK(coarse / halved == doctest::Approx(16.0).epsilon(0.1));
    CHECK(assemble(make_branch(p, 0.0), 6, 20, 16).symmetry_defect <= 1e-12);
  }

  TEST_CASE("eigenvalues converge under depth refinement") {
    const BranchState s = make_branch(FlowParams{-2.0, 1.2}, 0.01);
    const auto mu = [&](int ny) { return eigenvalues(assemble(s, 6, ny), 2).mu_values; };
    const auto m40 = mu(40), m80 = mu(80), m160 = mu(160);
    CHECK(std::abs(m80(1) - m40(1)) <= 1e-5 * std::abs(m80(1)));
    CHECK(std::abs(m160(1) - m80(1)) <= 1e-5 * std::abs(m80(1)));
    CHECK(m160(0) < 0.0);
    CHECK(m160(0) < m160(1));
  }

  TEST_CASE("eigenvalue requests") {
    const SteklovDiscretization disc = assemble(make_branch(FlowParams{0.0, 2.0}, 0.01), 4, 30);
    CHECK(eigenvalues(disc, 4).mu_values.size() == 4);
    CHECK(kind_of([&] { eigenvalues(disc, 5); }) == ErrorKind::Request);
    CHECK(kind_of([&] { eigenvalues(disc, 0); }) == ErrorKind::Request);
    CHECK(kind_of([&] { assemble(disc.state, 0, 30); }) == ErrorKind::Request);
    CHECK(kind_of([&] { assemble(disc.state, 4, 2); }) == ErrorKind::Request);
  }

  TEST_CASE("amplitude too large for the truncated surface") {
    CHECK(kind_of([&] { assemble(make_branch(FlowParams{0.0, 2.0}, 50.0), 4, 30); }) ==
          ErrorKind::Domain);
  }

  TEST_CASE("second eigenvalue follows mu2 t^2") {
    const double t[] = {0.02, 0.01, 0.005};
    for (const FlowParams p : {FlowParams{-2.0, 1.2}, FlowParams{0.0, 1.5}}) {
      const Mu2Verification v = verify_mu2(p, t, OracleGrid{6, 60});
      CHECK(v.conclusive);
      CHECK(v.mu2_formula == doctest::Approx(mu2(p).mu2).epsilon(1e-14));
      CHECK(v.relative_error <= 1e-3);
      CHECK(std::signbit(v.mu2_estimate) == std::signbit(v.mu2_formula));
      for (double m : v.mu_first) CHECK(m < 0.0);
    }
  }

  TEST_CASE("amplitude list validation") {
    const FlowParams p{0.0, 2.0};
    const double one[] = {0.01};
    const double rising[] = {0.01, 0.02};
    const double negative[] = {0.01, -0.01};
    CHECK(kind_of([&] { verify_mu2(p, one); }) == ErrorKind::Request);
    CHECK(kind_of([&] { verify_mu2(p, rising); }) == ErrorKind::Request);
    CHECK(kind_of([&] { verify_mu2(p, negative); }) == ErrorKind::Request);
  }
}
