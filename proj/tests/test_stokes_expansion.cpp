#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "waves/dispersion.hpp"
#include "waves/errors.hpp"
#include "waves/stability.hpp"
#include "waves/stokes_expansion.hpp"

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

FlowParams random_subcritical(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(-6.0, 6.0), ur(0.02, 2.0);
  for (;;) {
    const double a = ua(rng);
    const FlowParams p{a, critical_depth(a) * (1.0 + ur(rng))};
    if (std::abs(surface_shear(p).kappa) > 0.1) return p;
  }
}

}  // namespace

TEST_SUITE("stokes_expansion") {
  TEST_CASE("first-order mode") {
    const FlowParams p{0.0, 2.0};
    const double tau = solve_dispersion(p).tau_star;
    const FirstOrderMode m = first_order(p, tau);
    CHECK(m.eta(0.0) == 1.0);
    CHECK(m.eta(std::numbers::pi / tau) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(m.psi(0.37, 0.0) == 0.0);
    CHECK(m.psi(0.0, 2.0) == doctest::Approx(-m.kappa).epsilon(1e-15));
    CHECK(kind_of([&] { first_order(p, 1.1 * tau); }) == ErrorKind::Consistency);
  }

  TEST_CASE("order-two coefficients at (0, 2) match a direct linear solve") {
    const FlowParams p{0.0, 2.0};
    const Order2Coefficients o = order2_coefficients(p, solve_dispersion(p).tau_star);
    CHECK(o.a1 == doctest::Approx(-0.28571480016253553).epsilon(1e-11));
    CHECK(o.b1 == doctest::Approx(2.0000013504272636).epsilon(1e-11));
    CHECK(o.c1 == doctest::Approx(0.57142870004063388).epsilon(1e-11));
    CHECK(std::abs(o.d1 - -6.7521363181930765e-7) <= 1e-14);
  }

  TEST_CASE("order-three coefficients at (0, 2)") {
    const FlowParams p{0.0, 2.0};
    const Order3Coefficients o = order3_coefficients(p, solve_dispersion(p).tau_star);
    CHECK(o.a2 == doctest::Approx(117.42896138176214).epsilon(1e-10));
    CHECK(o.b2 == doctest::Approx(6.0000054017102703).epsilon(1e-10));
    CHECK(std::abs(o.d2 - 9.0028382928489488e-7) <= 1e-13);
    CHECK(o.lambda2 == doctest::Approx(13.714334072598062).epsilon(1e-10));
    CHECK(std::signbit(o.lambda2) != std::signbit(mu2(p).mu2));
  }

  TEST_CASE("linear-system invariants on random subcritical flows") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      const FlowParams p = random_subcritical(rng);
      const ExpansionCoefficients c = expansion_coefficients(p, 0.3);
      const double k = c.kappa, d = p.d, r0 = 1.0 - p.a * k, t = c.tau_star;
      const auto& o2 = c.o2;
      const auto& o3 = c.o3;
      auto small = [](double r, double scale) { return std::abs(r) <= 1e-10 * std::max(1.0, scale); };
      CHECK(small(k * o2.a1 + d * o2.c1 + o2.A1, std::abs(o2.A1) + std::abs(d * o2.c1)));
      CHECK(small(r0 * o2.a1 + k * o2.c1 + o2.B1 + o2.C1, std::abs(o2.B1) + std::abs(o2.C1) + std::abs(r0 * o2.a1)));
      CHECK(small(k * o2.b1 + o2.d1 + o2.A1, std::abs(o2.A1) + std::abs(k * o2.b1)));
      CHECK(small(r0 * o2.b1 + k * c.gamma2 * o2.d1 + o2.B1, std::abs(o2.B1) + std::abs(r0 * o2.b1)));
      CHECK(small(k * o3.b2 + o3.d2 + o3.B2, std::abs(o3.B2) + std::abs(k * o3.b2)));
      CHECK(small(r0 * o3.b2 + k * c.gamma3 * o3.d2 + o3.D2, std::abs(o3.D2) + std::abs(r0 * o3.b2)));
      // cos(tau* x) equations of order three
      const double g1 = c.gamma1;
      const double e1 = k * o3.a2 - d * k * g1 * o3.lambda2 + o3.c2 + o3.A2;
      const double e2 = r0 * o3.a2 - k * k * (d * t * t + g1) * o3.lambda2 + k * g1 * o3.c2 + o3.C2;
      CHECK(small(e1, std::abs(o3.A2) + std::abs(k * o3.a2)));
      CHECK(small(e2, std::abs(o3.C2) + std::abs(r0 * o3.a2)));
      CHECK(o2.sigma2 > 0.0);
      CHECK(o3.sigma3 > 0.0);
    }
  }

  TEST_CASE("free constant c2 only shifts a2") {
    const FlowParams p{-2.0, 1.2};
    const double tau = solve_dispersion(p).tau_star;
    const Order3Coefficients z = order3_coefficients(p, tau, 0.0);
    const Order3Coefficients one = order3_coefficients(p, tau, 1.0);
    CHECK(z.lambda2 == one.lambda2);
    CHECK(one.a2 - z.a2 == doctest::Approx(-1.0 / surface_shear(p).kappa).epsilon(1e-12));
  }

  TEST_CASE("criticality is refused") {
    CHECK(kind_of([] { order2_coefficients({0.0, 1.0}, 0.0); }) == ErrorKind::Criticality);
  }

  TEST_CASE("branch evaluation") {
    const FlowParams p{1.0, 1.1};
    const BranchState laminar = make_branch(p, 0.0);
    const BranchValue v = evaluate_branch(laminar, 0.4, 0.5);
    CHECK(v.eta == 1.1);
    CHECK(v.psi == doctest::Approx(stream_profile(p, 0.5)).epsilon(1e-15));
    CHECK(v.lambda == 1.0);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ut(0.0, 0.05);
    for (int i = 0; i < 50; ++i) {
      const BranchState s = make_branch(p, ut(rng));
      const double x = ux(rng);
      CHECK(evaluate_branch(s, x, 0.0).psi == 0.0);
      CHECK(surface_jet(s, x).eta == doctest::Approx(surface_jet(s, -x).eta).epsilon(1e-14));
    }
    const BranchState s = make_branch(p, 0.02);
    CHECK(kind_of([&] { evaluate_branch(s, 0.0, surface_jet(s, 0.0).eta + 0.01); }) == ErrorKind::Domain);
    CHECK(branch_lambda(s) == doctest::Approx(1.0 + 0.0004 * s.coeffs.o3.lambda2).epsilon(1e-15));
  }

  TEST_CASE("stream jet derivatives against central differences") {
    const BranchState s = make_branch({-2.0, 1.2}, 0.05);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ux(0.0, 6.0), uy(0.1, 1.0);
    const double h = 1e-4;
    for (int i = 0; i < 5; ++i) {
      const double x = ux(rng), y = uy(rng);
      auto psi = [&](double xx, double yy) { return stream_jet(s, xx, yy).psi; };
      const StreamJet j = stream_jet(s, x, y);
      CHECK(std::abs(j.psi_x - (psi(x + h, y) - psi(x - h, y)) / (2 * h)) <= 1e-6);
      CHECK(std::abs(j.psi_y - (psi(x, y + h) - psi(x, y - h)) / (2 * h)) <= 1e-6);
      CHECK(std::abs(j.psi_xx - (psi(x + h, y) - 2 * psi(x, y) + psi(x - h, y)) / (h * h)) <= 1e-6);
      CHECK(std::abs(j.psi_yy - (psi(x, y + h) - 2 * psi(x, y) + psi(x, y - h)) / (h * h)) <= 1e-6);
      const double mixed = (psi(x + h, y + h) - psi(x + h, y - h) - psi(x - h, y + h) + psi(x - h, y - h)) / (4 * h * h);
      CHECK(std::abs(j.psi_xy - mixed) <= 1e-6);
      const SurfaceJet e = surface_jet(s, x);
      auto eta = [&](double xx) { return surface_jet(s, xx).eta; };
      CHECK(std::abs(e.eta_x - (eta(x + h) - eta(x - h)) / (2 * h)) <= 1e-6);
      CHECK(std::abs(e.eta_xx - (eta(x + h) - 2 * eta(x) + eta(x - h)) / (h * h)) <= 1e-6);
    }
  }

  TEST_CASE("residuals vanish at t = 0 and decay at least like t^4") {
    const FlowParams p{0.0, 2.0};
    const BranchResiduals r0 = branch_residuals(make_branch(p, 0.0));
    CHECK(r0.field <= 1e-13);
    CHECK(r0.kinematic <= 1e-14);
    CHECK(r0.bernoulli <= 1e-13);
    const BranchResiduals r2 = branch_residuals(make_branch(p, 1e-2));
    const BranchResiduals r3 = branch_residuals(make_branch(p, 1e-3));
    for (auto [big, tiny] : {std::pair{r2.field, r3.field}, std::pair{r2.kinematic, r3.kinematic},
                             std::pair{r2.bernoulli, r3.bernoulli}}) {
      const double slope = std::log10(big / tiny);
      CHECK(slope >= 3.7);
    }
    CHECK(kind_of([&] { branch_residuals(make_branch(p, 5.0)); }) == ErrorKind::Domain);
  }
}
