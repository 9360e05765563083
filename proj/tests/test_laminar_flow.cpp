#include <cmath>
#include <random>

#include "doctest.h"
#include "waves/errors.hpp"
#include "waves/laminar_flow.hpp"

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

// Independent root of R'(d) = -1/d^3 + a^2 d/4 + 1 by plain bisection.
double bisect_critical(double a) {
  auto f = [a](double d) { return -1.0 / (d * d * d) + a * a * d / 4.0 + 1.0; };
  double lo = 1e-3, hi = 1.0 + 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (lo + hi);
    (f(m) < 0.0 ? lo : hi) = m;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("laminar_flow") {
  TEST_CASE("flow rejects non-positive or non-finite depth") {
    CHECK(kind_of([] { flow(0.0, 0.0); }) == ErrorKind::Domain);
    CHECK(kind_of([] { flow(0.0, -1.0); }) == ErrorKind::Domain);
    CHECK(kind_of([] { flow(NAN, 1.0); }) == ErrorKind::Domain);
    CHECK(flow(1.5, 2.0).d == 2.0);
  }

  TEST_CASE("stream profile boundary values and a hand value") {
    for (double a : {-7.0, 0.0, 3.3}) {
      const FlowParams p{a, 1.7};
      CHECK(stream_profile(p, 0.0) == 0.0);
      CHECK(stream_profile(p, 1.7) == 1.0);
    }
    CHECK(stream_profile({4.0, 1.0}, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kind_of([] { stream_profile({0.0, 1.0}, 1.5); }) == ErrorKind::Domain);
    CHECK(kind_of([] { stream_profile({0.0, 1.0}, -0.1); }) == ErrorKind::Domain);
  }

  TEST_CASE("Bernoulli function and its slope") {
    CHECK(bernoulli({0.0, 1.0}).slope == 0.0);
    CHECK(bernoulli({0.0, 2.0}).slope == doctest::Approx(7.0 / 8.0).epsilon(1e-15));
    CHECK(bernoulli({0.0, 2.0}).value == doctest::Approx(0.5 * 0.25 + 2.0).epsilon(1e-15));
    CHECK(std::abs(bernoulli({2.0, critical_depth(2.0)}).slope) <= 1e-12);
  }

  TEST_CASE("critical depth examples") {
    CHECK(critical_depth(0.0) == 1.0);
    CHECK(critical_depth(2.0) == doctest::Approx(0.81917251339616444).epsilon(1e-13));
    CHECK(critical_depth(-7.3) == doctest::Approx(0.50562118259923615).epsilon(1e-13));
    const double a = 100.0;
    const double series = std::sqrt(2.0) / 10.0 - 1e-4 + 3.0 / (std::pow(2.0, 1.5) * 1e7) - 1e-10;
    CHECK(std::abs(critical_depth(a) - series) / series <= 1e-6);
  }

  TEST_CASE("critical depth properties on random and gridded vorticity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
      const double a = ua(rng);
      const double dc = critical_depth(a);
      const Bernoulli b = bernoulli({a, dc});
      CHECK(std::abs(b.slope) <= 1e-10);
      CHECK(b.curvature > 0.0);
      CHECK(dc < 1.0);
      CHECK(stagnation_depth(a) > dc);
    }
    for (int i = -500; i <= 500; ++i) {
      const double a = 0.1 * i;
      CHECK(std::abs(critical_depth(a) - bisect_critical(a)) <= 1e-10);
    }
  }

  TEST_CASE("stagnation depth") {
    CHECK(stagnation_depth(2.0) == 1.0);
    CHECK(stagnation_depth(-2.0) == 1.0);
    CHECK(stagnation_depth(-0.5) == 2.0);
    CHECK(std::isinf(stagnation_depth(0.0)));
  }

  TEST_CASE("surface shear") {
    CHECK(surface_shear({2.0, 1.0}).kappa == 0.0);
    CHECK(surface_shear({0.0, 2.0}).kappa == 0.5);
    CHECK(surface_shear({0.0, 2.0}).rho0 == 1.0);
    CHECK(surface_shear({-4.0, 1.0}).kappa == 3.0);
    CHECK(surface_shear({-4.0, 1.0}).rho0 == 13.0);
  }

  TEST_CASE("classification and regions") {
    CHECK(classify({0.0, 2.0}) == DepthClass::Subcritical);
    CHECK(classify({0.0, 0.5}) == DepthClass::Supercritical);
    CHECK(classify({0.0, 1.0}) == DepthClass::Critical);
    CHECK(region({0.0, 3.0}) == RegionTag::Theta);
    CHECK(region({1.0, 1.0}) == RegionTag::Theta);
    CHECK(region({2.0, 1.5}) == RegionTag::UpsilonPlus);
    CHECK(region({-2.0, 1.5}) == RegionTag::UpsilonMinus);
    CHECK(region({2.0, 1.0}) == RegionTag::Boundary);
    CHECK(to_string(RegionTag::UpsilonMinus) == "UpsilonMinus");
  }

  TEST_CASE("stagnation height") {
    const StagnationPoint top = stagnation_height({2.0, stagnation_depth(2.0)});
    CHECK(*top.Y_star == doctest::Approx(1.0).epsilon(1e-15));
    const StagnationPoint bottom = stagnation_height({-2.0, stagnation_depth(-2.0)});
    CHECK(std::abs(*bottom.Y_star) <= 1e-15);
    const StagnationPoint s = stagnation_height({-4.0, std::sqrt(2.0)});
    CHECK(*s.Y_star == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(s.tag == RegionTag::UpsilonMinus);
    const StagnationPoint up = stagnation_height({2.0, 1.4});
    CHECK(*up.y_star > 0.7);
    CHECK(*up.y_star < 1.4);
    CHECK(up.tag == RegionTag::UpsilonPlus);
    const StagnationPoint theta = stagnation_height({1.0, 1.1});
    CHECK(theta.tag == RegionTag::Theta);
    CHECK((*theta.Y_star > 1.0 || *theta.Y_star < 0.0));
    CHECK_FALSE(stagnation_height({0.0, 2.0}).Y_star.has_value());
    CHECK(kind_of([] { stagnation_height({0.0, 0.9}); }) == ErrorKind::OutOfBranch);
  }

  TEST_CASE("relative stagnation height is monotone toward one half") {
    double prev = relative_stagnation_height(2.0);
    CHECK(prev == 1.0);
    for (double s = 2.5; s < 1e6; s *= 1.5) {
      const double y = relative_stagnation_height(s);
      CHECK(y < prev);
      CHECK(y > 0.5);
      prev = y;
    }
    prev = relative_stagnation_height(-2.0);
    CHECK(prev == 0.0);
    for (double s = -2.5; s > -1e6; s *= 1.5) {
      const double y = relative_stagnation_height(s);
      CHECK(y > prev);
      CHECK(y < 0.5);
      prev = y;
    }
  }
}
