#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "iham/averaging.hpp"
#include "iham/errors.hpp"
#include "iham/problem.hpp"

namespace {

using namespace iham;

AveragingPolicy integral_policy() {
  return AveragingPolicy{AveragingMode::integral_harmonic, 1e-12};
}

}  // namespace

TEST_SUITE("averaging") {

TEST_CASE("constant coefficient averages to itself") {
  PiecewiseField beta = make_field("2.5", "2.5", 0.5);
  CHECK(harmonic_average_interval(beta, 0.1, 0.3, integral_policy()) ==
        doctest::Approx(2.5).epsilon(1e-14));
  AveragingPolicy mid{AveragingMode::midpoint, 1e-12};
  CHECK(harmonic_average_interval(beta, 0.1, 0.3, mid) ==
        doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("piecewise constant split at the interval midpoint") {
  // Equal-weight harmonic mean of 1.5 and 3 is 2.
  PiecewiseField beta = make_field("1.5", "3", 0.2);
  CHECK(harmonic_average_interval(beta, 0.15, 0.25, integral_policy()) ==
        doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("reciprocal integral oracle: beta(x) = x over [1, 2]") {
  // (∫₁² dx/x)⁻¹ = 1/ln 2.
  PiecewiseField beta = make_field("x", "x", 0.5);
  const double got = harmonic_average_interval(beta, 1.0, 2.0, integral_policy());
  CHECK(got == doctest::Approx(1.4426950408889634).epsilon(1e-13));
}

TEST_CASE("midpoint mode refuses interface-straddling intervals") {
  PiecewiseField beta = make_field("1.5", "3", 0.2);
  AveragingPolicy mid{AveragingMode::midpoint, 1e-12};
  CHECK_THROWS_AS(harmonic_average_interval(beta, 0.15, 0.25, mid), validation_error);
  // Touching the interface at an endpoint is allowed on either side.
  CHECK(harmonic_average_interval(beta, 0.1, 0.2, mid) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK(harmonic_average_interval(beta, 0.2, 0.3, mid) ==
        doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("policy tolerance must lie in (0, 1e-6]") {
  PiecewiseField beta = make_field("1", "1", 0.5);
  for (double bad : {0.0, -1e-12, 2e-6, 1e-3}) {
    AveragingPolicy p{AveragingMode::integral_harmonic, bad};
    CHECK_THROWS_AS(harmonic_average_interval(beta, 0.1, 0.3, p), validation_error);
  }
  AveragingPolicy boundary{AveragingMode::integral_harmonic, 1e-6};
  CHECK(harmonic_average_interval(beta, 0.1, 0.3, boundary) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(
      harmonic_average_interval(beta, 0.3, 0.1, integral_policy()), validation_error);
}

TEST_CASE("interface-weighted average closed form") {
  SUBCASE("equal coefficients collapse") {
    CHECK(interface_average(2.5, 2.5, 0.4, 0.5, 0.43) ==
          doctest::Approx(2.5).epsilon(1e-15));
  }
  SUBCASE("interface at the left node puts all weight on the right") {
    CHECK(interface_average(1.5, 3.0, 0.4, 0.5, 0.4) ==
          doctest::Approx(3.0).epsilon(1e-15));
  }
  SUBCASE("strong contrast at the midpoint") {
    // 2·(1.5·2000)/(1.5+2000)
    CHECK(interface_average(1.5, 2000.0, 0.0, 0.1, 0.05) ==
          doctest::Approx(6000.0 / 2001.5).epsilon(1e-14));
  }
  SUBCASE("pre-conditions") {
    CHECK_THROWS_AS(interface_average(0.0, 1.0, 0.0, 0.1, 0.05), validation_error);
    CHECK_THROWS_AS(interface_average(1.0, 1.0, 0.0, 0.1, 0.1), validation_error);
    CHECK_THROWS_AS(interface_average(1.0, 1.0, 0.0, 0.1, -0.01), validation_error);
  }
}

TEST_CASE("interface average equals the integral average for piecewise constants") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> bdist(0.1, 2000.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double bm = bdist(rng), bp = bdist(rng);
    const double lo = unit(rng);
    const double h = 0.01 + unit(rng);
    const double hi = lo + h;
    const double alpha = lo + unit(rng) * 0.999 * h;  // keep alpha < hi
    PiecewiseField beta = make_field("bm", "bp", alpha, {{"bm", bm}, {"bp", bp}});
    const double via_integral = harmonic_average_interval(beta, lo, hi, integral_policy());
    const double via_formula = interface_average(bm, bp, lo, hi, alpha);
    CHECK(std::abs(via_integral - via_formula) <= 1e-13 * std::abs(via_formula));
  }
}

TEST_CASE("averages stay between the coefficient bounds") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PiecewiseField smooth = make_field("1 + x^2", "log(2 + x)", 0.4);
  for (int i = 0; i < 200; ++i) {
    double lo = unit(rng) * 0.38;
    double hi = lo + 0.005 + unit(rng) * (0.39 - lo - 0.005);
    const double avg = harmonic_average_interval(smooth, lo, hi, integral_policy());
    double mn = 1e300, mx = -1e300;
    for (int k = 0; k <= 100; ++k) {
      const double v = smooth.left_value(lo + (hi - lo) * k / 100.0);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    CHECK(avg >= mn - 1e-12);
    CHECK(avg <= mx + 1e-12);
  }
  // A straddling interval stays within the two-sided bounds as well.
  PiecewiseField pc = make_field("1.5", "3", 0.4);
  for (int i = 0; i < 200; ++i) {
    const double lo = 0.4 - 0.01 - unit(rng) * 0.3;
    const double hi = 0.4 + 0.01 + unit(rng) * 0.3;
    const double avg = harmonic_average_interval(pc, lo, hi, integral_policy());
    CHECK(avg >= 1.5 - 1e-12);
    CHECK(avg <= 3.0 + 1e-12);
  }
}

TEST_CASE("integral and midpoint averages differ by O(h^2) for smooth beta") {
  PiecewiseField beta = make_field("1 + x^2", "1 + x^2", 10.0);  // interface far away
  const double x0 = 0.4;
  double prev_diff = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double h = 0.2 / (1 << level);
    const double integral =
        harmonic_average_interval(beta, x0 - 0.5 * h, x0 + 0.5 * h, integral_policy());
    const double mid = 1.0 + x0 * x0;
    const double diff = std::abs(integral - mid);
    if (level > 0) {
      const double ratio = prev_diff / diff;
      CHECK(ratio > 3.5);
      CHECK(ratio < 4.5);
    }
    prev_diff = diff;
  }
}

TEST_CASE("quadrature reports non-convergence on a reciprocal blow-up") {
  // beta → 0 at the left endpoint makes 1/beta non-integrable there.
  PiecewiseField beta = make_field("x - 1", "x - 1", -5.0);
  CHECK_THROWS_AS(harmonic_average_interval(beta, 1.0, 2.0, integral_policy()),
                  numerical_error);
}

}  // TEST_SUITE
