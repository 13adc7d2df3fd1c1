#include <doctest.h>

#include <cmath>
#include <vector>

#include "sharpineq/errors.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/numeric.hpp"

using namespace sharp;

namespace {

double fd(const GreenFamily& f, double lam, double h = 1e-5) {
  return (green(f, lam + h) - green(f, lam - h)) / (2.0 * h);
}

std::vector<GreenFamily> families() {
  return {GreenFamily::periodic_zero_mean(), GreenFamily::magnetic(Flux(0.5)), GreenFamily::magnetic(Flux(0.1)),
          GreenFamily::magnetic(Flux(0.8)),  GreenFamily::half_shifted(0.0),   GreenFamily::half_shifted(0.5),
          GreenFamily::half_shifted(0.9)};
}

}  // namespace

TEST_CASE("periodic zero-mean closed values") {
  const GreenFamily f = GreenFamily::periodic_zero_mean();
  CHECK(green(f, 0.0) == doctest::Approx(kPi / 6.0).epsilon(1e-15));
  // sum_{k != 0} 1/(k^2+1) = pi coth pi - 1
  CHECK(green(f, 1.0) == doctest::Approx((kPi / std::tanh(kPi) - 1.0) / (2.0 * kPi)).epsilon(1e-14));
  CHECK(green_derivative(f, 1.0) == doctest::Approx(fd(f, 1.0)).epsilon(1e-8));
}

TEST_CASE("magnetic and half-shifted closed forms at alpha = 1/2") {
  for (double lam : {0.01, 0.3, 1.0, 4.0, 250.0}) {
    const double s = std::sqrt(lam);
    CHECK(green(GreenFamily::magnetic(Flux(0.5)), lam) ==
          doctest::Approx(std::tanh(kPi * s) / (2.0 * s)).epsilon(1e-14));
    CHECK(green(GreenFamily::half_shifted(0.5), lam) ==
          doctest::Approx(kPi * std::tanh(kPi * s) / (2.0 * s)).epsilon(1e-14));
  }
  // d/dlambda of pi tanh(pi s)/(2 s) at lambda = 1
  const double s = 1.0;
  const double sech = 1.0 / std::cosh(kPi * s);
  const double hand = kPi / (4.0 * s * s * s) * (kPi * s * sech * sech - std::tanh(kPi * s));
  CHECK(green_derivative(GreenFamily::half_shifted(0.5), 1.0) == doctest::Approx(hand).epsilon(1e-12));
}

TEST_CASE("closed forms match the raw series") {
  for (const GreenFamily& f : families()) {
    for (double lam : {0.3, 1.0, 2.0, 17.0, 900.0}) {
      const double g = green(f, lam);
      const SeriesSum s = green_series(f, lam, 1000000);
      CAPTURE(f.name());
      CAPTURE(lam);
      CHECK(std::fabs(s.total() - g) <= 1e-10 * g);
    }
  }
}

TEST_CASE("series with cutoff 1 at lambda 0") {
  CHECK(green_series(GreenFamily::periodic_zero_mean(), 0.0, 1).partial == doctest::Approx(1.0 / kPi).epsilon(1e-15));
}

TEST_CASE("derivative matches finite differences and is negative") {
  for (const GreenFamily& f : families()) {
    const double lo = f.lambda_lower_bound();
    for (double lam : {lo + 0.05, lo + 0.7, 1.0, 2.0, 30.0, 5000.0}) {
      CAPTURE(f.name());
      CAPTURE(lam);
      const double d = green_derivative(f, lam);
      CHECK(d < 0.0);
      const double h = 1e-5 * std::max(1.0, std::fabs(lam));
      CHECK(d == doctest::Approx(fd(f, lam, h)).epsilon(1e-6));
    }
  }
}

TEST_CASE("endpoint behavior") {
  for (const GreenFamily& f : families()) {
    const double lo = f.lambda_lower_bound();
    const double eps = 1e-9;
    CAPTURE(f.name());
    CHECK(eps * green(f, lo + eps) == doctest::Approx(f.endpoint_residue()).epsilon(1e-6));
    CHECK_FALSE(f.admits(lo));
    CHECK_THROWS_AS(green(f, lo), DomainError);
  }
  CHECK(GreenFamily::periodic_zero_mean().lambda_lower_bound() == -1.0);
  CHECK(GreenFamily::magnetic(Flux(0.3)).lambda_lower_bound() == doctest::Approx(-0.09).epsilon(1e-15));
  CHECK(GreenFamily::magnetic(Flux(0.5)).endpoint_residue() == doctest::Approx(1.0 / kPi));
  CHECK(GreenFamily::magnetic(Flux(0.3)).endpoint_residue() == doctest::Approx(0.5 / kPi));
}

TEST_CASE("continuity across evaluation branches") {
  for (const GreenFamily& f : families()) {
    for (double lam : {1.0 / (4.0 * kPi * kPi), 0.2 * 1.21, 0.45, 0.75, 0.8, 1.0}) {
      CAPTURE(f.name());
      CAPTURE(lam);
      const double lo = lam * (1 - 1e-12), hi = lam * (1 + 1e-12);
      const double a = green(f, lo), b = green(f, hi);
      CHECK(std::fabs(a + green_derivative(f, lam) * (hi - lo) - b) <= 1e-13 * a);
    }
  }
}

TEST_CASE("flux reduction") {
  CHECK(Flux(1.25).value() == doctest::Approx(0.25));
  CHECK(Flux(-0.25).value() == doctest::Approx(0.75));
  CHECK(Flux(3.0).is_integer());
  CHECK(Flux(0.8).distance_to_integer() == doctest::Approx(0.2));
  CHECK_THROWS_AS(GreenFamily::magnetic(Flux(2.0)), DomainError);
  CHECK_THROWS_AS(GreenFamily::half_shifted(1.0), DomainError);
  CHECK(green(GreenFamily::magnetic(Flux(1.3)), 2.0) == green(GreenFamily::magnetic(Flux(0.3)), 2.0));
  CHECK(green(GreenFamily::magnetic(Flux(0.7)), 2.0) == doctest::Approx(green(GreenFamily::magnetic(Flux(0.3)), 2.0)));
}

TEST_CASE("upper envelope") {
  CHECK(green_upper_envelope(1.0) == doctest::Approx((kPi - 1.0 + std::exp(-kPi)) / (2.0 * kPi)).epsilon(1e-15));
  const GreenFamily f = GreenFamily::periodic_zero_mean();
  // the gap is about exp(-pi sqrt(lambda)), below double resolution for large lambda
  for (double lam : {0.01, 0.5, 1.0, 10.0, 100.0}) CHECK(green(f, lam) < green_upper_envelope(lam));
  for (double lam : {1e4, 1e6, 1e8}) {
    const double r = green_upper_envelope(lam) - 0.5 / std::sqrt(lam) + 1.0 / (2.0 * kPi * lam);
    CHECK(std::fabs(r) * lam < 1e-6);
  }
}
