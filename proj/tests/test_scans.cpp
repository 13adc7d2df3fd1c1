#include <doctest.h>

#include <cmath>

#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/scans.hpp"

using namespace sharp;

TEST_CASE("W") {
  CHECK(std::round(w_function(0.5) * 1e4) / 1e4 == -0.3898);
  const double h = 1e-6;
  CHECK(w_derivative(2.0) == doctest::Approx((w_function(2.0 + h) - w_function(2.0 - h)) / (2 * h)).epsilon(1e-7));
  const ScanReport s = scan_w();
  CHECK(s.grid.count == 100000);
  CHECK(s.all_negative);
  CHECK(s.extras.at("derivative_worst_value") < 0.0);
  CHECK(s.worst_point == doctest::Approx(0.5));
}

TEST_CASE("Phi excess") {
  for (double alpha : {1.0 / 3.0, 0.375, 0.5, 0.7}) {
    CAPTURE(alpha);
    const double a = 2.0 * std::cos(2.0 * kPi * alpha);
    CHECK(phi_excess(alpha, 0.0) == 0.0);
    // the small-y expansion agrees with the closed form where both are used
    for (double y : {1e-6, 3e-6}) {
      const double l = std::log(y);
      const double quad = (-0.5 * a * a * l * l - 2.0 + a * a) * y * y;
      CHECK(phi_excess(alpha, y) == doctest::Approx(quad).epsilon(1e-3));
    }
    CHECK(phi_excess(alpha, 1e-6 * (1 - 1e-12)) == doctest::Approx(phi_excess(alpha, 1e-6)).epsilon(1e-4));
  }
  CHECK_THROWS_AS(phi_excess(0.25, 0.1), DomainError);
  CHECK_THROWS_AS(phi_excess(0.5, 0.5), DomainError);
}

TEST_CASE("Phi scans") {
  for (double alpha : {1.0 / 3.0, 0.375, 0.5}) {
    const ScanReport s = scan_phi(alpha);
    CHECK(s.grid.count == 1000000);
    CHECK(s.grid.spacing == "log");
    CHECK(s.all_negative);
  }
  const ScanReport k = scan_phi(0.4, ScanOptions{500, true});
  CHECK(k.samples.size() == 500);
  CHECK(k.samples.front().first == doctest::Approx(1e-12));
  CHECK(k.samples.back().first == doctest::Approx(std::exp(-0.8 * kPi)));
}

TEST_CASE("R against the series oracle") {
  for (double alpha : {0.0, 0.25, 0.4}) {
    for (double D : {1.0, 10.0, 1000.0}) {
      const double c = 2.0 * (1.0 - 2.0 * alpha) / kPi;
      const double lam = D - c * std::sqrt(D);
      const double g = green_series(GreenFamily::half_shifted(alpha), lam, 1000000).total();
      const double ref = (lam + D) * g - kPi * std::sqrt(D) + (1.0 - 2.0 * alpha);
      CAPTURE(alpha);
      CAPTURE(D);
      CHECK(r_function(D, alpha) == doctest::Approx(ref).epsilon(1e-7));
    }
  }
  // alpha = 1/2 closed form vs pi sqrt(D) (tanh(pi sqrt D) - 1)
  for (double D : {0.25, 1.0, 4.0}) {
    const double s = std::sqrt(D);
    CHECK(r_function(D, 0.5) == doctest::Approx(kPi * s * (std::tanh(kPi * s) - 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("R scans") {
  for (double alpha : {0.0, 0.25, 1.0 / 3.0, 0.5}) {
    const ScanReport s = scan_r(alpha);
    CAPTURE(alpha);
    CHECK(s.grid.count == 100000);
    CHECK(s.all_negative);
  }
}

TEST_CASE("R large-D slope") {
  for (double alpha : {0.0, 0.25, 1.0 / 3.0}) {
    const double slope = r_function(1e6, alpha) * 1e3;
    const double predicted = -(1.0 - 2.0 * alpha) * (1.0 - 2.0 * alpha) / (2.0 * kPi);
    CAPTURE(alpha);
    CHECK(slope == doctest::Approx(predicted).epsilon(0.05));
  }
  CHECK_THROWS_AS(r_function(0.1, 0.0), DomainError);
  CHECK_THROWS_AS(r_function(1.0, 0.6), DomainError);
}
