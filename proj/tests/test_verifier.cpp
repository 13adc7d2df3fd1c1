#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>
#include <vector>

#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/verifier.hpp"

using namespace sharp;

namespace {

double rel_margin(const VerificationReport& r) { return r.margin / r.rhs; }

ModalCoefficients from_extremal(const ExtremalFunction& e) {
  const auto t = e.terms();
  ModalCoefficients u{t.front().first, {}};
  for (const auto& [n, c] : t) u.c.emplace_back(c, 0.0);
  return u;
}

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(SequenceData(std::vector<double>{}), InputError);
  CHECK_THROWS_AS(SequenceData({1.0, -0.5}), InputError);
  CHECK_THROWS_AS(SequenceData({0.0, 0.0}), InputError);
  CHECK_THROWS_AS(SequenceData({1.0, NAN}), InputError);
  const SequenceData s({3.0, 4.0});
  CHECK(s.sum() == 7.0);
  CHECK(s.norm0() == doctest::Approx(5.0));
  CHECK(s.norm1() == doctest::Approx(std::sqrt(0.25 * 9.0 + 2.25 * 16.0)));
  CHECK(s.weighted_norm(0.0, 1) == doctest::Approx(std::sqrt(9.0 + 64.0)));
}

TEST_CASE("inequality ids") {
  for (const InequalityId& id : InequalityId::all_default())
    CHECK(InequalityId::parse(id.name(), id.alpha()).name() == id.name());
  CHECK_THROWS_AS(InequalityId::parse("nope"), InputError);
  CHECK_THROWS_AS(InequalityId::magnetic_corrected(0.2), DomainError);
  CHECK_THROWS_AS(InequalityId::intermediate(1.0), DomainError);
  CHECK(InequalityId::intermediate(0.3).carlson_landau_constant() == doctest::Approx(kPi));
  CHECK(InequalityId::intermediate(0.7).carlson_landau_constant() ==
        doctest::Approx(k_carlson_landau(0.7, 100).value).epsilon(1e-14));
}

TEST_CASE("single-term Carlson") {
  const VerificationReport r = verify(InequalityId::carlson(), SequenceData({1.0}));
  CHECK(r.lhs == 1.0);
  CHECK(r.rhs == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(r.margin == doctest::Approx(kPi - 1.0).epsilon(1e-15));
  CHECK(r.satisfied);
}

TEST_CASE("margin tolerance") {
  CHECK(margin_ok(0.0, 1.0));
  CHECK(margin_ok(-1e-13, 1.0));
  CHECK_FALSE(margin_ok(-1e-11, 1.0));
  CHECK(margin_ok(-1e-9, 1e4));
}

TEST_CASE("second-order Landau extremal saturates") {
  std::vector<double> a(10000);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const double t = 2.0 * k - 1.0;
    a[k - 1] = 1.0 / (t * t * t * t + 4.0);
  }
  const VerificationReport r = verify(InequalityId::landau_second(), SequenceData(a));
  CHECK(r.satisfied);
  CHECK(std::fabs(rel_margin(r)) <= 1e-8);
}

TEST_CASE("corrected Landau on random 1/k^2 sequences") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const VerificationReport r = verify(InequalityId::landau_corrected(), random_sequence(rng, 200, 2.0));
    REQUIRE(r.satisfied);
  }
}

TEST_CASE("every default inequality on a random ensemble") {
  std::uint64_t seed = 11;
  for (const InequalityId& id : InequalityId::all_default()) {
    const EnsembleSummary s = run_random_ensemble(id, 300, seed++);
    CAPTURE(id.name());
    CHECK(s.count == 300);
    CHECK(s.violations == 0);
  }
}

TEST_CASE("first-order extremal families saturate monotonically") {
  // lambda grids stay where the exact margin exceeds the truncation error, about 4 sqrt(lambda) / (pi N)
  const std::vector<double> carlson_grid{1.0, 10.0, 100.0}, landau_grid{0.1, 0.3, 1.0, 3.0};
  for (const auto& [id, alpha, grid] : {std::tuple{InequalityId::carlson(), 0.0, carlson_grid},
                                        std::tuple{InequalityId::landau(), 0.5, landau_grid}}) {
    double prev = INFINITY;
    for (double lam : grid) {
      const SequenceData s(extremal_sequence(GreenFamily::half_shifted(alpha), lam, 2000000).values());
      const VerificationReport r = verify(id, s);
      CAPTURE(id.name());
      CAPTURE(lam);
      CHECK(r.satisfied);
      CHECK(rel_margin(r) < prev);
      prev = rel_margin(r);
    }
    CHECK(prev < 0.05);
  }
}

TEST_CASE("function norms from a sequence") {
  const FunctionNorms one = sequence_to_function_norms(SequenceData({1.0}));
  CHECK(one.norm == doctest::Approx(1.0));
  CHECK(one.derivative_norm == doctest::Approx(kPi));
  CHECK(one.sup_value == doctest::Approx(std::sqrt(2.0)));

  std::vector<double> a(40);
  for (std::size_t k = 1; k <= a.size(); ++k) a[k - 1] = 1.0 / (k * k + 0.3 * k);
  const SequenceData s(a);
  const FunctionNorms f = sequence_to_function_norms(s);
  const int P = 1 << 14;
  double l2 = 0.0, d1 = 0.0, d2 = 0.0, sup = 0.0;
  for (int j = 0; j < P; ++j) {
    const double x = (j + 0.5) / P;
    double u = 0.0, du = 0.0, ddu = 0.0;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      const double w = (2.0 * k - 1.0) * kPi, sg = (k % 2) ? 1.0 : -1.0;
      u += sg * a[k - 1] * std::sin(w * x);
      du += sg * a[k - 1] * w * std::cos(w * x);
      ddu -= sg * a[k - 1] * w * w * std::sin(w * x);
    }
    u *= std::sqrt(2.0);
    du *= std::sqrt(2.0);
    ddu *= std::sqrt(2.0);
    l2 += u * u;
    d1 += du * du;
    d2 += ddu * ddu;
    sup = std::max(sup, std::fabs(u));
  }
  CHECK(std::sqrt(l2 / P) == doctest::Approx(f.norm).epsilon(1e-10));
  CHECK(std::sqrt(d1 / P) == doctest::Approx(f.derivative_norm).epsilon(1e-10));
  CHECK(std::sqrt(d2 / P) == doctest::Approx(f.second_derivative_norm).epsilon(1e-10));
  CHECK(sup <= f.sup_value);
  CHECK(sup == doctest::Approx(f.sup_value).epsilon(1e-6));
}

TEST_CASE("doubling construction") {
  const SequenceData s({0.5, 0.25, 0.1});
  const ModalCoefficients b = doubled_modal_coefficients(s);
  CHECK(b.first_index == -3);
  REQUIRE(b.c.size() == 6);
  const ModalNorms n = modal_norms(0.5, b);
  // normalized basis: twice the sequence norms; the unnormalized basis carries another factor 2 pi
  CHECK(n.norm_sq == doctest::Approx(2.0 * s.norm0() * s.norm0()));
  CHECK(n.energy_sq == doctest::Approx(2.0 * s.norm1() * s.norm1()));
  CHECK(2.0 * kPi * n.energy_sq == doctest::Approx(4.0 * kPi * s.norm1() * s.norm1()));
  CHECK(n.sup_sq_bound == doctest::Approx(4.0 * s.sum() * s.sum() / (2.0 * kPi)));
}

TEST_CASE("magnetic corrected check") {
  SUBCASE("single mode at alpha 1/4") {
    const VerificationReport r = magnetic_corrected_check(0.25, ModalCoefficients{0, {1.0}});
    CHECK(r.lhs == doctest::Approx(1.0 / (2.0 * kPi)));
    CHECK(r.rhs == doctest::Approx(0.25 * (1.0 - 2.0 * std::exp(-kPi))).epsilon(1e-14));
    CHECK(r.satisfied);
  }
  SUBCASE("random coefficient vectors") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
      const double alpha = 0.25 + 0.05 * (i % 11);
      const VerificationReport r = magnetic_corrected_check(alpha, random_modal_coefficients(rng, 20, 1.5 + (i % 3)));
      CAPTURE(alpha);
      REQUIRE(r.satisfied);
    }
  }
  SUBCASE("extremal at alpha 1/2 approaches equality") {
    const GreenFamily f = GreenFamily::magnetic(Flux(0.5));
    double prev = INFINITY;
    for (double lam : {0.1, 0.3, 1.0}) {
      const VerificationReport r = magnetic_corrected_check(0.5, from_extremal(ExtremalFunction(f, lam, 1000000)));
      CHECK(r.margin > 0.0);
      CHECK(rel_margin(r) < prev);
      prev = rel_margin(r);
    }
    const VerificationReport big = magnetic_corrected_check(0.5, from_extremal(ExtremalFunction(f, 1e3, 100000)));
    CHECK(big.margin > 0.0);
    CHECK(rel_margin(big) < 1e-3);
  }
  CHECK_THROWS_AS(magnetic_corrected_check(0.2, ModalCoefficients{0, {1.0}}), DomainError);
}
