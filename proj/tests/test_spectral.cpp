#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sharpineq/acceptance.hpp"
#include "sharpineq/errors.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/spectral.hpp"

using namespace sharp;

namespace {

MatrixPotential const_circle(double v, int P = 256) {
  return MatrixPotential::circle(1, P, [v](double) { return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, v)); });
}

MatrixPotential smooth_circle(std::mt19937_64& rng, double mean) {
  std::normal_distribution<double> nd;
  const double a1 = nd(rng), b1 = nd(rng), a2 = nd(rng), b2 = nd(rng);
  return MatrixPotential::circle(1, 256, [=](double x) {
    const double s = a1 * std::cos(x) + b1 * std::sin(x) + 0.5 * (a2 * std::cos(2 * x) + b2 * std::sin(2 * x));
    return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, mean * std::exp(s)));
  });
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("constant potential on the circle") {
  const SpectrumResult s = negative_spectrum(Flux(0.5), 64, const_circle(1.0), Geometry::circle());
  REQUIRE(s.negative_eigenvalues.size() == 2);
  CHECK(s.negative_eigenvalues[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(s.negative_eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(s.converged);
  const LTBoundReport lt = lt_bound_circle(s, const_circle(1.0), Flux(0.5), 1.0);
  CHECK(lt.lhs == doctest::Approx(1.5));
  CHECK(lt.rhs == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0)) * 2.0 * kPi).epsilon(1e-12));
  CHECK(lt.ratio == doctest::Approx(0.6202).epsilon(1e-3));

  const SpectrumResult weak = negative_spectrum(Flux(0.5), 64, const_circle(0.01), Geometry::circle());
  CHECK(weak.negative_eigenvalues.empty());
  const LTBoundReport lw = lt_bound_circle(weak, const_circle(0.01), Flux(0.5), 1.0);
  CHECK(lw.lhs == 0.0);
  CHECK(lw.ratio == 0.0);
  CHECK_THROWS_AS(lt_bound_circle(s, const_circle(1.0), Flux(0.5), 0.5), DomainError);
}

TEST_CASE("matrix constant potential separates into scalar channels") {
  const auto V = MatrixPotential::circle(2, 128, [](double) {
    Eigen::MatrixXcd m(2, 2);
    m << 3.0, std::complex<double>(0.0, 1.0), std::complex<double>(0.0, -1.0), 3.0;  // eigenvalues 2 and 4
    return m;
  });
  const SpectrumResult s = negative_spectrum(Flux(0.3), 32, V, Geometry::circle());
  std::vector<double> expected;
  for (double v : {2.0, 4.0})
    for (int n = -5; n <= 5; ++n) {
      const double e = v - (n + 0.3) * (n + 0.3);
      if (e > 0.0) expected.push_back(e);
    }
  std::sort(expected.begin(), expected.end(), std::greater<>());
  CHECK(max_diff(s.negative_eigenvalues, expected) < 1e-12);
}

TEST_CASE("self-convergence for smooth potentials") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    const MatrixPotential V = smooth_circle(rng, 10.0 / (2.0 * kPi));
    const SpectrumResult a = negative_spectrum(Flux(0.2), 32, V, Geometry::circle());
    const SpectrumResult b = negative_spectrum(Flux(0.2), 64, V, Geometry::circle());
    CHECK(a.converged);
    CHECK(max_diff(a.negative_eigenvalues, b.negative_eigenvalues) < 1e-8);
  }
}

TEST_CASE("gauge invariance and flux symmetries") {
  const int P = 256;
  const auto V = MatrixPotential::circle(1, P, [](double x) {
    return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, 6.0 + 4.0 * std::cos(x) + 2.0 * std::sin(2.0 * x)));
  });
  for (double alpha : {0.3, 0.5}) {
    std::vector<double> a(P), shifted(P, alpha + 1.0);
    for (int i = 0; i < P; ++i) {
      const double x = 2.0 * kPi * i / P;
      a[i] = alpha + 0.4 * std::sin(x) + 0.3 * std::cos(2.0 * x);
    }
    const auto ref = negative_spectrum(Flux(alpha), 32, V, Geometry::circle()).negative_eigenvalues;
    CHECK(max_diff(negative_part(assemble_with_vector_potential(a, 32, V)), ref) < 1e-10);
    CHECK(max_diff(negative_part(assemble_with_vector_potential(shifted, 32, V)), ref) < 1e-10);
    CHECK(max_diff(negative_spectrum(Flux(alpha + 1.0), 32, V, Geometry::circle()).negative_eigenvalues, ref) == 0.0);
    CHECK(max_diff(negative_spectrum(Flux(1.0 - alpha), 32, V, Geometry::circle()).negative_eigenvalues, ref) < 1e-10);
  }
}

TEST_CASE("adding a nonnegative bump never decreases eigenvalues") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int i = 0; i < 10; ++i) {
    const MatrixPotential V = smooth_circle(rng, 3.0);
    const double c = u(rng);
    std::vector<std::complex<double>> raw = V.raw();
    for (int p = 0; p < 256; ++p) raw[p] += 2.0 * std::exp(-4.0 * (1.0 - std::cos(V.x_point(p) - c)));
    const MatrixPotential W(GeometryKind::Circle, 1, {256}, 0.0, raw);
    const auto a = negative_spectrum(Flux(0.4), 32, V, Geometry::circle()).negative_eigenvalues;
    const auto b = negative_spectrum(Flux(0.4), 32, W, Geometry::circle()).negative_eigenvalues;
    REQUIRE(b.size() >= a.size());
    for (std::size_t n = 0; n < a.size(); ++n) CHECK(b[n] >= a[n] - 1e-12);
  }
}

TEST_CASE("torus with constant potential") {
  const double v = 5.0;
  const Geometry g = Geometry::torus2(Flux(0.5));
  const auto V = MatrixPotential::torus(1, 64, 64, [v](double, double) {
    return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, v));
  });
  const SpectrumResult s = negative_spectrum(Flux(0.5), 16, V, g);
  double exact = 0.0;
  for (int n = -5; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m) exact += std::max(0.0, v - (n + 0.5) * (n + 0.5) - (m + 0.5) * (m + 0.5));
  const LTBoundReport lt = lt_bound_product(g, Flux(0.5), s, V, 1.0);
  CHECK(lt.lhs == doctest::Approx(exact).epsilon(1e-10));
  CHECK(lt.rhs == doctest::Approx(kPi / 24.0 * 4.0 * kPi * kPi * v * v).epsilon(1e-12));
  CHECK(lt.satisfied);
  CHECK_THROWS_AS(lt_bound_product(g, Flux(0.5), s, V, 0.5), DomainError);
}

TEST_CASE("cylinder") {
  auto bump = [](double L, int My) {
    return MatrixPotential::cylinder(1, 32, 2 * My, L, [](double, double y) {
      return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, 3.0 * std::exp(-y * y)));
    });
  };
  SUBCASE("zero potential") {
    const auto Z = MatrixPotential::cylinder(1, 32, 64, 5.0, [](double, double) { return Eigen::MatrixXcd::Zero(1, 1); });
    const Geometry g = Geometry::cylinder(5.0, 32);
    const SpectrumResult s = negative_spectrum(Flux(0.5), 8, Z, g);
    CHECK(s.negative_eigenvalues.empty());
    CHECK(lt_bound_product(g, Flux(0.5), s, Z, 0.5).lhs == 0.0);
  }
  SUBCASE("Gaussian bump is stable in the window size") {
    std::vector<double> ratios;
    for (const auto& [L, My] : {std::pair{10.0, 32}, std::pair{20.0, 64}, std::pair{40.0, 128}}) {
      const Geometry g = Geometry::cylinder(L, My);
      const auto V = bump(L, My);
      const LTBoundReport r = lt_bound_product(g, Flux(0.5), negative_spectrum(Flux(0.5), 8, V, g), V, 0.5);
      CHECK(r.converged);
      CHECK(r.satisfied);
      CHECK(r.ratio <= 1.0);
      CHECK_FALSE(r.note.empty());
      ratios.push_back(r.ratio);
    }
    CHECK(ratios[1] == doctest::Approx(ratios[2]).epsilon(1e-4));
    CHECK(ratios[0] == doctest::Approx(ratios[2]).epsilon(1e-3));
  }
  SUBCASE("potential must vanish at the window edge") {
    const auto wide = MatrixPotential::cylinder(1, 32, 64, 2.0, [](double, double) {
      return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, 1.0));
    });
    CHECK_THROWS_AS(assemble(Flux(0.5), 8, wide, Geometry::cylinder(2.0, 32)), DomainError);
  }
}

TEST_CASE("assembly preconditions") {
  CHECK_THROWS_AS(assemble(Flux(0.5), 4, const_circle(1.0), Geometry::circle()), InputError);
  CHECK_THROWS_AS(assemble(Flux(0.5), 64, const_circle(1.0, 128), Geometry::circle()), InputError);
  CHECK_THROWS_AS(assemble(Flux(0.5), 2000, const_circle(1.0, 8192), Geometry::circle()), InputError);
  // [[1, i], [i, 1]] is not Hermitian; [[1, 2], [2, 1]] has eigenvalue -1
  const std::vector<std::complex<double>> skew{{1.0, 0.0}, {0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}};
  const std::vector<std::complex<double>> indefinite{{1.0, 0.0}, {2.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}};
  auto twice = [](std::vector<std::complex<double>> v) {
    v.insert(v.end(), v.begin(), v.end());
    return v;
  };
  CHECK_THROWS_AS(MatrixPotential(GeometryKind::Circle, 2, {2}, 0.0, twice(skew)), InputError);
  CHECK_THROWS_AS(MatrixPotential(GeometryKind::Circle, 2, {2}, 0.0, twice(indefinite)), InputError);
}

TEST_CASE("orthonormal trace inequality") {
  VectorFamily single{1, 1, {Eigen::MatrixXcd::Zero(1, 3)}};
  single.coefficients[0](0, 2) = 1.0;
  const VerificationReport r1 = orthonormal_trace_check(single, TraceMode::sobolev(DerivativeOrder(1.0)));
  CHECK(r1.lhs == doctest::Approx(1.0 / (4.0 * kPi * kPi)).epsilon(1e-13));
  CHECK(r1.rhs == doctest::Approx(1.0).epsilon(1e-14));
  const VerificationReport r2 = orthonormal_trace_check(single, TraceMode::sobolev(DerivativeOrder(2.0)));
  CHECK(r2.rhs == doctest::Approx(4.0 / 27.0).epsilon(1e-13));
  CHECK(r2.lhs == doctest::Approx(std::pow(2.0 * kPi, -4)).epsilon(1e-13));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const VectorFamily f = random_vector_family(rng, 1 + i % 6, 1 + i % 3, 3);
    for (const TraceMode& m : {TraceMode::sobolev(DerivativeOrder(1.0)), TraceMode::sobolev(DerivativeOrder(2.0)),
                               TraceMode::magnetic_flux(Flux(0.3)), TraceMode::magnetic_flux(Flux(0.5))})
      CHECK(orthonormal_trace_check(f, m).satisfied);
  }
  VectorFamily twice{1, 1, {single.coefficients[0], single.coefficients[0] * 2.0}};
  CHECK_THROWS_AS(orthonormal_trace_check(twice, TraceMode::sobolev(DerivativeOrder(1.0))), DomainError);
}
