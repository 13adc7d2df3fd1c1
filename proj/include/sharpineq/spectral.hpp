#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sharpineq/constants.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/verifier.hpp"

namespace sharp {

enum class GeometryKind { Circle, Torus2, Cylinder };

struct Geometry {
  GeometryKind kind = GeometryKind::Circle;
  double second_flux = 0.0;  // torus second-axis flux
  double half_length = 0.0;  // cylinder window [-L, L]
  int y_modes = 0;           // cylinder Dirichlet modes

  static Geometry circle() { return {}; }
  static Geometry torus2(Flux second) { return {GeometryKind::Torus2, second.value(), 0.0, 0}; }
  static Geometry cylinder(double half_length, int y_modes);
  std::string name() const;
};

// Hermitian PSD M x M samples on a uniform grid.
// Circle: x_p = 2 pi p / P. Torus: (x_p, y_q) both periodic. Cylinder: x_p periodic,
// y_q = -L + (q + 1/2) 2L / Q (midpoints). Flattened with the first axis fastest;
// each sample stored column-major.
class MatrixPotential {
 public:
  using Sampler1 = std::function<Eigen::MatrixXcd(double)>;
  using Sampler2 = std::function<Eigen::MatrixXcd(double, double)>;

  static MatrixPotential circle(int dimension, int points, const Sampler1& v);
  static MatrixPotential torus(int dimension, int points_x, int points_y, const Sampler2& v);
  static MatrixPotential cylinder(int dimension, int points_x, int points_y, double half_length,
                                  const Sampler2& v);
  // Raw construction; validates hermiticity and clips small negative eigenvalues.
  MatrixPotential(GeometryKind kind, int dimension, std::vector<int> shape, double half_length,
                  std::vector<std::complex<double>> samples);

  GeometryKind kind() const { return kind_; }
  int dimension() const { return m_; }
  const std::vector<int>& shape() const { return shape_; }
  double half_length() const { return half_length_; }
  long point_count() const;
  double cell_area() const;
  double x_point(int i) const;
  double y_point(int j) const;
  Eigen::MatrixXcd sample(long flat_index) const;
  const std::vector<std::complex<double>>& raw() const { return samples_; }

  // int Tr V^p by the trapezoid (periodic) / midpoint (cylinder y) rule.
  double trace_power_integral(double p) const;

 private:
  GeometryKind kind_;
  int m_;
  std::vector<int> shape_;
  double half_length_;
  std::vector<std::complex<double>> samples_;
};

struct GalerkinOperator {
  double flux;
  int truncation;
  Geometry geometry;
  int dimension;
  Eigen::MatrixXcd matrix;
};

// Matrices above this size are refused.
inline constexpr long kDenseLimit = 4000;

GalerkinOperator assemble(Flux flux, int truncation, const MatrixPotential& potential,
                          const Geometry& geometry);

// Plain Fourier basis e^{inx} with vector potential a(x) sampled on the potential grid
// (circle only): quadratic form of (i d/dx - a)^2 - V.
Eigen::MatrixXcd assemble_with_vector_potential(const std::vector<double>& a_samples,
                                                int truncation, const MatrixPotential& potential);

struct SpectrumResult {
  std::vector<double> negative_eigenvalues;  // lambda_n > 0, descending
  int truncation;
  int refined_truncation;  // truncation used for the convergence check (0 if none)
  double max_relative_shift;
  bool converged;
};

// Eigenvalues below -1e-10 of a Hermitian matrix, as positive magnitudes, descending.
std::vector<double> negative_part(const Eigen::MatrixXcd& h);

// Solves at the given truncation and re-solves at half of it for the convergence flag.
SpectrumResult negative_spectrum(Flux flux, int truncation, const MatrixPotential& potential,
                                 const Geometry& geometry);
SpectrumResult negative_spectrum(const GalerkinOperator& op, const MatrixPotential& potential);

struct LTBoundReport {
  std::string geometry;
  double gamma;
  double lhs;
  double rhs;
  double ratio;
  std::string constant_name;
  double constant_value;
  bool converged;
  bool satisfied;
  std::string note;
};

// gamma = 1: (2/(3 sqrt 3)) K(alpha) int Tr V^{3/2}; gamma > 1: (pi/sqrt 3) K(alpha) L^cl_{gamma,1}.
LTBoundReport lt_bound_circle(const SpectrumResult& spectrum, const MatrixPotential& potential,
                              Flux flux, double gamma);
// Torus gamma = 1: (pi/24) K(a1) K(a2) int Tr V^2.
// Cylinder gamma = 1/2: K(a)/(3 sqrt 3) int Tr V^{3/2}; gamma = 1: K(a)/(8 sqrt 3) int Tr V^2.
LTBoundReport lt_bound_product(const Geometry& geometry, Flux x_flux, const SpectrumResult& spectrum,
                               const MatrixPotential& potential, double gamma);

// Vector-valued trigonometric polynomials phi_n(x) = sum_k c[n](j, k) e^{i(k+shift)x} / sqrt(2 pi)
// with k = -K..K stored in column k+K.
struct VectorFamily {
  int dimension;
  int max_mode;
  std::vector<Eigen::MatrixXcd> coefficients;
};

struct TraceMode {
  bool magnetic = false;
  double m = 1.0;      // derivative order for the non-magnetic case
  double flux = 0.5;   // magnetic flux
  static TraceMode sobolev(DerivativeOrder m) { return {false, m.m(), 0.0}; }
  static TraceMode magnetic_flux(Flux a) { return {true, 1.0, a.value()}; }
};

// int Tr U^{2m+1} <= C(m)^{2m} sum ||phi_n^(m)||^2, or
// int Tr U^3 <= K(alpha)^2 sum ||(i d/dx - a) phi_n||^2 in the magnetic case.
VerificationReport orthonormal_trace_check(VectorFamily family, const TraceMode& mode);

VectorFamily random_vector_family(std::mt19937_64& rng, int count, int dimension, int max_mode);

}  // namespace sharp
