#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sharpineq/green.hpp"

namespace sharp {

struct VCurvePoint {
  double d;
  double lambda;
  double v;
};

// D(lambda) = -G/G' - lambda; strictly increasing.
double d_of_lambda(const GreenFamily& family, double lambda);
// Inverse of d_of_lambda; the threshold D returns the lower endpoint exactly.
double lambda_of_d(const GreenFamily& family, double d);
// V(D) = (lambda(D) + D) G(lambda(D)).
VCurvePoint v_of_d(const GreenFamily& family, double d);
// V(D) = min_lambda (lambda + D) G(lambda) by golden section; independent path.
double v_of_d_by_minimization(const GreenFamily& family, double d);
std::vector<VCurvePoint> v_curve(const GreenFamily& family, std::span<const double> ds);

struct ExtremalNorms {
  double peak_sq;    // |u(peak)|^2
  double l2_sq;      // ||u||^2
  double energy_sq;  // ||u^(order)||^2, or the weighted l2 norm for sequences
};

// Coefficients scale / (w^(2 order) + lambda) with w = |k| (PeriodicZeroMean, k != 0),
// |n + alpha| (Magnetic, n in Z), k - alpha (HalfShifted, k >= 1); |index| <= truncation.
// PeriodicZeroMean: u = sum c_k e^{ikx} on [0, 2 pi].
// Magnetic: u = sum c_n e^{i(n+alpha)x} / sqrt(2 pi).
// HalfShifted: plain sequence norms.
class ExtremalFunction {
 public:
  ExtremalFunction(GreenFamily family, double lambda, long truncation, int order = 1,
                   double scale = 1.0);

  const GreenFamily& family() const { return family_; }
  double lambda() const { return lambda_; }
  long truncation() const { return truncation_; }
  int order() const { return order_; }
  double scale() const { return scale_; }

  double weight(long index) const;
  double coefficient(long index) const;
  // (index, coefficient) in increasing index order.
  std::vector<std::pair<long, double>> terms() const;
  std::vector<double> values() const;

  ExtremalNorms truncated_norms() const;
  // Truncated sums plus tails to infinity.
  ExtremalNorms norms() const;
  // Tail of the coefficient sum relative to the head.
  double tail_fraction() const;

 private:
  struct Sums {
    double s1, s2, sw;
  };
  Sums head_sums() const;
  Sums tail_sums() const;
  ExtremalNorms to_norms(const Sums& s) const;

  GreenFamily family_;
  double lambda_;
  long truncation_;
  int order_;
  double scale_;
};

ExtremalFunction extremal_sequence(const GreenFamily& family, double lambda, long truncation);
// Second-order extremal a_k = 1/((2k-1)^4 + 4) = (1/16) / ((k-1/2)^4 + 1/4).
ExtremalFunction landau_second_order_extremal(long truncation);

struct SharpConstantResult {
  double value;          // closed form when one exists
  double numeric_value;  // sup found by the scan
  std::optional<double> maximizer_lambda;
  std::optional<ExtremalFunction> extremal;
};

// K(alpha) = 2 sup_{lambda>0} sqrt(lambda) G_Magnetic(lambda).
double k_magnetic_closed_form(Flux alpha);
// (arccosh(1/cos 2 pi alpha) / 2 pi)^2 for alpha in (0,1/4) u (3/4,1).
std::optional<double> k_magnetic_maximizer(Flux alpha);
SharpConstantResult k_magnetic(Flux alpha, long extremal_truncation = 10000);

// F(alpha, lambda) = i(psi(1-alpha-i sqrt(lambda)) - psi(1-alpha+i sqrt(lambda))).
double carlson_landau_objective(double alpha, double lambda);
// dF/dlambda
double carlson_landau_objective_derivative(double alpha, double lambda);
// k(alpha) = max_lambda F(alpha, lambda), alpha in (1/2, 1).
SharpConstantResult k_carlson_landau(double alpha, long extremal_truncation = 10000);

}  // namespace sharp
