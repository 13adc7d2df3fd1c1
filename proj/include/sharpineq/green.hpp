#pragma once

#include <string>

namespace sharp {

// Magnetic flux, reduced mod 1 into [0, 1).
class Flux {
 public:
  explicit Flux(double alpha);
  double value() const { return alpha_; }
  bool is_integer() const { return alpha_ == 0.0; }
  // min(alpha, 1 - alpha)
  double distance_to_integer() const;

 private:
  double alpha_;
};

enum class FamilyKind { PeriodicZeroMean, Magnetic, HalfShifted };

class GreenFamily {
 public:
  static GreenFamily periodic_zero_mean();
  static GreenFamily magnetic(Flux flux);  // throws DomainError for integer flux
  static GreenFamily half_shifted(double alpha);  // alpha in [0, 1)

  FamilyKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  // G is defined for lambda > lambda_lower_bound().
  double lambda_lower_bound() const;
  // D threshold of the extremal problem: -lambda_lower_bound().
  double d_threshold() const { return -lambda_lower_bound(); }
  // lim (lambda - lower bound) * G(lambda).
  double endpoint_residue() const;
  bool admits(double lambda) const { return lambda > lambda_lower_bound(); }

 private:
  GreenFamily(FamilyKind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  FamilyKind kind_;
  double alpha_;
};

double green(const GreenFamily& family, double lambda);
double green_derivative(const GreenFamily& family, double lambda);

struct SeriesSum {
  double partial;  // explicit terms up to the cutoff
  double tail;     // integral-comparison estimate of the rest
  double total() const { return partial + tail; }
};

// Raw series: |k| <= cutoff (1 <= k <= cutoff for HalfShifted) plus tail.
SeriesSum green_series(const GreenFamily& family, double lambda, long cutoff);

// G0(lambda) = (pi sqrt(lambda) - 1 + exp(-pi sqrt(lambda))) / (2 pi lambda) > G_PZM.
double green_upper_envelope(double lambda);

}  // namespace sharp
