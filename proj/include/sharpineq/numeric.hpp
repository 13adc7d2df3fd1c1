#pragma once

#include <cmath>
#include <numbers>

namespace sharp {

inline constexpr double kPi = std::numbers::pi;

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sum_{j>=0} f(x0 + j) with f(x) = x^(2qp) / (x^(2q) + lambda)^r.
// Near terms are added explicitly; the rest is a midpoint integral tail
// expanded in powers of lambda / x^(2q). Needs 2q(r - p) > 1.
double lattice_tail(double x0, double lambda, int q, int p, int r);

}  // namespace sharp
