#pragma once

namespace sharp {

// Order m > 1/2 of the interpolation inequality; theta = 1 - 1/(2m).
class DerivativeOrder {
 public:
  explicit DerivativeOrder(double m);
  double m() const { return m_; }
  double theta() const { return 1.0 - 1.0 / (2.0 * m_); }

 private:
  double m_;
};

// C(m) = 1 / (theta^theta (1-theta)^(1-theta) 2m sin(pi/2m)).
double sobolev_constant(DerivativeOrder m);
// c0(m) = 1 / (2m sin(pi/2m)).
double c_zero(DerivativeOrder m);
// L^cl_{gamma,d} = Gamma(gamma+1) / (2^d pi^(d/2) Gamma(gamma+d/2+1)).
double classical_lt_constant(double gamma, int d);

}  // namespace sharp
