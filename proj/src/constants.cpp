#include "sharpineq/constants.hpp"

#include <cmath>

#include "sharpineq/errors.hpp"
#include "sharpineq/numeric.hpp"

namespace sharp {

DerivativeOrder::DerivativeOrder(double m) : m_(m) {
  if (!(m > 0.5) || !std::isfinite(m)) throw DomainError("derivative order must exceed 1/2");
}

double c_zero(DerivativeOrder m) {
  const double mm = m.m();
  return 1.0 / (2.0 * mm * std::sin(kPi / (2.0 * mm)));
}

double sobolev_constant(DerivativeOrder m) {
  const double t = m.theta();
  return c_zero(m) / (std::pow(t, t) * std::pow(1.0 - t, 1.0 - t));
}

double classical_lt_constant(double gamma, int d) {
  if (!(gamma >= 0.5) || !std::isfinite(gamma)) throw DomainError("classical constant: gamma >= 1/2");
  if (d < 1) throw DomainError("classical constant: d >= 1");
  const double lg = std::lgamma(gamma + 1.0) - std::lgamma(gamma + 0.5 * d + 1.0);
  return std::exp(lg) / (std::pow(2.0, d) * std::pow(kPi, 0.5 * d));
}

}  // namespace sharp
