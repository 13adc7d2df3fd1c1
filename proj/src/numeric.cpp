#include "sharpineq/numeric.hpp"

#include <cmath>

#include "sharpineq/errors.hpp"

namespace sharp {

double lattice_tail(double x0, double lambda, int q, int p, int r) {
  if (!(x0 > 0.0)) throw DomainError("lattice_tail: start must be positive");
  if (2 * q * (r - p) <= 1) throw DomainError("lattice_tail: divergent tail");
  auto term = [&](double x) {
    const double x2q = std::pow(x, 2 * q);
    return std::pow(x, 2 * q * p) / std::pow(x2q + lambda, r);
  };
  CompensatedSum explicit_part;
  double x = x0;
  while (std::pow(x - 0.5, 2 * q) < 4.0 * std::fabs(lambda) || x - 0.5 < 200.0) {
    explicit_part += term(x);
    x += 1.0;
  }
  // Midpoint rule: sum_{j>=0} f(x + j) ~ int_{x-1/2}^inf f + f'(x-1/2)/24.
  // f = X^(2qp - 2qr) (1 + u)^-r with u = lambda / X^(2q); expand binomially.
  const double X = x - 0.5;
  const double u = lambda / std::pow(X, 2 * q);
  double coeff = 1.0;  // binom(-r, j)
  double upow = 1.0;
  CompensatedSum integral;
  for (int j = 0; j < 400; ++j) {
    const double e = 2.0 * q * p - 2.0 * q * r - 2.0 * q * j + 1.0;  // exponent after integration
    const double piece = coeff * upow * std::pow(X, e + 2.0 * q * j) / (-e);
    integral += piece;
    if (std::fabs(piece) <= 1e-18 * std::fabs(integral.value())) break;
    coeff *= -(r + j) / static_cast<double>(j + 1);
    upow *= u;
  }
  // Leading midpoint correction f'(X)/24.
  const double x2q = std::pow(X, 2 * q);
  const double fX = term(X);
  const double dfX = fX * (2.0 * q * p / X - 2.0 * q * r * x2q / (X * (x2q + lambda)));
  return explicit_part.value() + integral.value() + dfX / 24.0;
}

}  // namespace sharp
