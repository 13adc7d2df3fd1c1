#include "sharpineq/green.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "sharpineq/errors.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/special_functions.hpp"

namespace sharp {

Flux::Flux(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("flux must be finite");
  double r = alpha - std::floor(alpha);
  if (r >= 1.0) r = 0.0;
  alpha_ = r;
}

double Flux::distance_to_integer() const { return std::min(alpha_, 1.0 - alpha_); }

GreenFamily GreenFamily::periodic_zero_mean() { return {FamilyKind::PeriodicZeroMean, 0.0}; }

GreenFamily GreenFamily::magnetic(Flux flux) {
  if (flux.is_integer()) throw DomainError("magnetic family needs non-integer flux");
  return {FamilyKind::Magnetic, flux.value()};
}

GreenFamily GreenFamily::half_shifted(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("half-shifted family needs alpha in [0,1)");
  return {FamilyKind::HalfShifted, alpha};
}

std::string GreenFamily::name() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::PeriodicZeroMean: return "periodic_zero_mean";
    case FamilyKind::Magnetic: os << "magnetic(" << alpha_ << ")"; break;
    case FamilyKind::HalfShifted: os << "half_shifted(" << alpha_ << ")"; break;
  }
  return os.str();
}

double GreenFamily::lambda_lower_bound() const {
  switch (kind_) {
    case FamilyKind::PeriodicZeroMean: return -1.0;
    case FamilyKind::Magnetic: {
      const double b = std::min(alpha_, 1.0 - alpha_);
      return -b * b;
    }
    case FamilyKind::HalfShifted: return -(1.0 - alpha_) * (1.0 - alpha_);
  }
  return 0.0;
}

double GreenFamily::endpoint_residue() const {
  switch (kind_) {
    case FamilyKind::PeriodicZeroMean: return 1.0 / kPi;  // modes k = +-1
    case FamilyKind::Magnetic: return alpha_ == 0.5 ? 1.0 / kPi : 1.0 / (2.0 * kPi);
    case FamilyKind::HalfShifted: return 1.0;
  }
  return 0.0;
}

namespace {

void check_admissible(const GreenFamily& f, double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  if (!f.admits(lambda)) {
    std::ostringstream os;
    os << "lambda=" << lambda << " not above lower bound " << f.lambda_lower_bound() << " for "
       << f.name();
    if (lambda == f.lambda_lower_bound()) throw PoleError(os.str());
    throw DomainError(os.str());
  }
}

// sum_{j>=0} (-lambda)^j zeta(2j+2, q) and its derivative; needs |lambda| < q^2.
struct Taylor {
  double value;
  double derivative;
};

Taylor shifted_power_series(double lambda, double q) {
  CompensatedSum v, d;
  double pw = 1.0;  // (-lambda)^j
  double prev = 1.0;
  for (int j = 0; j < 200; ++j) {
    const double z = hurwitz_zeta(2 * j + 2, q);
    const double term = pw * z;
    v += term;
    if (j >= 1) d += j * prev * z * -1.0;  // d/dlambda (-lambda)^j = -j (-lambda)^(j-1)
    if (std::fabs(term) < 1e-18 * std::fabs(v.value()) && j > 2) break;
    prev = pw;
    pw *= -lambda;
  }
  return {v.value(), d.value()};
}

// PZM: G = (1/pi) [ 1/(1+lambda) + sum_{k>=2} 1/(k^2+lambda) ].
Taylor pzm_near_zero(double lambda) {
  const Taylor r = shifted_power_series(lambda, 2.0);
  const double s = 1.0 / (1.0 + lambda);
  return {(s + r.value) / kPi, (-s * s + r.derivative) / kPi};
}

Taylor pzm(double lambda) {
  if (lambda <= 0.75) return pzm_near_zero(lambda);
  // lambda > 3/4: x = pi sqrt(lambda), G = pi (x coth x - 1) / (2 x^2).
  const double x = kPi * std::sqrt(lambda);
  const double e = std::exp(-2.0 * x);
  const double coth = (1.0 + e) / (1.0 - e);
  const double csch2 = 4.0 * e / ((1.0 - e) * (1.0 - e));
  const double x2 = x * x;
  const double g = kPi * (x * coth - 1.0) / (2.0 * x2);
  const double hp = (2.0 - x * coth - x2 * csch2) / (2.0 * x2 * x2);
  return {g, kPi * kPi * kPi / 2.0 * hp};
}

// Magnetic: G = pi S / (2 Q), S = sinh(phi)/phi, Q = sinh^2(phi/2) + sin^2(pi beta),
// phi = 2 pi sqrt(lambda); dQ/dlambda = pi^2 S.
Taylor magnetic(double alpha, double lambda, double lambda_min) {
  const double beta = std::min(alpha, 1.0 - alpha);
  const double sb = std::sin(kPi * beta);
  const double z = 4.0 * kPi * kPi * lambda;  // phi^2
  double S, dS, Q;
  if (lambda > 0.0 && z > 1.0) {
    // scaled by exp(-phi)
    const double phi = std::sqrt(z);
    const double e1 = std::exp(-phi);
    const double e2 = e1 * e1;
    S = (1.0 - e2) / (2.0 * phi);
    dS = 2.0 * kPi * kPi * (0.5 * phi * (1.0 + e2) - 0.5 * (1.0 - e2)) / (phi * phi * phi);
    Q = 0.25 * (1.0 - e1) * (1.0 - e1) + sb * sb * e1;
  } else {
    if (std::fabs(z) <= 1.0) {
      // S = sum z^k/(2k+1)!, dS/dlambda = 4 pi^2 sum k z^(k-1)/(2k+1)!
      double term = 1.0, s = 0.0, ds = 0.0;
      for (int k = 0; k < 30; ++k) {
        if (k > 0) term *= z / ((2.0 * k) * (2.0 * k + 1.0));
        s += term;
        if (k + 1 < 30) ds += (k + 1) * term / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        if (std::fabs(term) < 1e-18) break;
      }
      S = s;
      dS = 4.0 * kPi * kPi * ds;
    } else {
      const double psi = std::sqrt(-z);
      S = std::sin(psi) / psi;
      dS = -2.0 * kPi * kPi * (psi * std::cos(psi) - std::sin(psi)) / (psi * psi * psi);
    }
    if (lambda >= 0.0) {
      const double sh = std::sinh(0.5 * std::sqrt(std::max(z, 0.0)));
      Q = sh * sh + sb * sb;
    } else {
      const double t = std::sqrt(-lambda);
      // sin(pi(beta+t)) sin(pi(beta-t)), beta - t = (lambda - lambda_min)/(beta + t)
      Q = std::sin(kPi * (beta + t)) * std::sin(kPi * (lambda - lambda_min) / (beta + t));
    }
  }
  const double dQ = kPi * kPi * S;  // also valid for the scaled pair
  const double g = kPi * S / (2.0 * Q);
  const double dg = kPi / 2.0 * (dS / Q - S * dQ / (Q * Q));
  return {g, dg};
}

// HalfShifted: G = sum_{k>=1} 1/((k-alpha)^2 + lambda), w = 1 - alpha.
Taylor half_shifted(double alpha, double lambda) {
  const double w = 1.0 - alpha;
  const double q = 1.0 + w;
  if (lambda <= 0.2 * q * q) {  // negative lambda stays inside |lambda| < q^2 / 4
    const double s = 1.0 / (w * w + lambda);
    const Taylor r = shifted_power_series(lambda, q);
    return {s + r.value, -s * s + r.derivative};
  }
  // lambda > 0 here: G = Im psi(w + i s) / s, G' = (Re psi'(w+is) - G) / (2 s^2).
  const double s = std::sqrt(lambda);
  const std::complex<double> z(w, s);
  const double g = digamma(z).imag() / s;
  const double dg = (trigamma(z).real() - g) / (2.0 * lambda);
  return {g, dg};
}

Taylor evaluate(const GreenFamily& f, double lambda) {
  check_admissible(f, lambda);
  switch (f.kind()) {
    case FamilyKind::PeriodicZeroMean: return pzm(lambda);
    case FamilyKind::Magnetic: return magnetic(f.alpha(), lambda, f.lambda_lower_bound());
    case FamilyKind::HalfShifted: return half_shifted(f.alpha(), lambda);
  }
  return {0.0, 0.0};
}

}  // namespace

double green(const GreenFamily& family, double lambda) { return evaluate(family, lambda).value; }

double green_derivative(const GreenFamily& family, double lambda) {
  return evaluate(family, lambda).derivative;
}

SeriesSum green_series(const GreenFamily& family, double lambda, long cutoff) {
  check_admissible(family, lambda);
  if (cutoff < 1) throw DomainError("green_series: cutoff must be >= 1");
  const double a = family.alpha();
  CompensatedSum partial;
  double tail = 0.0;
  switch (family.kind()) {
    case FamilyKind::PeriodicZeroMean:
      for (long k = cutoff; k >= 1; --k) partial += 2.0 / (double(k) * double(k) + lambda);
      tail = 2.0 * lattice_tail(cutoff + 1.0, lambda, 1, 0, 1);
      return {partial.value() / (2.0 * kPi), tail / (2.0 * kPi)};
    case FamilyKind::Magnetic:
      for (long n = cutoff; n >= 0; --n) {
        const double up = n + a, dn = n - a;
        partial += 1.0 / (up * up + lambda);
        if (n > 0) partial += 1.0 / (dn * dn + lambda);
      }
      tail = lattice_tail(cutoff + 1.0 + a, lambda, 1, 0, 1) +
             lattice_tail(cutoff + 1.0 - a, lambda, 1, 0, 1);
      return {partial.value() / (2.0 * kPi), tail / (2.0 * kPi)};
    case FamilyKind::HalfShifted:
      for (long k = cutoff; k >= 1; --k) {
        const double x = k - a;
        partial += 1.0 / (x * x + lambda);
      }
      tail = lattice_tail(cutoff + 1.0 - a, lambda, 1, 0, 1);
      return {partial.value(), tail};
  }
  return {0.0, 0.0};
}

double green_upper_envelope(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("green_upper_envelope: lambda must be positive");
  const double x = kPi * std::sqrt(lambda);
  return (x - 1.0 + std::exp(-x)) / (2.0 * kPi * lambda);
}

}  // namespace sharp
