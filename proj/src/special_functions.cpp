#include "sharpineq/special_functions.hpp"

#include <cmath>

#include "sharpineq/errors.hpp"
#include "sharpineq/numeric.hpp"

namespace sharp {
namespace {

constexpr double kShift = 8.0;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// ln z - 1/(2z) - sum B_2k / (2k z^2k), through z^-16.
template <class T>
T digamma_asymptotic(T z) {
  const T w = T(1.0) / (z * z);
  const T series =
      w * (1.0 / 12 -
           w * (1.0 / 120 -
                w * (1.0 / 252 -
                     w * (1.0 / 240 -
                          w * (1.0 / 132 -
                               w * (691.0 / 32760 - w * (1.0 / 12 - w * (3617.0 / 8160))))))));
  return std::log(z) - T(0.5) / z - series;
}

// 1/z + 1/(2z^2) + sum B_2k / z^(2k+1), through z^-19.
template <class T>
T trigamma_asymptotic(T z) {
  const T r = T(1.0) / z;
  const T w = r * r;
  const T series =
      w * (1.0 / 6 -
           w * (1.0 / 30 -
                w * (1.0 / 42 -
                     w * (1.0 / 30 -
                          w * (5.0 / 66 -
                               w * (691.0 / 2730 -
                                    w * (7.0 / 6 - w * (3617.0 / 510 - w * (43867.0 / 798)))))))));
  return r + 0.5 * w + r * series;
}

template <class T>
T digamma_impl(T z) {
  T acc(0.0);
  while (std::real(z) < kShift) {
    acc -= T(1.0) / z;
    z += 1.0;
  }
  return acc + digamma_asymptotic(z);
}

template <class T>
T trigamma_impl(T z) {
  T acc(0.0);
  while (std::real(z) < kShift) {
    acc += T(1.0) / (z * z);
    z += 1.0;
  }
  return acc + trigamma_asymptotic(z);
}

}  // namespace

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("digamma: pole at non-positive integer");
  if (x < 0.0) return digamma_impl(1.0 - x) - kPi / std::tan(kPi * x);
  return digamma_impl(x);
}

std::complex<double> digamma(std::complex<double> z) {
  if (z.imag() == 0.0) return digamma(z.real());
  if (z.real() < 0.0) return digamma_impl(1.0 - z) - kPi / std::tan(kPi * z);
  return digamma_impl(z);
}

double trigamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("trigamma: pole at non-positive integer");
  if (x < 0.0) {
    const double s = std::sin(kPi * x);
    return -trigamma_impl(1.0 - x) + kPi * kPi / (s * s);
  }
  return trigamma_impl(x);
}

std::complex<double> trigamma(std::complex<double> z) {
  if (z.imag() == 0.0) return trigamma(z.real());
  if (z.real() < 0.0) {
    const auto s = std::sin(kPi * z);
    return -trigamma_impl(1.0 - z) + kPi * kPi / (s * s);
  }
  return trigamma_impl(z);
}

double hurwitz_zeta(int s, double q) {
  if (s < 2) throw DomainError("hurwitz_zeta: order must be >= 2");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: shift must be positive");
  // Euler-Maclaurin with the head summed directly up to x >= max(12, s).
  static constexpr double kB2k[] = {1.0 / 6,  -1.0 / 30,   1.0 / 42, -1.0 / 30,
                                    5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
  const double x0 = std::max(12.0, static_cast<double>(s));
  CompensatedSum head;
  double x = q;
  while (x < x0) {
    head += std::pow(x, -s);
    x += 1.0;
  }
  const double xs = std::pow(x, -s);
  double tail = x * xs / (s - 1) + 0.5 * xs;
  // term_k = B_2k / (2k)! * s (s+1) ... (s+2k-2) * x^(-s-2k+1)
  double rising = s;           // (s)_{2k-1}
  double fact = 2.0;           // (2k)!
  double xpow = xs / x;        // x^(-s-2k+1)
  for (int k = 1; k <= 8; ++k) {
    const double term = kB2k[k - 1] / fact * rising * xpow;
    tail += term;
    if (std::fabs(term) < 1e-18 * std::fabs(tail)) break;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
    xpow /= x * x;
  }
  return head.value() + tail;
}

}  // namespace sharp
