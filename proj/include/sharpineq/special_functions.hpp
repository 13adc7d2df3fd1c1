#pragma once

#include <complex>

namespace sharp {

// Digamma psi(z). Throws PoleError at non-positive integers.
double digamma(double x);
std::complex<double> digamma(std::complex<double> z);

// Trigamma psi'(z).
double trigamma(double x);
std::complex<double> trigamma(std::complex<double> z);

// Hurwitz zeta zeta(s, q) = sum_{n>=0} (n + q)^-s for integer s >= 2, q > 0.
double hurwitz_zeta(int s, double q);

}  // namespace sharp
