#pragma once

#include <functional>

namespace sharp {

struct RootResult {
  double x;
  double fx;
  int iterations;
};

// Brent's method on a sign-changing bracket [a, b] with known end values.
RootResult brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double xtol, int max_iter = 200);

struct MinResult {
  double x;
  double fx;
};

// Golden-section minimization of a unimodal f on [a, b].
MinResult golden_minimize(const std::function<double(double)>& f, double a, double b, double xtol,
                          int max_iter = 400);

}  // namespace sharp
