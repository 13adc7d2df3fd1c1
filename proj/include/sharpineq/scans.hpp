#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sharp {

struct GridSpec {
  double lo;
  double hi;
  long count;
  std::string spacing;  // "uniform" or "log"
};

struct ScanReport {
  std::string scan_name;
  GridSpec grid;
  double worst_value;  // max of the scanned expression over the grid
  double worst_point;
  bool all_negative;
  std::map<std::string, double> extras;
  std::vector<std::pair<double, double>> samples;  // filled on request
};

struct ScanOptions {
  long points = 0;  // 0 selects the default density
  bool keep_samples = false;
};

// W(y) = (8y^2+4y+1) e^{-pi y} - (4-pi) y - 1 and its derivative.
double w_function(double y);
double w_derivative(double y);
// Scans W and W' on [1/2, 50] (default 1e5 uniform points).
ScanReport scan_w(const ScanOptions& opt = {});

// Phi(y) - (1 + a y), a = 2 cos(2 pi alpha); Phi(0) = 1.
double phi_excess(double alpha, double y);
// Scans on [1e-12, e^{-2 pi alpha}] (default 1e6 log points); alpha in (1/4, 3/4].
ScanReport scan_phi(double alpha, const ScanOptions& opt = {});

// R(D, alpha) = V*(D, alpha) - pi sqrt(D) + (1 - 2 alpha).
double r_function(double d, double alpha);
// Scans on [(1-alpha)^2, 1e6] (default 1e5 log points); alpha in [0, 1/2].
ScanReport scan_r(double alpha, const ScanOptions& opt = {});

}  // namespace sharp
