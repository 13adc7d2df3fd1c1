#include "sharpineq/scans.hpp"

#include <cmath>
#include <limits>

#include "sharpineq/errors.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/numeric.hpp"

namespace sharp {

namespace {

std::vector<double> make_grid(const GridSpec& g) {
  std::vector<double> x(g.count);
  for (long i = 0; i < g.count; ++i) {
    const double t = g.count == 1 ? 0.0 : double(i) / double(g.count - 1);
    if (g.spacing == "log")
      x[i] = std::exp(std::log(g.lo) + t * (std::log(g.hi) - std::log(g.lo)));
    else
      x[i] = g.lo + t * (g.hi - g.lo);
  }
  x.front() = g.lo;
  x.back() = g.hi;
  return x;
}

struct MaxTracker {
  double value = -std::numeric_limits<double>::infinity();
  double point = 0.0;
  bool all_negative = true;
  void add(double x, double v) {
    if (!(v < 0.0)) all_negative = false;
    if (v > value || std::isnan(v)) {
      value = v;
      point = x;
    }
  }
};

long points_or(const ScanOptions& opt, long fallback) {
  if (opt.points == 0) return fallback;
  if (opt.points < 2) throw InputError("scan needs at least 2 grid points");
  return opt.points;
}

}  // namespace

double w_function(double y) {
  return (8.0 * y * y + 4.0 * y + 1.0) * std::exp(-kPi * y) - (4.0 - kPi) * y - 1.0;
}

double w_derivative(double y) {
  return (-8.0 * kPi * y * y + (16.0 - 4.0 * kPi) * y + 4.0 - kPi) * std::exp(-kPi * y) - 4.0 + kPi;
}

ScanReport scan_w(const ScanOptions& opt) {
  GridSpec g{0.5, 50.0, points_or(opt, 100000), "uniform"};
  MaxTracker w, dw;
  ScanReport rep{"W", g, 0.0, 0.0, false, {}, {}};
  for (double y : make_grid(g)) {
    const double v = w_function(y);
    w.add(y, v);
    dw.add(y, w_derivative(y));
    if (opt.keep_samples) rep.samples.emplace_back(y, v);
  }
  rep.worst_value = w.value;
  rep.worst_point = w.point;
  rep.all_negative = w.all_negative && dw.all_negative;
  rep.extras["w_at_half"] = w_function(0.5);
  rep.extras["derivative_worst_value"] = dw.value;
  rep.extras["derivative_worst_point"] = dw.point;
  rep.extras["w_decreasing_from_half"] = w.value <= w_function(0.5) ? 1.0 : 0.0;
  return rep;
}

double phi_excess(double alpha, double y) {
  if (!(alpha > 0.25 && alpha < 0.75)) throw DomainError("Phi scan needs alpha in (1/4, 3/4)");
  if (!(y >= 0.0) || y > std::exp(-2.0 * kPi * alpha) * (1.0 + 1e-12))
    throw DomainError("Phi: y outside [0, exp(-2 pi alpha)]");
  const double a = 2.0 * std::cos(2.0 * kPi * alpha);
  if (y == 0.0) return 0.0;
  if (y < 1e-6) {
    const double l = std::log(y);
    return (-0.5 * a * a * l * l - 2.0 + a * a) * y * y;
  }
  using ld = long double;
  const ld yl = y, al = a;
  const ld ylog = yl * std::log(yl);
  const ld rad = 1.0L - 2.0L * al * ylog;
  if (!(rad > 0.0L)) throw ConvergenceError("Phi: nonpositive radicand");
  const ld sigma = std::sqrt(rad);
  const ld ys = std::pow(yl, sigma);
  const ld y2s = ys * ys;
  const ld phi = (1.0L - al * ylog) / sigma * (1.0L - y2s) / (1.0L + y2s - al * ys);
  return double(phi - (1.0L + al * yl));
}

ScanReport scan_phi(double alpha, const ScanOptions& opt) {
  if (!(alpha > 0.25 && alpha < 0.75)) throw DomainError("Phi scan needs alpha in (1/4, 3/4)");
  GridSpec g{1e-12, std::exp(-2.0 * kPi * alpha), points_or(opt, 1000000), "log"};
  MaxTracker t;
  ScanReport rep{"Phi", g, 0.0, 0.0, false, {{"alpha", alpha}}, {}};
  for (double y : make_grid(g)) {
    const double v = phi_excess(alpha, y);
    t.add(y, v);
    if (opt.keep_samples) rep.samples.emplace_back(y, v);
  }
  rep.worst_value = t.value;
  rep.worst_point = t.point;
  rep.all_negative = t.all_negative;
  return rep;
}

namespace {

// R at alpha = 1/2 in closed form: -2 pi sqrt(D) e^{-2 pi sqrt D} / (1 + e^{-2 pi sqrt D}).
double r_half_log10_abs(double d) {
  const double x = 2.0 * kPi * std::sqrt(d);
  return (std::log(x) - x - std::log1p(std::exp(-x))) / std::log(10.0);
}

}  // namespace

double r_function(double d, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("R needs alpha in [0, 1/2]");
  const double w = 1.0 - alpha;
  if (!(d >= w * w)) throw DomainError("R needs D >= (1-alpha)^2");
  const double sd = std::sqrt(d);
  if (alpha == 0.5) {
    const double x = 2.0 * kPi * sd;
    const double e = std::exp(-x);
    return -x * e / (1.0 + e);
  }
  const double c = 2.0 * (1.0 - 2.0 * alpha) / kPi;
  const double lam = d - c * sd;
  const double g = green(GreenFamily::half_shifted(alpha), lam);
  return (lam + d) * g - kPi * sd + (1.0 - 2.0 * alpha);
}

ScanReport scan_r(double alpha, const ScanOptions& opt) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("R scan needs alpha in [0, 1/2]");
  const double w = 1.0 - alpha;
  GridSpec g{w * w, 1e6, points_or(opt, 100000), "log"};
  MaxTracker t;
  ScanReport rep{"R", g, 0.0, 0.0, false, {{"alpha", alpha}}, {}};
  double worst_log = -std::numeric_limits<double>::infinity();
  for (double d : make_grid(g)) {
    const double v = r_function(d, alpha);
    if (alpha == 0.5) {
      // sign is fixed by the closed form; track magnitude in log scale past underflow
      const double lg = r_half_log10_abs(d);
      worst_log = std::max(worst_log, lg);
      t.value = std::max(t.value, v);
      if (v == t.value) t.point = d;
    } else {
      t.add(d, v);
    }
    if (opt.keep_samples) rep.samples.emplace_back(d, v);
  }
  rep.worst_value = t.value;
  rep.worst_point = t.point;
  rep.all_negative = t.all_negative;
  if (alpha == 0.5) rep.extras["log10_abs_worst"] = worst_log;
  const double dmax = g.hi;
  rep.extras["slope_at_dmax"] = r_function(dmax, alpha) * std::sqrt(dmax);
  rep.extras["slope_predicted"] = -(1.0 - 2.0 * alpha) * (1.0 - 2.0 * alpha) / (2.0 * kPi);
  return rep;
}

}  // namespace sharp
