#include "sharpineq/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "sharpineq/errors.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/roots.hpp"
#include "sharpineq/special_functions.hpp"

namespace sharp {

double d_of_lambda(const GreenFamily& family, double lambda) {
  const double g = green(family, lambda);
  const double dg = green_derivative(family, lambda);
  return -g / dg - lambda;
}

namespace {

// D(lambda) - D_min written through eps = lambda - lambda_min to keep digits near the endpoint.
double d_excess(const GreenFamily& f, double eps) {
  const double lam = f.lambda_lower_bound() + eps;
  const double e = lam - f.lambda_lower_bound();
  return -green(f, lam) / green_derivative(f, lam) - e;
}

double asymptotic_lambda(const GreenFamily& f, double d) {
  double c = 0.0;
  switch (f.kind()) {
    case FamilyKind::PeriodicZeroMean: c = 2.0 / kPi; break;
    case FamilyKind::HalfShifted: c = 2.0 * (1.0 - 2.0 * f.alpha()) / kPi; break;
    case FamilyKind::Magnetic: return d;
  }
  return d - c * std::sqrt(d) - 0.5 * c * c;
}

void check_d(const GreenFamily& f, double d) {
  if (!std::isfinite(d) || d < f.d_threshold()) {
    std::ostringstream os;
    os << "D=" << d << " below threshold " << f.d_threshold() << " for " << f.name();
    throw DomainError(os.str());
  }
}

}  // namespace

double lambda_of_d(const GreenFamily& f, double d) {
  check_d(f, d);
  const double lmin = f.lambda_lower_bound();
  const double delta = d - f.d_threshold();
  if (delta == 0.0) return lmin;
  auto resid = [&](double eps) {
    if (lmin + eps == lmin) return -delta;
    return d_excess(f, eps) - delta;
  };
  double eps = asymptotic_lambda(f, d) - lmin;
  if (!(eps > 0.0) || !std::isfinite(eps)) eps = std::min(1.0, std::sqrt(delta));
  double lo = eps, hi = eps;
  double flo = resid(lo), fhi = flo;
  if (flo < 0.0) {
    for (int i = 0; fhi < 0.0; ++i) {
      if (i > 200) throw ConvergenceError("lambda_of_d: upper bracket not found");
      lo = hi; flo = fhi;
      hi = 2.0 * hi + 1.0;
      fhi = resid(hi);
    }
  } else {
    for (int i = 0; flo > 0.0; ++i) {
      hi = lo; fhi = flo;
      lo *= 0.5;
      if (lmin + lo == lmin || i > 2000) {
        lo = 0.0;
        flo = -delta;
        break;
      }
      flo = resid(lo);
    }
  }
  const RootResult r = brent_root(resid, lo, hi, flo, fhi, 0.0, 400);
  const double lam = lmin + r.x;
  if (std::fabs(r.fx) > 1e-10 * std::max(1.0, d)) {
    std::ostringstream os;
    os << "lambda_of_d: residual " << r.fx << " at D=" << d;
    throw ConvergenceError(os.str());
  }
  return lam;
}

VCurvePoint v_of_d(const GreenFamily& f, double d) {
  const double lam = lambda_of_d(f, d);
  const double lmin = f.lambda_lower_bound();
  if (lam == lmin) return {d, lam, f.endpoint_residue()};
  const double sum = (lam - lmin) + (d - f.d_threshold());
  return {d, lam, sum * green(f, lam)};
}

double v_of_d_by_minimization(const GreenFamily& f, double d) {
  check_d(f, d);
  const double lmin = f.lambda_lower_bound();
  const double delta = d - f.d_threshold();
  auto obj = [&](double u) {
    const double eps = std::exp(u);
    const double lam = lmin + eps;
    return ((lam - lmin) + delta) * green(f, lam);
  };
  const double lo = std::log(1e-14 * (1.0 + std::fabs(lmin)));
  const double hi = std::log(2.0 * d + 10.0 + f.d_threshold());
  const MinResult m = golden_minimize(obj, lo, hi, 1e-11, 1000);
  double best = m.fx;
  if (delta == 0.0) best = std::min(best, f.endpoint_residue());
  return best;
}

std::vector<VCurvePoint> v_curve(const GreenFamily& f, std::span<const double> ds) {
  std::vector<VCurvePoint> out;
  out.reserve(ds.size());
  for (double d : ds) out.push_back(v_of_d(f, d));
  return out;
}

// ---------------------------------------------------------------------------

ExtremalFunction::ExtremalFunction(GreenFamily family, double lambda, long truncation, int order,
                                   double scale)
    : family_(family), lambda_(lambda), truncation_(truncation), order_(order), scale_(scale) {
  if (!family.admits(lambda)) throw DomainError("extremal: lambda not admissible");
  if (truncation < 8) throw DomainError("extremal: truncation must be >= 8");
  if (order != 1 && order != 2) throw DomainError("extremal: order must be 1 or 2");
  if (order == 2 && lambda <= 0.0) throw DomainError("extremal: order 2 needs lambda > 0");
  if (!(scale > 0.0)) throw DomainError("extremal: scale must be positive");
}

double ExtremalFunction::weight(long index) const {
  switch (family_.kind()) {
    case FamilyKind::PeriodicZeroMean: return std::fabs(double(index));
    case FamilyKind::Magnetic: return std::fabs(index + family_.alpha());
    case FamilyKind::HalfShifted: return index - family_.alpha();
  }
  return 0.0;
}

double ExtremalFunction::coefficient(long index) const {
  const double w = weight(index);
  const double w2 = w * w;
  return scale_ / ((order_ == 1 ? w2 : w2 * w2) + lambda_);
}

std::vector<std::pair<long, double>> ExtremalFunction::terms() const {
  std::vector<std::pair<long, double>> out;
  const long n = truncation_;
  switch (family_.kind()) {
    case FamilyKind::PeriodicZeroMean:
      for (long k = -n; k <= n; ++k)
        if (k != 0) out.emplace_back(k, coefficient(k));
      break;
    case FamilyKind::Magnetic:
      for (long k = -n; k <= n; ++k) out.emplace_back(k, coefficient(k));
      break;
    case FamilyKind::HalfShifted:
      for (long k = 1; k <= n; ++k) out.emplace_back(k, coefficient(k));
      break;
  }
  return out;
}

std::vector<double> ExtremalFunction::values() const {
  std::vector<double> v;
  for (const auto& t : terms()) v.push_back(t.second);
  return v;
}

ExtremalFunction::Sums ExtremalFunction::head_sums() const {
  auto t = terms();
  // smallest terms first
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  CompensatedSum s1, s2, sw;
  for (const auto& [k, c] : t) {
    const double w = weight(k);
    const double wp = order_ == 1 ? w * w : w * w * w * w;
    s1 += c;
    s2 += c * c;
    sw += wp * c * c;
  }
  return {s1.value(), s2.value(), sw.value()};
}

ExtremalFunction::Sums ExtremalFunction::tail_sums() const {
  const double n1 = truncation_ + 1.0;
  const double a = family_.alpha();
  std::vector<double> starts;
  switch (family_.kind()) {
    case FamilyKind::PeriodicZeroMean: starts = {n1, n1}; break;
    case FamilyKind::Magnetic: starts = {n1 + a, n1 - a}; break;
    case FamilyKind::HalfShifted: starts = {n1 - a}; break;
  }
  Sums s{0.0, 0.0, 0.0};
  for (double x0 : starts) {
    s.s1 += scale_ * lattice_tail(x0, lambda_, order_, 0, 1);
    s.s2 += scale_ * scale_ * lattice_tail(x0, lambda_, order_, 0, 2);
    s.sw += scale_ * scale_ * lattice_tail(x0, lambda_, order_, 1, 2);
  }
  return s;
}

ExtremalNorms ExtremalFunction::to_norms(const Sums& s) const {
  switch (family_.kind()) {
    case FamilyKind::PeriodicZeroMean:
      return {s.s1 * s.s1, 2.0 * kPi * s.s2, 2.0 * kPi * s.sw};
    case FamilyKind::Magnetic:
      return {s.s1 * s.s1 / (2.0 * kPi), s.s2, s.sw};
    case FamilyKind::HalfShifted:
      return {s.s1 * s.s1, s.s2, s.sw};
  }
  return {0.0, 0.0, 0.0};
}

ExtremalNorms ExtremalFunction::truncated_norms() const { return to_norms(head_sums()); }

ExtremalNorms ExtremalFunction::norms() const {
  const Sums h = head_sums(), t = tail_sums();
  return to_norms({h.s1 + t.s1, h.s2 + t.s2, h.sw + t.sw});
}

double ExtremalFunction::tail_fraction() const { return tail_sums().s1 / head_sums().s1; }

ExtremalFunction extremal_sequence(const GreenFamily& family, double lambda, long truncation) {
  return ExtremalFunction(family, lambda, truncation, 1, 1.0);
}

ExtremalFunction landau_second_order_extremal(long truncation) {
  return ExtremalFunction(GreenFamily::half_shifted(0.5), 0.25, truncation, 2, 1.0 / 16.0);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kScanLo = 1e-8;
constexpr double kScanHi = 1e8;
constexpr int kScanPoints = 801;

struct ScanOutcome {
  std::vector<double> lam, val;
  int argmax;
  int local_maxima;
};

ScanOutcome log_scan(const std::function<double(double)>& g, double lo, double hi, int n) {
  ScanOutcome s;
  s.lam.resize(n);
  s.val.resize(n);
  for (int i = 0; i < n; ++i) {
    s.lam[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    s.val[i] = g(s.lam[i]);
  }
  s.argmax = int(std::max_element(s.val.begin(), s.val.end()) - s.val.begin());
  // count rises followed by falls, ignoring roundoff-level differences
  int last = 0;
  s.local_maxima = 0;
  for (int i = 1; i < n; ++i) {
    const double diff = s.val[i] - s.val[i - 1];
    const double tol = 1e-13 * std::fabs(s.val[i]);
    int sign = diff > tol ? 1 : (diff < -tol ? -1 : 0);
    if (sign == 0) continue;
    if (last == 1 && sign == -1) ++s.local_maxima;
    last = sign;
  }
  return s;
}

// Refine a maximizer by a root of the derivative inside the grid cell pair around argmax.
double refine_max(const std::function<double(double)>& dg, const ScanOutcome& s) {
  const int i = s.argmax;
  double a = s.lam[std::max(i - 1, 0)], b = s.lam[std::min<int>(i + 1, s.lam.size() - 1)];
  const double fa = dg(a), fb = dg(b);
  if (!(fa > 0.0 && fb < 0.0)) throw ConvergenceError("maximizer refinement: no derivative sign change");
  return brent_root(dg, a, b, fa, fb, 0.0, 400).x;
}

}  // namespace

double k_magnetic_closed_form(Flux alpha) {
  if (alpha.is_integer()) throw DomainError("K(alpha) is infinite for integer flux");
  const double a = alpha.value();
  if (a >= 0.25 && a <= 0.75) return 1.0;
  return 1.0 / std::fabs(std::sin(2.0 * kPi * a));
}

std::optional<double> k_magnetic_maximizer(Flux alpha) {
  if (alpha.is_integer()) throw DomainError("K(alpha) is infinite for integer flux");
  const double a = alpha.value();
  if (a >= 0.25 && a <= 0.75) return std::nullopt;
  const double phi = std::acosh(1.0 / std::cos(2.0 * kPi * a));
  const double r = phi / (2.0 * kPi);
  return r * r;
}

SharpConstantResult k_magnetic(Flux alpha, long extremal_truncation) {
  const GreenFamily fam = GreenFamily::magnetic(alpha);
  auto g = [&](double lam) { return 2.0 * std::sqrt(lam) * green(fam, lam); };
  auto dg = [&](double lam) {
    const double s = std::sqrt(lam);
    return green(fam, lam) / s + 2.0 * s * green_derivative(fam, lam);
  };
  // maximizer behaves like alpha^2 for small flux distance
  const double b = alpha.distance_to_integer();
  const ScanOutcome s = log_scan(g, std::min(kScanLo, 1e-2 * b * b), kScanHi, kScanPoints);
  if (s.local_maxima > 1) throw ConvergenceError("k_magnetic: several local maxima detected");
  SharpConstantResult res{k_magnetic_closed_form(alpha), 0.0, std::nullopt, std::nullopt};
  if (s.val.back() >= s.val[s.argmax] * (1.0 - 1e-13)) {
    for (int i = 1; i < kScanPoints; ++i)
      if (s.val[i] < s.val[i - 1] - 1e-13 * s.val[i])
        throw ConvergenceError("k_magnetic: objective not increasing toward infinity");
    if (std::fabs(s.val.back() - 1.0) > 1e-8)
      throw ConvergenceError("k_magnetic: right edge not at the limit value");
    res.numeric_value = s.val.back();
    return res;
  }
  const double lam = refine_max(dg, s);
  res.numeric_value = g(lam);
  res.maximizer_lambda = lam;
  res.extremal = extremal_sequence(fam, lam, extremal_truncation);
  return res;
}

double carlson_landau_objective(double alpha, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("F(alpha, lambda): lambda must be positive");
  const std::complex<double> z(1.0 - alpha, std::sqrt(lambda));
  return 2.0 * digamma(z).imag();
}

double carlson_landau_objective_derivative(double alpha, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("F(alpha, lambda): lambda must be positive");
  const double s = std::sqrt(lambda);
  const std::complex<double> z(1.0 - alpha, s);
  return trigamma(z).real() / s;
}

SharpConstantResult k_carlson_landau(double alpha, long extremal_truncation) {
  if (!(alpha > 0.5 && alpha < 1.0)) throw DomainError("k(alpha) needs alpha in (1/2, 1)");
  auto g = [&](double lam) { return carlson_landau_objective(alpha, lam); };
  auto dg = [&](double lam) { return carlson_landau_objective_derivative(alpha, lam); };
  const ScanOutcome s = log_scan(g, 1e-12, kScanHi, 1201);
  if (s.local_maxima > 1) throw ConvergenceError("k_carlson_landau: several local maxima detected");
  if (s.argmax == 0 || s.argmax == int(s.lam.size()) - 1)
    throw ConvergenceError("k_carlson_landau: maximizer outside the scan range");
  const double lam = refine_max(dg, s);
  const double v = g(lam);
  return {v, v, lam, extremal_sequence(GreenFamily::half_shifted(alpha), lam, extremal_truncation)};
}

}  // namespace sharp
