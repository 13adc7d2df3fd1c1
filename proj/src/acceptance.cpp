#include "sharpineq/acceptance.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "sharpineq/constants.hpp"
#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/numeric.hpp"
#include "sharpineq/scans.hpp"
#include "sharpineq/spectral.hpp"
#include "sharpineq/verifier.hpp"

namespace sharp {

double two_mode_brute_force(int theta_steps, int phase_steps) {
  double best = 0.0;
  for (int i = 0; i <= theta_steps; ++i) {
    const double th = 0.5 * kPi * i / theta_steps;
    for (int j = 0; j < phase_steps; ++j) {
      const double ph = 2.0 * kPi * j / phase_steps;
      // c1 = cos th / sqrt(2 pi), c-1 = e^{i ph} sin th / sqrt(2 pi)
      const std::complex<double> u0 = (std::cos(th) + std::polar(std::sin(th), ph)) / std::sqrt(2.0 * kPi);
      best = std::max(best, std::norm(u0));
    }
  }
  return best;
}

namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct Detail {
  std::ostringstream os;
  bool ok = true;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      os << "FAILED " << what << "; ";
    }
  }
  template <class T>
  Detail& operator<<(const T& x) {
    os << x;
    return *this;
  }
};

void c1_w(Detail& d, std::uint64_t) {
  const double w = w_function(0.5);
  const double rounded = std::round(w * 1e4) / 1e4;
  const ScanReport s = scan_w();
  d << "W(1/2)=" << fmt("%.6f", w) << " points=" << s.grid.count
    << " max W=" << fmt("%.6f", s.worst_value) << " max W'=" << fmt("%.6f", s.extras.at("derivative_worst_value")) << "; ";
  d.check(rounded == -0.3898, "W(1/2) to 4 decimals");
  d.check(s.all_negative, "W and W' negative on [1/2,50]");
}

void c2_k(Detail& d, std::uint64_t) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = (i + 0.5) / 50.0;
    const SharpConstantResult r = k_magnetic(Flux(a));
    worst = std::max(worst, std::fabs(r.numeric_value - r.value));
  }
  const double k_half = k_magnetic(Flux(0.5)).value;
  const double k_eighth = k_magnetic(Flux(0.125)).value;
  d << "max |numeric-closed|=" << fmt("%.3e", worst) << " K(1/2)=" << fmt("%.17g", k_half)
    << " K(1/8)=" << fmt("%.17g", k_eighth) << "; ";
  d.check(worst <= 1e-8, "numeric sup within 1e-8");
  d.check(k_half == 1.0, "K(1/2)=1");
  d.check(std::fabs(k_eighth - std::sqrt(2.0)) <= 2.3e-16 * std::sqrt(2.0), "K(1/8)=sqrt2");
}

void c3_v(Detail& d, std::uint64_t) {
  const GreenFamily f = GreenFamily::periodic_zero_mean();
  for (double D : {1e3, 1e4, 1e5, 1e6}) {
    const double v = v_of_d(f, D).v;
    const double err = std::fabs(v - (std::sqrt(D) - 1.0 / kPi - 0.5 / (kPi * kPi) / std::sqrt(D)));
    d << "D=" << fmt("%.0e", D) << " err*D=" << fmt("%.4f", err * D) << " ";
    d.check(err <= 5.0 / D, "asymptotic expansion at D=" + fmt("%.0e", D));
  }
  double worst = -INFINITY;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    const double D = std::pow(10.0, 6.0 * i / (n - 1));
    worst = std::max(worst, v_of_d(f, D).v - (std::sqrt(D) - 1.0 / kPi));
  }
  d << "; max V-(sqrtD-1/pi) over " << n << " D in [1,1e6]=" << fmt("%.3e", worst) << "; ";
  d.check(worst < 0.0, "V(D) < sqrt(D) - 1/pi");
}

void c4_endpoint(Detail& d, std::uint64_t) {
  const GreenFamily f = GreenFamily::periodic_zero_mean();
  const double lam = lambda_of_d(f, 1.0);
  const double v = v_of_d(f, 1.0).v;
  const double oracle = two_mode_brute_force(2000, 64);
  d << "lambda(1)=" << fmt("%.17g", lam) << " V(1)=" << fmt("%.15f", v) << " oracle=" << fmt("%.15f", oracle) << "; ";
  d.check(lam == -1.0, "lambda(1) = -1 exactly");
  d.check(std::fabs(v - 1.0 / kPi) <= 1e-9, "V(1) = 1/pi");
  d.check(std::fabs(v - oracle) <= 1e-9, "V(1) matches two-mode oracle");
}

void c5_landau2(Detail& d, std::uint64_t) {
  std::vector<double> a(10000);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    const double t = 2.0 * k - 1.0;
    a[k - 1] = 1.0 / (t * t * t * t + 4.0);
  }
  const VerificationReport r = verify(InequalityId::landau_second(), SequenceData(a));
  const double rel = r.margin / r.rhs;
  d << "lhs=" << fmt("%.15g", r.lhs) << " rhs=" << fmt("%.15g", r.rhs) << " margin/rhs=" << fmt("%.3e", rel) << "; ";
  d.check(r.satisfied, "inequality holds");
  d.check(std::fabs(rel) <= 1e-8, "relative margin <= 1e-8");
}

void c6_scans(Detail& d, std::uint64_t) {
  for (double a : {1.0 / 3.0, 0.375, 0.5}) {
    const ScanReport s = scan_phi(a);
    d << "Phi(" << fmt("%.4f", a) << ") n=" << s.grid.count << " max=" << fmt("%.3e", s.worst_value) << " ";
    d.check(s.all_negative && s.grid.count == 1000000, "Phi scan at alpha=" + fmt("%.4f", a));
  }
  for (double a : {0.0, 0.25, 1.0 / 3.0, 0.5}) {
    const ScanReport s = scan_r(a);
    d << "R(" << fmt("%.4f", a) << ") n=" << s.grid.count << " max=" << fmt("%.3e", s.worst_value) << " ";
    d.check(s.all_negative && s.grid.count == 100000, "R scan at alpha=" + fmt("%.4f", a));
  }
  d << "; ";
}

void c7_random(Detail& d, std::uint64_t seed) {
  long total = 0, violations = 0;
  double worst = INFINITY;
  std::uint64_t s = seed;
  for (const InequalityId& id : InequalityId::all_default()) {
    const EnsembleSummary e = run_random_ensemble(id, 10000, s++);
    total += e.count;
    violations += e.violations;
    worst = std::min(worst, e.worst_relative_margin);
  }
  d << "ids=" << InequalityId::all_default().size() << " sequences=" << total << " violations=" << violations
    << " min relative margin=" << fmt("%.3e", worst) << "; ";
  d.check(violations == 0, "no violations");
}

MatrixPotential random_circle_potential(std::mt19937_64& rng, int M, int P) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> amp(0.5, 100.0);  // peak operator norm
  const int K = 3;
  std::vector<Eigen::MatrixXcd> g(2 * K + 1);
  for (auto& m : g) {
    m.resize(M, M);
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) {
        const double re = nd(rng), im = nd(rng);
        m(i, j) = {re, im};
      }
  }
  auto shape = [&](double x) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(M, M);
    for (int k = -K; k <= K; ++k) b += g[k + K] * std::polar(1.0, k * x);
    return Eigen::MatrixXcd(b * b.adjoint());
  };
  double peak = 0.0;
  for (int i = 0; i < P; ++i) peak = std::max(peak, shape(2.0 * kPi * i / P).operatorNorm());
  const double scale = amp(rng) / peak;
  return MatrixPotential::circle(M, P, [&](double x) { return Eigen::MatrixXcd(scale * shape(x)); });
}

void c8_circle(Detail& d, std::uint64_t seed) {
  const MatrixPotential one = MatrixPotential::circle(1, 256, [](double) { return Eigen::MatrixXcd::Identity(1, 1); });
  const SpectrumResult s = negative_spectrum(Flux(0.5), 64, one, Geometry::circle());
  const LTBoundReport lt = lt_bound_circle(s, one, Flux(0.5), 1.0);
  bool spec_ok = s.negative_eigenvalues.size() == 2;
  for (double l : s.negative_eigenvalues) spec_ok = spec_ok && std::fabs(l - 0.75) <= 1e-10;
  d << "V=1 spectrum size=" << s.negative_eigenvalues.size() << " ratio=" << fmt("%.6f", lt.ratio) << " ";
  d.check(spec_ok, "negative spectrum {3/4,3/4}");
  d.check(std::fabs(lt.ratio - 0.6202) < 5e-4 && lt.satisfied, "ratio ~ 0.620 <= 1");
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  int unconverged = 0, failures = 0;
  for (int i = 0; i < 200; ++i) {
    const int M = (i % 2) ? 2 : 1;
    const double alpha = std::array<double, 3>{0.2, 0.5, 0.7}[i % 3];
    const MatrixPotential V = random_circle_potential(rng, M, 256);
    const SpectrumResult r = negative_spectrum(Flux(alpha), 64, V, Geometry::circle());
    if (!r.converged) ++unconverged;
    for (double gamma : {1.0, 1.5}) {
      const LTBoundReport b = lt_bound_circle(r, V, Flux(alpha), gamma);
      worst = std::max(worst, b.ratio);
      if (!b.satisfied) ++failures;
    }
  }
  d << "; random potentials=200 max ratio=" << fmt("%.4f", worst) << " unconverged=" << unconverged << "; ";
  d.check(failures == 0, "random ratios <= 1");
  d.check(unconverged == 0, "random spectra converged");
}

double torus_analytic(double v) {
  CompensatedSum s;
  for (int n = -20; n <= 20; ++n)
    for (int m = -20; m <= 20; ++m) {
      const double e = v - (n + 0.5) * (n + 0.5) - (m + 0.5) * (m + 0.5);
      if (e > 0.0) s += e;
    }
  return s.value();
}

void c9_torus(Detail& d, std::uint64_t) {
  const Geometry g = Geometry::torus2(Flux(0.5));
  for (double v : {1.0, 5.0, 25.0}) {
    const MatrixPotential V = MatrixPotential::torus(1, 64, 64, [v](double, double) {
      return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, v));
    });
    const SpectrumResult s = negative_spectrum(Flux(0.5), 16, V, g);
    const LTBoundReport lt = lt_bound_product(g, Flux(0.5), s, V, 1.0);
    const double exact = torus_analytic(v);
    d << "v=" << v << " sum=" << fmt("%.10g", lt.lhs) << " exact=" << fmt("%.10g", exact)
      << " ratio=" << fmt("%.4f", lt.ratio) << " ";
    d.check(std::fabs(lt.lhs - exact) <= 1e-8 * std::max(1.0, exact), "torus sum at v=" + fmt("%g", v));
    d.check(lt.satisfied, "torus bound at v=" + fmt("%g", v));
  }
  d << "; ";
}

void c10_trace(Detail& d, std::uint64_t seed) {
  VectorFamily single{1, 1, {Eigen::MatrixXcd::Zero(1, 3)}};
  single.coefficients[0](0, 2) = 1.0;  // e^{ix}
  const VerificationReport h = orthonormal_trace_check(single, TraceMode::sobolev(DerivativeOrder(1.0)));
  d << "single mode lhs=" << fmt("%.15g", h.lhs) << " rhs=" << fmt("%.15g", h.rhs) << " ";
  d.check(std::fabs(h.lhs - 1.0 / (4.0 * kPi * kPi)) <= 1e-14 && std::fabs(h.rhs - 1.0) <= 1e-14,
          "single-mode hand case");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dn(1, 6), dm(1, 3), dk(2, 5);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int M = dm(rng), K = dk(rng);
    const int n = std::min(dn(rng), 2 * K * M);
    const VectorFamily fam = random_vector_family(rng, n, M, K);
    for (const TraceMode& mode : {TraceMode::sobolev(DerivativeOrder(1.0)), TraceMode::sobolev(DerivativeOrder(2.0)),
                                  TraceMode::magnetic_flux(Flux(0.3)), TraceMode::magnetic_flux(Flux(0.5))}) {
      const VerificationReport r = orthonormal_trace_check(fam, mode);
      worst = std::max(worst, r.lhs / r.rhs);
      if (!r.satisfied) ++failures;
    }
  }
  d << "; families=100 checks=400 max lhs/rhs=" << fmt("%.4f", worst) << " failures=" << failures << "; ";
  d.check(failures == 0, "random families satisfy the trace inequalities");
}

void c11_constants(Detail& d, std::uint64_t) {
  const double c2 = sobolev_constant(DerivativeOrder(2.0));
  const double c0 = c_zero(DerivativeOrder(1.0));
  const double l11 = classical_lt_constant(1.0, 1);
  const double ratio = 2.0 / (3.0 * std::sqrt(3.0)) / l11;
  d << "C(2)^4=" << fmt("%.17g", std::pow(c2, 4)) << " c0(1)=" << fmt("%.17g", c0)
    << " L(1,1)=" << fmt("%.17g", l11) << " ratio=" << fmt("%.17g", ratio) << "; ";
  d.check(std::fabs(std::pow(c2, 4) - 4.0 / 27.0) <= 1e-12, "C(2)^4 = 4/27");
  d.check(std::fabs(c0 - 0.5) <= 1e-12, "c0(1) = 1/2");
  d.check(std::fabs(l11 - 2.0 / (3.0 * kPi)) <= 1e-12, "L(1,1) = 2/(3 pi)");
  d.check(std::fabs(ratio - kPi / std::sqrt(3.0)) <= 1e-12, "(2/(3 sqrt3))/L(1,1) = pi/sqrt3");
}

struct CriterionDef {
  const char* title;
  double limit;
  void (*fn)(Detail&, std::uint64_t);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"W(1/2) = -0.3898 and W scan negative", 1.0, c1_w},
    {"K(alpha) closed form vs numeric sup", 10.0, c2_k},
    {"V(D) asymptotics and upper bound", 5.0, c3_v},
    {"endpoint lambda(1) = -1, V(1) = 1/pi", 1.0, c4_endpoint},
    {"second-order Landau extremal saturates", 1.0, c5_landau2},
    {"Phi and R scans negative", 60.0, c6_scans},
    {"randomized inequality suite", 60.0, c7_random},
    {"circle spectrum and Lieb-Thirring ratio", 120.0, c8_circle},
    {"torus constant potentials", 60.0, c9_torus},
    {"orthonormal-family trace inequalities", 30.0, c10_trace},
    {"cross-constant identities", 1.0, c11_constants},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw InputError("criterion id out of range");
  const CriterionDef& s = kCriteria[id - 1];
  Detail d;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    s.fn(d, seed + std::uint64_t(id) * 1000003ULL);
  } catch (const std::exception& e) {
    d.ok = false;
    d << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string detail = d.os.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  return {id, s.title, d.ok, detail, secs, s.limit};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) {
    out.push_back(run_criterion(i, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace sharp
