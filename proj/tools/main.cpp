#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharpineq/acceptance.hpp"
#include "sharpineq/constants.hpp"
#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/green.hpp"
#include "sharpineq/io.hpp"
#include "sharpineq/scans.hpp"
#include "sharpineq/spectral.hpp"
#include "sharpineq/verifier.hpp"

using nlohmann::json;
using namespace sharp;

namespace {

enum Exit { kOk = 0, kFailure = 1, kFlag = 2, kDomain = 3, kVerify = 4, kConverge = 5 };

struct Common {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 42;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--out", c.out, "Output file (directory for figures); stdout if omitted");
  app->add_option("--seed", c.seed, "Seed for randomized runs");
}

void emit(const Common& c, const std::string& body) {
  if (c.out.empty())
    std::cout << body << std::flush;
  else
    write_atomic(c.out, body);
}

std::string dump(const std::string& command, json records) {
  return make_document(command, std::move(records)).dump(2) + "\n";
}

GreenFamily parse_family(const std::string& name, double alpha) {
  if (name == "pzm" || name == "periodic_zero_mean") return GreenFamily::periodic_zero_mean();
  if (name == "magnetic") return GreenFamily::magnetic(Flux(alpha));
  if (name == "half" || name == "half_shifted") return GreenFamily::half_shifted(alpha);
  throw InputError("unknown family '" + name + "'");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

// constants

struct ConstantsArgs {
  Common c;
  std::vector<double> k_magnetic, k_carlson_landau, sobolev, c_zero;
  std::vector<double> lt_gamma;
  int dimension = 1;
};

int run_constants(const ConstantsArgs& a) {
  struct Row {
    std::string name;
    double arg;
    double value;
    json extra;
  };
  std::vector<Row> rows;
  const bool none = a.k_magnetic.empty() && a.k_carlson_landau.empty() && a.sobolev.empty() &&
                    a.c_zero.empty() && a.lt_gamma.empty();
  auto km = none ? std::vector<double>{0.5} : a.k_magnetic;
  auto kc = none ? std::vector<double>{0.6} : a.k_carlson_landau;
  auto sb = none ? std::vector<double>{1.0, 2.0} : a.sobolev;
  auto cz = none ? std::vector<double>{1.0} : a.c_zero;
  auto lt = none ? std::vector<double>{1.0} : a.lt_gamma;
  for (double x : km) {
    const SharpConstantResult r = k_magnetic(Flux(x), 1000);
    json e{{"numeric_value", r.numeric_value}};
    e["maximizer_lambda"] = r.maximizer_lambda ? json(*r.maximizer_lambda) : json(nullptr);
    rows.push_back({"k_magnetic", x, r.value, e});
  }
  for (double x : kc) {
    const SharpConstantResult r = k_carlson_landau(x, 1000);
    rows.push_back({"k_carlson_landau", x, r.value, json{{"maximizer_lambda", *r.maximizer_lambda}}});
  }
  for (double m : sb) rows.push_back({"sobolev", m, sobolev_constant(DerivativeOrder(m)), json::object()});
  for (double m : cz) rows.push_back({"c_zero", m, c_zero(DerivativeOrder(m)), json::object()});
  for (double g : lt)
    rows.push_back({"lt_classical", g, classical_lt_constant(g, a.dimension), json{{"dimension", a.dimension}}});

  if (a.c.format == "csv") {
    std::string s = "name,argument,value\n";
    for (const Row& r : rows) s += r.name + "," + format_double(r.arg) + "," + format_double(r.value) + "\n";
    emit(a.c, s);
  } else {
    json recs = json::array();
    for (const Row& r : rows) {
      json j{{"kind", "constant"}, {"name", r.name}, {"argument", r.arg}, {"value", r.value}};
      j.update(r.extra);
      recs.push_back(j);
    }
    emit(a.c, dump("constants", recs));
  }
  return kOk;
}

// vcurve

struct VCurveArgs {
  Common c;
  std::string family = "pzm";
  double alpha = 0.5;
  double d_min = NAN, d_max = 1e6;
  long points = 200;
};

int run_vcurve(const VCurveArgs& a) {
  const GreenFamily f = parse_family(a.family, a.alpha);
  const double lo = std::isnan(a.d_min) ? f.d_threshold() : a.d_min;
  if (!(lo > 0.0) || !(a.d_max > lo) || a.points < 2) throw InputError("need 0 < d-min < d-max and grid-points >= 2");
  std::vector<double> ds(a.points);
  for (long i = 0; i < a.points; ++i)
    ds[i] = i == a.points - 1 ? a.d_max : lo * std::pow(a.d_max / lo, double(i) / double(a.points - 1));
  const auto pts = v_curve(f, ds);
  if (a.c.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (const auto& p : pts) rows.push_back({p.d, p.lambda, p.v});
    emit(a.c, csv_table({"d", "lambda", "v"}, rows));
  } else {
    json recs = json::array();
    for (const auto& p : pts) recs.push_back(to_json(p, f));
    emit(a.c, dump("vcurve", recs));
  }
  return kOk;
}

// scan

struct ScanArgs {
  Common c;
  std::string which = "w";
  double alpha = 0.5;
  long points = 0;
};

ScanReport do_scan(const std::string& which, double alpha, const ScanOptions& o) {
  if (which == "w") return scan_w(o);
  if (which == "phi") return scan_phi(alpha, o);
  if (which == "r") return scan_r(alpha, o);
  throw InputError("unknown scan '" + which + "'");
}

std::string samples_csv(const ScanReport& r) {
  std::vector<std::vector<double>> rows;
  rows.reserve(r.samples.size());
  for (const auto& [x, v] : r.samples) rows.push_back({x, v});
  return csv_table({"point", "value"}, rows);
}

int run_scan(const ScanArgs& a) {
  const ScanReport r = do_scan(a.which, a.alpha, ScanOptions{a.points, a.c.format == "csv"});
  if (a.c.format == "csv")
    emit(a.c, samples_csv(r));
  else
    emit(a.c, dump("scan", json::array({to_json(r)})));
  return r.all_negative ? kOk : kVerify;
}

// verify

struct VerifyArgs {
  Common c;
  std::string inequality = "landau_second";
  double alpha = 0.5;
  std::string sequence;
  double lambda = 1.0;
  long truncation = 10000;
  long ensemble = 0;
};

SequenceData builtin_extremal(const InequalityId& id, double lambda, long truncation) {
  using T = InequalityId::Tag;
  switch (id.tag()) {
    case T::LandauSecond: return SequenceData(landau_second_order_extremal(truncation).values());
    case T::Carlson:
    case T::CarlsonCorrected:
    case T::CarlsonSecond: return SequenceData(extremal_sequence(GreenFamily::half_shifted(0.0), lambda, truncation).values());
    case T::MagneticCorrected: return SequenceData(extremal_sequence(GreenFamily::half_shifted(0.5), lambda, truncation).values());
    default: return SequenceData(extremal_sequence(GreenFamily::half_shifted(id.alpha()), lambda, truncation).values());
  }
}

int run_verify(const VerifyArgs& a) {
  const InequalityId id = InequalityId::parse(a.inequality, a.alpha);
  if (a.ensemble > 0) {
    const EnsembleSummary s = run_random_ensemble(id, a.ensemble, a.c.seed);
    if (a.c.format == "csv")
      emit(a.c, "inequality,count,violations,worst_relative_margin\n" + csv_escape(s.inequality) + "," +
                    std::to_string(s.count) + "," + std::to_string(s.violations) + "," +
                    format_double(s.worst_relative_margin) + "\n");
    else
      emit(a.c, dump("verify", json::array({to_json(s)})));
    return s.violations == 0 ? kOk : kVerify;
  }
  const SequenceData seq = a.sequence.empty() ? builtin_extremal(id, a.lambda, a.truncation) : read_sequence(a.sequence);
  const VerificationReport r = verify(id, seq);
  if (a.c.format == "csv")
    emit(a.c, "inequality,lhs,rhs,margin,satisfied\n" + csv_escape(r.inequality) + "," + format_double(r.lhs) + "," +
                  format_double(r.rhs) + "," + format_double(r.margin) + "," + (r.satisfied ? "1" : "0") + "\n");
  else
    emit(a.c, dump("verify", json::array({to_json(r)})));
  return r.satisfied ? kOk : kVerify;
}

// spectrum

struct SpectrumArgs {
  Common c;
  std::string geometry = "circle";
  double alpha = 0.5, alpha2 = 0.5, gamma = 1.0;
  std::string potential;
  double level = 1.0;
  int truncation = 0;
  long points = 0;
  double half_length = 20.0;
  int y_modes = 128;
};

int run_spectrum(const SpectrumArgs& a) {
  Geometry g;
  int N = a.truncation;
  std::optional<MatrixPotential> V;
  if (!a.potential.empty()) V = read_potential(a.potential);
  auto constant = [&](int) { return Eigen::MatrixXcd(Eigen::MatrixXcd::Constant(1, 1, a.level)); };
  if (a.geometry == "circle") {
    g = Geometry::circle();
    if (N == 0) N = 64;
    if (!V) V = MatrixPotential::circle(1, a.points ? int(a.points) : 4 * N, [&](double) { return constant(0); });
  } else if (a.geometry == "torus") {
    g = Geometry::torus2(Flux(a.alpha2));
    if (N == 0) N = 16;
    const int P = a.points ? int(a.points) : 4 * N;
    if (!V) V = MatrixPotential::torus(1, P, P, [&](double, double) { return constant(0); });
  } else if (a.geometry == "cylinder") {
    g = Geometry::cylinder(V ? V->half_length() : a.half_length, a.y_modes);
    if (N == 0) N = 8;
    if (!V)
      V = MatrixPotential::cylinder(1, a.points ? int(a.points) : 4 * N, 2 * a.y_modes, a.half_length,
                                    [&](double, double y) { return Eigen::MatrixXcd(constant(0) * std::exp(-y * y)); });
  } else {
    throw InputError("unknown geometry '" + a.geometry + "'");
  }
  const SpectrumResult s = negative_spectrum(Flux(a.alpha), N, *V, g);
  const LTBoundReport lt = g.kind == GeometryKind::Circle ? lt_bound_circle(s, *V, Flux(a.alpha), a.gamma)
                                                         : lt_bound_product(g, Flux(a.alpha), s, *V, a.gamma);
  if (a.c.format == "csv") {
    std::string out = "index,eigenvalue\n";
    for (std::size_t i = 0; i < s.negative_eigenvalues.size(); ++i)
      out += std::to_string(i) + "," + format_double(s.negative_eigenvalues[i]) + "\n";
    emit(a.c, out);
  } else {
    emit(a.c, dump("spectrum", json::array({to_json(s), to_json(lt)})));
  }
  if (!s.converged) return kConverge;
  return lt.satisfied ? kOk : kVerify;
}

// figures

struct FiguresArgs {
  Common c;
  int fig = 0;
  long points = 2000;
};

std::string tag(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

int run_figures(const FiguresArgs& a) {
  const std::filesystem::path dir = a.c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(a.c.out);
  std::filesystem::create_directories(dir);
  const ScanOptions o{a.points, true};
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& body) {
    write_atomic((dir / name).string(), body);
    written.push_back(name);
  };
  if (a.fig == 0 || a.fig == 1)
    for (double al : {1.0 / 3.0, 0.375, 0.5}) put("fig1_phi_alpha_" + tag(al) + ".csv", samples_csv(scan_phi(al, o)));
  if (a.fig == 0 || a.fig == 2)
    for (double al : {0.0, 0.25, 1.0 / 3.0, 0.5}) put("fig2_r_alpha_" + tag(al) + ".csv", samples_csv(scan_r(al, o)));
  if (a.fig == 0 || a.fig == 3)
    for (double al : {0.99, 0.9, 0.6}) {
      // log grid on [1e-6, 1e4]
      std::vector<std::vector<double>> rows;
      for (long i = 0; i < a.points; ++i) {
        const double lam = std::pow(10.0, -6.0 + 10.0 * double(i) / double(a.points - 1));
        rows.push_back({lam, carlson_landau_objective(al, lam)});
      }
      put("fig3_f_alpha_" + tag(al) + ".csv", csv_table({"lambda", "value"}, rows));
    }
  for (const auto& w : written) std::cerr << "wrote " << (dir / w).string() << "\n";
  return kOk;
}

// suite

int run_suite(const Common& c) {
  bool ok = true;
  json recs = json::array();
  std::string csv = "id,title,passed,detail\n";
  run_acceptance(c.seed, [&](const CriterionResult& r) {
    const bool in_time = r.seconds <= r.limit_seconds;
    ok = ok && r.passed && in_time;
    std::fprintf(stderr, "[%s] criterion %2d: %s (%.2fs / %.0fs)%s\n", r.passed ? "PASS" : "FAIL", r.id,
                 r.title.c_str(), r.seconds, r.limit_seconds, in_time ? "" : " over time limit");
    recs.push_back(json{{"kind", "criterion"}, {"id", r.id},           {"title", r.title},
                        {"passed", r.passed},  {"detail", r.detail},   {"limit_seconds", r.limit_seconds}});
    csv += std::to_string(r.id) + "," + csv_escape(r.title) + "," + (r.passed ? "1" : "0") + "," + csv_escape(r.detail) + "\n";
  });
  emit(c, c.format == "csv" ? csv : dump("suite", recs));
  return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp interpolation constants, inequality checks and Lieb-Thirring bounds"};
  app.require_subcommand(1);

  ConstantsArgs ca;
  auto* cmd_const = app.add_subcommand("constants", "Sharp constants");
  add_common(cmd_const, ca.c);
  cmd_const->add_option("--k-magnetic", ca.k_magnetic, "K(alpha) for the given fluxes");
  cmd_const->add_option("--k-carlson-landau", ca.k_carlson_landau, "k(alpha), alpha in (1/2,1)");
  cmd_const->add_option("--sobolev", ca.sobolev, "C(m)");
  cmd_const->add_option("--c-zero", ca.c_zero, "c0(m)");
  cmd_const->add_option("--gamma", ca.lt_gamma, "classical Lieb-Thirring constant L(gamma,d)");
  cmd_const->add_option("--dimension", ca.dimension, "d for the classical constant");

  VCurveArgs va;
  auto* cmd_v = app.add_subcommand("vcurve", "Extremal curve V(D)");
  add_common(cmd_v, va.c);
  cmd_v->add_option("--family", va.family)->check(CLI::IsMember({"pzm", "periodic_zero_mean", "magnetic", "half", "half_shifted"}));
  cmd_v->add_option("--alpha", va.alpha);
  cmd_v->add_option("--d-min", va.d_min, "defaults to the family threshold");
  cmd_v->add_option("--d-max", va.d_max);
  cmd_v->add_option("--grid-points", va.points);

  ScanArgs sa;
  auto* cmd_s = app.add_subcommand("scan", "Grid scans of W, Phi, R");
  add_common(cmd_s, sa.c);
  cmd_s->add_option("--scan", sa.which)->check(CLI::IsMember({"w", "phi", "r"}));
  cmd_s->add_option("--alpha", sa.alpha);
  cmd_s->add_option("--grid-points", sa.points, "0 selects the default density");

  VerifyArgs ra;
  auto* cmd_r = app.add_subcommand("verify", "Check an inequality on a sequence");
  add_common(cmd_r, ra.c);
  cmd_r->add_option("--inequality", ra.inequality);
  cmd_r->add_option("--alpha", ra.alpha);
  cmd_r->add_option("--sequence", ra.sequence, "one nonnegative real per line; built-in extremal if omitted");
  cmd_r->add_option("--lambda", ra.lambda, "lambda of the built-in extremal");
  cmd_r->add_option("--truncation", ra.truncation);
  cmd_r->add_option("--ensemble", ra.ensemble, "run this many random sequences instead");

  SpectrumArgs pa;
  auto* cmd_p = app.add_subcommand("spectrum", "Negative spectrum and Lieb-Thirring bound");
  add_common(cmd_p, pa.c);
  cmd_p->add_option("--geometry", pa.geometry)->check(CLI::IsMember({"circle", "torus", "cylinder"}));
  cmd_p->add_option("--alpha", pa.alpha, "flux along x");
  cmd_p->add_option("--alpha2", pa.alpha2, "torus flux along y");
  cmd_p->add_option("--gamma", pa.gamma);
  cmd_p->add_option("--potential", pa.potential, "CSV or JSON potential file")->check(CLI::ExistingFile);
  cmd_p->add_option("--level", pa.level, "constant potential (Gaussian bump in y on the cylinder) when no file is given");
  cmd_p->add_option("--truncation", pa.truncation, "Fourier cutoff N (default 64/16/8)");
  cmd_p->add_option("--grid-points", pa.points, "quadrature points per periodic axis");
  cmd_p->add_option("--half-length", pa.half_length, "cylinder window half length");
  cmd_p->add_option("--y-modes", pa.y_modes, "cylinder Dirichlet modes");

  FiguresArgs fa;
  auto* cmd_f = app.add_subcommand("figures", "Figure data as CSV");
  add_common(cmd_f, fa.c);
  cmd_f->add_option("--fig", fa.fig, "1, 2 or 3; all when omitted")->check(CLI::Range(0, 3));
  cmd_f->add_option("--grid-points", fa.points)->check(CLI::Range(2L, 100000000L));

  Common sc;
  auto* cmd_suite = app.add_subcommand("suite", "Full acceptance run");
  add_common(cmd_suite, sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kFlag;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = kOk;
  try {
    if (*cmd_const) rc = run_constants(ca);
    else if (*cmd_v) rc = run_vcurve(va);
    else if (*cmd_s) rc = run_scan(sa);
    else if (*cmd_r) rc = run_verify(ra);
    else if (*cmd_p) rc = run_spectrum(pa);
    else if (*cmd_f) rc = run_figures(fa);
    else if (*cmd_suite) rc = run_suite(sc);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = kFlag;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    rc = kDomain;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    rc = kVerify;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    rc = kConverge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = kFailure;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "elapsed %.3f s\n", secs);
  return rc;
}
