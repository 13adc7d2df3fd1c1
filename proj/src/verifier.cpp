#include "sharpineq/verifier.hpp"

#include <cmath>
#include <sstream>

#include "sharpineq/errors.hpp"
#include "sharpineq/extremal.hpp"
#include "sharpineq/numeric.hpp"

namespace sharp {

namespace {

double weighted_sq(const std::vector<double>& a, double shift, int power) {
  CompensatedSum s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i + 1.0) - shift;
    double wp = 1.0;
    for (int p = 0; p < power; ++p) wp *= w * w;
    s += wp * a[i] * a[i];
  }
  return s.value();
}

// sqrt(2) pi / 27^(1/4)
const double kSecondOrder = std::sqrt(2.0) * kPi / std::pow(27.0, 0.25);

}  // namespace

SequenceData::SequenceData(std::vector<double> a) : a_(std::move(a)) {
  if (a_.empty()) throw InputError("sequence is empty");
  CompensatedSum s;
  bool nonzero = false;
  for (double x : a_) {
    if (!std::isfinite(x)) throw InputError("sequence entry is not finite");
    if (x < 0.0) throw InputError("sequence entry is negative");
    nonzero |= x > 0.0;
    s += x;
  }
  if (!nonzero) throw InputError("sequence is identically zero");
  sum_ = s.value();
  norm0_ = std::sqrt(weighted_sq(a_, 0.0, 0));
  norm1_ = std::sqrt(weighted_sq(a_, 0.5, 1));
  norm2_ = std::sqrt(weighted_sq(a_, 0.5, 2));
}

double SequenceData::weighted_norm(double shift, int power) const {
  return std::sqrt(weighted_sq(a_, shift, power));
}

InequalityId::InequalityId(Tag tag, double alpha) : tag_(tag), alpha_(alpha), k_(kPi) {
  if (tag == Tag::Intermediate && alpha > 0.5) k_ = k_carlson_landau(alpha, 8).value;
}

InequalityId InequalityId::intermediate(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("intermediate inequality needs alpha in [0,1)");
  return InequalityId(Tag::Intermediate, alpha);
}

InequalityId InequalityId::magnetic_corrected(double alpha) {
  if (!(alpha >= 0.25 && alpha <= 0.75))
    throw DomainError("magnetic corrected inequality needs alpha in [1/4,3/4]");
  return InequalityId(Tag::MagneticCorrected, alpha);
}

InequalityId InequalityId::parse(const std::string& name, double alpha) {
  if (name == "carlson") return carlson();
  if (name == "carlson_corrected") return carlson_corrected();
  if (name == "carlson_second") return carlson_second();
  if (name == "landau") return landau();
  if (name == "landau_corrected") return landau_corrected();
  if (name == "landau_second") return landau_second();
  if (name == "intermediate") return intermediate(alpha);
  if (name == "magnetic_corrected") return magnetic_corrected(alpha);
  throw InputError("unknown inequality '" + name + "'");
}

std::vector<InequalityId> InequalityId::all_default() {
  return {carlson(),          carlson_corrected(),   carlson_second(),
          landau(),           landau_corrected(),    landau_second(),
          intermediate(0.0),  intermediate(0.25),    intermediate(0.5),
          intermediate(0.75), magnetic_corrected(0.25), magnetic_corrected(0.4),
          magnetic_corrected(0.5)};
}

std::string InequalityId::name() const {
  switch (tag_) {
    case Tag::Carlson: return "carlson";
    case Tag::CarlsonCorrected: return "carlson_corrected";
    case Tag::CarlsonSecond: return "carlson_second";
    case Tag::Landau: return "landau";
    case Tag::LandauCorrected: return "landau_corrected";
    case Tag::LandauSecond: return "landau_second";
    case Tag::Intermediate: return "intermediate";
    case Tag::MagneticCorrected: return "magnetic_corrected";
  }
  return "";
}

bool margin_ok(double margin, double rhs) { return margin >= -1e-12 * std::max(1.0, std::fabs(rhs)); }

namespace {

VerificationReport make_report(const std::string& name, double lhs, double rhs,
                               std::map<std::string, double> params) {
  const double margin = rhs - lhs;
  return {name, lhs, rhs, margin, margin_ok(margin, rhs), std::move(params)};
}

// pi n0 n1 (1 - 2 exp(-2 pi n1 / n0))
double landau_corrected_rhs(double n0, double n1) {
  return kPi * n0 * n1 * (1.0 - 2.0 * std::exp(-2.0 * kPi * n1 / n0));
}

}  // namespace

VerificationReport verify(const InequalityId& id, const SequenceData& seq) {
  const double s = seq.sum();
  const double lhs = s * s;
  const double n0 = seq.norm0();
  const double sq = n0 * n0;
  std::map<std::string, double> params{{"length", double(seq.size())}};
  double rhs = 0.0;
  switch (id.tag()) {
    case InequalityId::Tag::Carlson:
      rhs = kPi * n0 * seq.weighted_norm(0.0, 1);
      break;
    case InequalityId::Tag::CarlsonCorrected:
      rhs = kPi * n0 * seq.weighted_norm(0.0, 1) - sq;
      break;
    case InequalityId::Tag::CarlsonSecond:
      rhs = kSecondOrder * std::pow(sq, 0.75) * std::sqrt(seq.weighted_norm(0.0, 2)) - 2.0 / 3.0 * sq;
      break;
    case InequalityId::Tag::Landau:
      rhs = kPi * n0 * seq.norm1();
      break;
    case InequalityId::Tag::LandauCorrected:
      rhs = landau_corrected_rhs(n0, seq.norm1());
      break;
    case InequalityId::Tag::LandauSecond:
      rhs = kSecondOrder / std::tanh(kPi / 2.0) * std::pow(n0, 1.5) * std::sqrt(seq.norm2());
      break;
    case InequalityId::Tag::Intermediate: {
      const double a = id.alpha();
      params["alpha"] = a;
      const double na = seq.weighted_norm(a, 1);
      if (a < 0.5) {
        rhs = kPi * n0 * na - (1.0 - 2.0 * a) * sq;
      } else if (a == 0.5) {
        rhs = landau_corrected_rhs(n0, na);
      } else {
        params["k_alpha"] = id.carlson_landau_constant();
        rhs = id.carlson_landau_constant() * n0 * na;
      }
      break;
    }
    case InequalityId::Tag::MagneticCorrected: {
      VerificationReport r = magnetic_corrected_check(id.alpha(), doubled_modal_coefficients(seq));
      r.params["length"] = double(seq.size());
      return r;
    }
  }
  return make_report(id.name(), lhs, rhs, std::move(params));
}

ModalNorms modal_norms(double alpha, const ModalCoefficients& u) {
  if (u.c.empty()) throw DomainError("modal coefficients are empty");
  CompensatedSum s1, s2, sw;
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    const double w = double(u.first_index + long(i)) + alpha;
    const double m = std::abs(u.c[i]);
    s1 += m;
    s2 += m * m;
    sw += w * w * m * m;
  }
  return {s1.value() * s1.value() / (2.0 * kPi), s2.value(), sw.value()};
}

VerificationReport magnetic_corrected_check(double alpha, const ModalCoefficients& u) {
  if (!(alpha >= 0.25 && alpha <= 0.75))
    throw DomainError("magnetic corrected inequality needs alpha in [1/4,3/4]");
  const ModalNorms n = modal_norms(alpha, u);
  if (!(n.norm_sq > 0.0)) throw DomainError("trial function is zero");
  const double nu = std::sqrt(n.norm_sq), na = std::sqrt(n.energy_sq);
  const double r = na / nu;
  double factor;
  if (alpha == 0.25 || alpha == 0.75)
    factor = 1.0 - 2.0 * std::exp(-4.0 * kPi * r);
  else
    factor = 1.0 + 2.0 * std::cos(2.0 * kPi * alpha) * std::exp(-2.0 * kPi * r);
  return make_report("magnetic_corrected", n.sup_sq_bound, na * nu * factor,
                     {{"alpha", alpha}, {"ratio", r}, {"modes", double(u.c.size())}});
}

FunctionNorms sequence_to_function_norms(const SequenceData& seq) {
  return {std::sqrt(2.0) * seq.sum(), seq.norm0(), 2.0 * kPi * seq.norm1(),
          4.0 * kPi * kPi * seq.norm2()};
}

ModalCoefficients doubled_modal_coefficients(const SequenceData& seq) {
  const long L = long(seq.size());
  ModalCoefficients u{-L, std::vector<std::complex<double>>(2 * L)};
  // n = k - 1 >= 0 and n = -k <= -1 both carry a_k
  for (long k = 1; k <= L; ++k) {
    u.c[(k - 1) + L] = seq.values()[k - 1];
    u.c[-k + L] = seq.values()[k - 1];
  }
  return u;
}

SequenceData random_sequence(std::mt19937_64& rng, std::size_t length, double decay) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> a(length);
  for (std::size_t k = 0; k < length; ++k) a[k] = std::fabs(nd(rng)) / std::pow(k + 1.0, decay);
  return SequenceData(std::move(a));
}

ModalCoefficients random_modal_coefficients(std::mt19937_64& rng, long half_width, double decay) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ModalCoefficients u{-half_width, std::vector<std::complex<double>>(2 * half_width + 1)};
  for (long n = -half_width; n <= half_width; ++n) {
    const double re = nd(rng), im = nd(rng);
    u.c[n + half_width] = std::complex<double>(re, im) / std::pow(1.0 + std::labs(n), decay);
  }
  return u;
}

EnsembleSummary run_random_ensemble(const InequalityId& id, long count, std::uint64_t seed,
                                    std::size_t length) {
  static constexpr double kDecays[] = {1.5, 2.0, 3.0};
  std::mt19937_64 rng(seed);
  EnsembleSummary out{id.name(), count, 0, std::numeric_limits<double>::infinity()};
  for (long i = 0; i < count; ++i) {
    const double p = kDecays[i % 3];
    VerificationReport r;
    if (id.tag() == InequalityId::Tag::MagneticCorrected)
      r = magnetic_corrected_check(id.alpha(), random_modal_coefficients(rng, long(length / 2), p));
    else
      r = verify(id, random_sequence(rng, length, p));
    if (!r.satisfied) ++out.violations;
    out.worst_relative_margin = std::min(out.worst_relative_margin, r.margin / std::max(1.0, std::fabs(r.rhs)));
  }
  return out;
}

}  // namespace sharp
