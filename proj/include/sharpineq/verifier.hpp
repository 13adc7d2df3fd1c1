#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace sharp {

// Finite nonnegative sequence a_1, a_2, ... with its weighted norms.
class SequenceData {
 public:
  explicit SequenceData(std::vector<double> a);

  const std::vector<double>& values() const { return a_; }
  std::size_t size() const { return a_.size(); }
  double sum() const { return sum_; }
  double norm0() const { return norm0_; }  // (sum a_k^2)^(1/2)
  double norm1() const { return norm1_; }  // (sum (k-1/2)^2 a_k^2)^(1/2)
  double norm2() const { return norm2_; }  // (sum (k-1/2)^4 a_k^2)^(1/2)
  // (sum (k - shift)^(2 power) a_k^2)^(1/2)
  double weighted_norm(double shift, int power) const;

 private:
  std::vector<double> a_;
  double sum_, norm0_, norm1_, norm2_;
};

class InequalityId {
 public:
  enum class Tag {
    Carlson,
    CarlsonCorrected,
    CarlsonSecond,
    Landau,
    LandauCorrected,
    LandauSecond,
    Intermediate,
    MagneticCorrected
  };
  static InequalityId carlson() { return InequalityId(Tag::Carlson, 0.0); }
  static InequalityId carlson_corrected() { return InequalityId(Tag::CarlsonCorrected, 0.0); }
  static InequalityId carlson_second() { return InequalityId(Tag::CarlsonSecond, 0.0); }
  static InequalityId landau() { return InequalityId(Tag::Landau, 0.5); }
  static InequalityId landau_corrected() { return InequalityId(Tag::LandauCorrected, 0.5); }
  static InequalityId landau_second() { return InequalityId(Tag::LandauSecond, 0.5); }
  static InequalityId intermediate(double alpha);        // alpha in [0,1)
  static InequalityId magnetic_corrected(double alpha);  // alpha in [1/4,3/4]
  static InequalityId parse(const std::string& name, double alpha = 0.5);
  static std::vector<InequalityId> all_default();

  Tag tag() const { return tag_; }
  double alpha() const { return alpha_; }
  // k(alpha) for Intermediate with alpha > 1/2, else pi.
  double carlson_landau_constant() const { return k_; }
  std::string name() const;

 private:
  InequalityId(Tag tag, double alpha);
  Tag tag_;
  double alpha_;
  double k_;
};

struct VerificationReport {
  std::string inequality;
  double lhs;
  double rhs;
  double margin;
  bool satisfied;
  std::map<std::string, double> params;
};

bool margin_ok(double margin, double rhs);

VerificationReport verify(const InequalityId& id, const SequenceData& seq);

// Coefficients c_n of u = sum c_n e^{i(n+alpha)x}/sqrt(2 pi), n = first_index, first_index+1, ...
struct ModalCoefficients {
  long first_index;
  std::vector<std::complex<double>> c;
};

struct ModalNorms {
  double sup_sq_bound;  // (sum |c_n|)^2 / (2 pi) >= ||u||_inf^2
  double norm_sq;       // ||u||^2
  double energy_sq;     // ||A^(1/2) u||^2 = sum (n+alpha)^2 |c_n|^2
};
ModalNorms modal_norms(double alpha, const ModalCoefficients& u);

VerificationReport magnetic_corrected_check(double alpha, const ModalCoefficients& u);

// u(x) = sqrt(2) sum (-1)^(k+1) a_k sin((2k-1) pi x) on [0,1].
struct FunctionNorms {
  double sup_value;               // sqrt(2) sum a_k, attained at x = 1/2
  double norm;                    // ||u||
  double derivative_norm;         // ||u'||
  double second_derivative_norm;  // ||u''||
};
FunctionNorms sequence_to_function_norms(const SequenceData& seq);

// b_k = b_{-(k+1)} = a_{k+1}: modal coefficients for alpha = 1/2, n = -L .. L-1.
ModalCoefficients doubled_modal_coefficients(const SequenceData& seq);

// |N(0,1)| / k^p, k = 1..length.
SequenceData random_sequence(std::mt19937_64& rng, std::size_t length, double decay);
// complex Gaussian / (1+|n|)^p, n = -half_width .. half_width.
ModalCoefficients random_modal_coefficients(std::mt19937_64& rng, long half_width, double decay);

struct EnsembleSummary {
  std::string inequality;
  long count;
  long violations;
  double worst_relative_margin;  // min over runs of margin / max(1,|rhs|)
};

// Cycles decay exponents {1.5, 2, 3}; truncation 10^3. MagneticCorrected draws
// random modal coefficients with 2*(length/2)+1 modes instead.
EnsembleSummary run_random_ensemble(const InequalityId& id, long count, std::uint64_t seed,
                                    std::size_t length = 1000);

}  // namespace sharp
