#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sharp {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;  // deterministic summary of the measured numbers
  double seconds;
  double limit_seconds;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result = {});

// max over (theta, phase) grids of |u(0)|^2 for u = c1 e^{ix} + c-1 e^{-ix}, ||u|| = 1.
double two_mode_brute_force(int theta_steps, int phase_steps);

}  // namespace sharp
