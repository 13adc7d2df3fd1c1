#pragma once

#include <stdexcept>
#include <string>

namespace sharp {

// Argument outside the domain of a function (threshold, flux, order, sign).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation exactly at a pole of a Green's function or a special function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iterative method failed to meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files, mismatched dimensions, bad grids.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A checked inequality or acceptance criterion came out false.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sharp
