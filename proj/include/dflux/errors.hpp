#pragma once

#include <stdexcept>
#include <string>

namespace dflux {

// Density or state outside the admissible range [0,1].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid function argument (precondition not met).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Problem configuration rejected at load/validation time.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time step or interface displacement incompatible with the mesh.
class CflViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver did not converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// StepRecord sequence is inconsistent (gaps, wrong ordering, size mismatch).
class TranscriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact solution queried outside its validity window.
class OracleRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace dflux
