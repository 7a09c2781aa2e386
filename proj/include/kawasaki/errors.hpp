#pragma once

#include <stdexcept>
#include <string>

namespace kawasaki {

// Invalid arguments or data handed to an operation. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Bad configuration: malformed JSON, missing keys, kernels wider than the box.
class ConfigError : public InputError {
public:
  using InputError::InputError;
};

// Parameters outside the range where a bound formula is defined.
class DomainError : public InputError {
public:
  using InputError::InputError;
};

// Subset enumeration requested on too many points.
class SizeError : public InputError {
public:
  using InputError::InputError;
};

// Operation invoked on an object in the wrong state (e.g. stepping an empty system).
class StateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Not enough data to form a statistic.
class StatisticsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: NaN/Inf, loss of positivity. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BlowUpError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class StepSizeError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace kawasaki
