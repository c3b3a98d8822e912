#pragma once

#include <stdexcept>
#include <string>

namespace polarfront {

// Malformed input: non-finite values, dimension mismatches, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point lies outside the region an operation is defined on, typically a
// vector that does not strongly dominate the reference vector.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Not enough samples for the requested statistic.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is well formed but exceeds what the routine supports.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file or payload could not be read: empty, malformed or inconsistent.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polarfront
