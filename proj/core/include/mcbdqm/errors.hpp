#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcbdqm {

/// Raised for malformed inputs: bad indices, orders, sizes, non-finite arguments.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a problem parameter is outside the range where the problem is defined.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zero pivot met during tridiagonal elimination.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(std::size_t row);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Non-finite values produced while time stepping.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int stage, double time);
  int stage() const noexcept { return stage_; }
  double time() const noexcept { return time_; }

 private:
  int stage_;
  double time_;
};

}  // namespace mcbdqm
