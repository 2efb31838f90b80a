#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stanley {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Monomials or ideals with different ambient variable counts were combined.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Operation is not defined on this input (zero ideal, unit ideal, ...).
class UndefinedInput : public Error {
public:
  using Error::Error;
};

/// Caller broke an operation precondition.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// A mathematical guarantee failed at runtime. Indicates a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// A decomposition handed to the verifier is not well formed.
class MalformedDecomposition : public Error {
public:
  using Error::Error;
};

/// Search space larger than the configured cap.
class ResourceLimit : public Error {
public:
  ResourceLimit(const std::string &what, int best_lower_bound)
      : Error(what), best_lower_bound_(best_lower_bound) {}

  /// Largest sdepth value certified before giving up (0 if none).
  int best_lower_bound() const noexcept { return best_lower_bound_; }

private:
  int best_lower_bound_;
};

class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace stanley
