#pragma once

#include <stdexcept>
#include <string>

namespace undergrad {

enum class ErrorKind {
  kInvalidInput,
  kDomain,
  kNumericalFailure,
  kConfig,
  kInsufficientData,
};

const char* to_string(ErrorKind kind);

/// Base for every error raised by the library. The kind maps onto the CLI
/// exit codes (config -> 1, numerical failure -> 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::kInvalidInput, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what, long iteration = -1)
      : Error(ErrorKind::kNumericalFailure, what), iteration_(iteration) {}

  /// Iteration at which the failure was detected, -1 when not inside a run.
  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::kConfig, what) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what)
      : Error(ErrorKind::kInsufficientData, what) {}
};

}  // namespace undergrad
