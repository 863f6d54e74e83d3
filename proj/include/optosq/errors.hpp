#pragma once

#include <stdexcept>
#include <string>

namespace optosq {

/// Machine-readable failure category. The numeric values are the CLI exit codes.
enum class ErrorCategory : int {
  config = 2,
  instability = 3,
  convergence = 4,
  io = 5,
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// A physical parameter outside its admissible range. `field` names the offending input.
class InvalidParameter : public Error {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : Error(ErrorCategory::config, field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCategory::config, what) {}
};

class InstabilityError : public Error {
 public:
  explicit InstabilityError(const std::string& what) : Error(ErrorCategory::instability, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_rel_error)
      : Error(ErrorCategory::convergence, what), achieved_(achieved_rel_error) {}
  double achieved_rel_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

}  // namespace optosq
