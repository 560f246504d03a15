#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "protometric/verdict.hpp"

namespace protometric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or invalid arguments (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based position; 0 means "not applicable".
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t row = 0, std::size_t column = 0);

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// The input is well formed but is not in the class an operation requires
/// (CLI exit code 1). Carries the failing verdict when one exists.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<PropertyVerdict> verdict = std::nullopt)
      : Error(what), verdict_(std::move(verdict)) {}

  const std::optional<PropertyVerdict>& verdict() const noexcept { return verdict_; }

 private:
  std::optional<PropertyVerdict> verdict_;
};

/// A relation that must be transitive by theory was found not to be under
/// the configured tolerances.
class ToleranceInconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace protometric
