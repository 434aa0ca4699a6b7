#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wkit {

/// A documented precondition of a predicate or construction was not met
/// (wrong parity of n, non-Williamson input where one is required).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed value: mismatched orders, entries outside the allowed alphabet.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid search or CLI configuration (e.g. order above the cap).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text-form parse failure. Column is 1-based within the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace wkit
