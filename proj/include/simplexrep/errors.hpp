#pragma once

#include <stdexcept>
#include <string>

namespace simplexrep {

// Bad inputs, bad configs, contract violations. CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric breakdowns at runtime (divergence, failed checks). CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace simplexrep
