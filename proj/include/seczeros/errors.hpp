#pragma once

#include <stdexcept>
#include <string>

namespace sz {

// Error taxonomy mirrored by the CLI exit codes: config -> 2, numeric -> 3, io -> 4.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations (bad argument ranges, wrong normalization mode, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Numeric failures: non-convergence, exponent-capacity overflow, degenerate input.
struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Filesystem and data-file problems (missing files, malformed coefficient files).
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Scenario configuration problems (unknown keys, invalid values, missing sections).
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace sz
