#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfbjn {

/// Input file does not parse; carries the 1-based line number of the offender.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A metric needs more data points than the grid provides.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A deliberate size cap was hit (e.g. the O(N^4) weak-form assembly).
class NumericGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ratio-valued metric evaluated on an identically zero input.
class UndefinedRatioError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace tfbjn
