#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tracklight {

/// Malformed input text. `line()` is 1-based, 0 when the error is not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Query on a model that has not been fitted.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Downloaded or cached content does not match its registered digest.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TransferError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tracklight
