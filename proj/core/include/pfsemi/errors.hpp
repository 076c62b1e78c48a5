#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfsemi {

// Caller violated a documented precondition or bound.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed algebra file or map literal. Line numbers are 1-based; 0 means
// the input had no line structure (e.g. an inline literal).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structure claimed to be closed under an operation is not.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfsemi
