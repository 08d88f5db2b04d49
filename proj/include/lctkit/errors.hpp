#pragma once

#include <stdexcept>
#include <string>

namespace lctkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Finite truncation does not determine the requested quantity.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::string hint = {})
      : Error(what), hint_(std::move(hint)) {}
  const std::string& hint() const { return hint_; }

 private:
  std::string hint_;
};

// Numeric coefficient work could not be resolved at the working precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Symbolic construction exceeds the configured size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagree. Always a bug or an uncaught numeric failure.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// An oracle refuses input outside its range of validity.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

}  // namespace lctkit
