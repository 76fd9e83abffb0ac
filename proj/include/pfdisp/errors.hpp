#pragma once

#include <stdexcept>
#include <string>

namespace pfdisp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p (or k) outside the feasible range for the front size.
class InfeasibleSize : public Error {
 public:
  using Error::Error;
};

class EmptyFrontError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the combination budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A greedy backtrack could not place p points at the given optimum.
class InconsistentOptimum : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : Error(what), location_(location) {}

  /// Line number (CSV, 1-based) or byte offset (JSON).
  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

class NonFiniteError : public Error {
 public:
  using Error::Error;
};

}  // namespace pfdisp
