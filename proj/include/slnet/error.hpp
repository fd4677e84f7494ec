#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A sum of costs or lengths left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An exact dynamic program would need more table cells than allowed.
class BudgetTooLarge : public Error {
 public:
  using Error::Error;
};

/// The instance admits no solution at all (e.g. an NDBD bound no pair can meet).
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// A path demand has no path within its length bound.
class UnsatisfiableDemand : public Error {
 public:
  using Error::Error;
};

/// Column generation did not converge within its round budget.
class IterationLimit : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was handed an instance above its enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Generator parameters that cannot produce a valid instance.
class UnsatisfiableParams : public Error {
 public:
  using Error::Error;
};

/// The linear programming backend failed to return an optimum.
class LpFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace slnet
