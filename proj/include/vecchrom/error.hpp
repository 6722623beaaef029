#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vecchrom {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input larger than a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Operands with incompatible orders or vertex counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An iterative kernel did not converge.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Malformed text or JSON input. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a semantic rule (self-loop, bad certificate shape, ...).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Vertex index out of range.
class RangeError : public Error {
 public:
  RangeError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace vecchrom
