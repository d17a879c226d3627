#pragma once

#include <stdexcept>
#include <string>

namespace qdist {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative numerical routine could not meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A model produced a density matrix that fails positivity. Always a bug.
class InvalidStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter value; `field()` names the offending configuration key.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Malformed configuration text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Model failure during a sweep, tagged with the grid time where it happened.
class ModelError : public std::runtime_error {
 public:
  ModelError(double t, const std::string& what)
      : std::runtime_error("at t=" + std::to_string(t) + ": " + what), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

}  // namespace qdist
