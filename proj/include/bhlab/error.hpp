#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bhlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: arity or field mismatch, index out of range, invalid family
// parameters, degenerate exponents.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or invariant-violating document. `location` is a JSON pointer
// ("/coeffs/3/idx/0") or a byte offset rendered as "byte N".
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// The requested computation exceeds the configured work budget.
class BudgetError : public Error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget, const std::string& what)
      : Error(what + " (requires " + std::to_string(required) + ", budget " +
              std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace bhlab
