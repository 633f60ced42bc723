#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zpzp2 {

/// Bad user-supplied parameter (non-prime p, t1 < 1, invalid variant vector, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands do not share (p, alpha1, alpha2) or lengths differ.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured codeword or work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", budget " +
                           std::to_string(limit) + ")"),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// Input code does not have the structure an operation requires.
class NotGhCode : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zpzp2
