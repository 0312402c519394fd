#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewmrd {

/// Raised when an internal algebraic identity that must hold does not.
/// Seeing this means an arithmetic bug, never bad user input.
class ArithmeticInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration or search ran past its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

}  // namespace skewmrd
