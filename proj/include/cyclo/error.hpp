#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclo {

// Raised for malformed arguments: empty words where a non-empty one is
// required, mismatched alphabets, non-coprime Christoffel parameters, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a prefix long enough to certify a factor set would exceed the
// configured budget.  Carries the length that was reached.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::size_t n, std::size_t reached, std::size_t budget)
      : std::runtime_error("factor set of length " + std::to_string(n) +
                           " not certified within a prefix budget of " +
                           std::to_string(budget) + " (reached " +
                           std::to_string(reached) + ")"),
        n_(n),
        reached_(reached),
        budget_(budget) {}

  std::size_t factor_length() const noexcept { return n_; }
  std::size_t prefix_reached() const noexcept { return reached_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t n_;
  std::size_t reached_;
  std::size_t budget_;
};

// Configuration/spec parsing failures (unknown keys, bad kinds, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclo
