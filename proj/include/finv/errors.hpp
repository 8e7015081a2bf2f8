#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finv {

// Invalid input: malformed words, weights that do not sum to one,
// non-bijective generator maps, mismatched ranks, and the like.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured budget.  Raised before any
// work is done; results are never silently truncated.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t budget)
      : std::runtime_error(what + " (needs " + std::to_string(required) +
                           ", budget " + std::to_string(budget) + ")"),
        required(required),
        budget(budget) {}
  std::uint64_t required;
  std::uint64_t budget;
};

}  // namespace finv
