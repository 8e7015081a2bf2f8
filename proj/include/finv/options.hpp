#pragma once

#include <cstdint>

namespace finv {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Knobs for the enumeration passes.  `budget` bounds the number of
// configurations a single pass may visit; `parallel` selects the OpenMP
// kernels (the serial reference path is used when false or when the pass
// is too small to be worth forking threads).
struct EvalOptions {
  std::uint64_t budget = kDefaultBudget;
  bool parallel = true;
};

}  // namespace finv
