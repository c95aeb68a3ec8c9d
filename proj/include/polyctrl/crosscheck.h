#pragma once

#include <cstdint>
#include <vector>

#include "polyctrl/polysystem.h"

namespace polyctrl {

// Realizations drawn per pattern when checking the structural verdict
// against the numeric rank test.
inline constexpr int kRealizationsIfControllable = 3;
inline constexpr int kRealizationsIfUncontrollable = 5;

struct CrossCheckOutcome {
  int dim = 0;
  bool structurally_controllable = false;
  std::vector<int> ranks;  // one per sampled realization, in draw order
  // Controllable: some realization reaches rank n. Uncontrollable: none does.
  bool agrees = false;
};

// Samples realizations of `pattern` (seeds DeriveSeed(seed, r)), multiplies
// every coefficient by `scale`, and compares their SVD-reduced rank with the
// structural verdict. A controllable verdict stops at the first full-rank
// realization.
CrossCheckOutcome CrossCheckPattern(const SparsityPattern& pattern,
                                    std::uint64_t seed, double tol,
                                    double scale = 1.0);

}  // namespace polyctrl
