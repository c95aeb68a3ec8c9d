#include "polyctrl/crosscheck.h"

#include "polyctrl/generate.h"
#include "polyctrl/numeric.h"
#include "polyctrl/structural.h"

namespace polyctrl {

CrossCheckOutcome CrossCheckPattern(const SparsityPattern& pattern,
                                    std::uint64_t seed, double tol,
                                    double scale) {
  CrossCheckOutcome outcome;
  outcome.dim = pattern.dim;
  outcome.structurally_controllable = DecideStructural(pattern).controllable;
  const int draws = outcome.structurally_controllable
                        ? kRealizationsIfControllable
                        : kRealizationsIfUncontrollable;
  bool any_full = false;
  for (int r = 0; r < draws; ++r) {
    const Polysystem system =
        Scaled(SampleRealization(pattern, DeriveSeed(seed, r)), scale);
    const int rank = StrongControllability(system, tol).rank;
    outcome.ranks.push_back(rank);
    if (rank == pattern.dim) {
      any_full = true;
      if (outcome.structurally_controllable) break;
    }
  }
  outcome.agrees =
      outcome.structurally_controllable ? any_full : !any_full;
  return outcome;
}

}  // namespace polyctrl
