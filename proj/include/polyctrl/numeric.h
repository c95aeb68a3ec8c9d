#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polyctrl/polysystem.h"
#include "polyctrl/tensor.h"

namespace polyctrl {

// Relative singular-value cutoff used when a caller passes tol == 0:
// max(rows, cols) * machine epsilon.
double AutomaticTolerance(Eigen::Index rows, Eigen::Index cols);

// Number of singular values strictly above tol * sigma_max. tol == 0 selects
// AutomaticTolerance. An all-zero or empty matrix has rank 0.
int NumericalRank(const DenseMatrix& m, double tol);

struct ReducedControllability {
  DenseMatrix basis;           // n x rank, orthonormal columns
  int iterations = 0;          // expansion steps performed
  double tolerance = 0.0;      // relative cutoff of the last truncation
  std::vector<int> rank_history;  // rank after each iteration
};

// Called after every iteration with the 1-based iteration count and the
// truncated basis.
using IterationObserver = std::function<void(int, const DenseMatrix&)>;

// SVD-reduced nonlinear controllability matrix. Starting from C = B, each
// iteration appends L = A_(k) (C (x) ... (x) C) with k-1 factors, takes a thin
// SVD and keeps the left singular vectors whose singular values exceed
// tol * sigma_max. Runs at most n iterations and stops early when the rank
// reaches n or stops growing.
//
// A_(k) is the unfolding of the tail-symmetrized tensor, which defines the
// same vector field; for tensors already symmetric in the tail modes this is
// the plain unfolding.
ReducedControllability ReducedControllabilityMatrix(
    const Polysystem& system, double tol,
    std::int64_t capacity = kDefaultCapacity,
    const IterationObserver& observer = {});

struct RankReport {
  int rank = 0;
  int n = 0;
  bool strongly_controllable = false;
  int iterations = 0;
  double tolerance = 0.0;
};

RankReport StrongControllability(const Polysystem& system, double tol,
                                 std::int64_t capacity = kDefaultCapacity);

// Uncompressed controllability matrix with `terms` blocks:
//   C_0 = B,  C_{i+1} = [C_i | A_(k) C_i^[k-1]],
// i.e. each new block expands everything generated so far. Column counts grow
// as m, m + m^{k-1}, ...; exceeding `capacity` cells throws CapacityError.
// Only meant for small systems, as a rank cross-check.
DenseMatrix ExplicitControllabilityMatrix(
    const Polysystem& system, int terms,
    std::int64_t capacity = kDefaultCapacity);

// Rank of ExplicitControllabilityMatrix(system, terms). Each column is first
// divided by an a-priori bound on its norm (|A_(k)| times the bounds of the
// columns it was expanded from), so the result does not depend on the overall
// scale of A and B even though block magnitudes grow geometrically.
int ExplicitControllabilityRank(const Polysystem& system, int terms,
                                double tol,
                                std::int64_t capacity = kDefaultCapacity);

}  // namespace polyctrl
