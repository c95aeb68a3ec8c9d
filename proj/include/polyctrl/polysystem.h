#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyctrl/tensor.h"

namespace polyctrl {

// Control system  xdot = A x^{k-1} + B u.
struct Polysystem {
  SparseTensor tensor;
  DenseMatrix control;  // n x m

  int order() const { return tensor.order(); }
  int dim() const { return tensor.dim(); }
  int inputs() const { return static_cast<int>(control.cols()); }
};

// Structure of a polysystem: the equivalence class of realizations sharing
// the same non-zero positions. Indices are 0-based.
struct SparsityPattern {
  int order = 0;
  int dim = 0;
  int inputs = 0;
  std::set<MultiIndex> tensor_support;
  std::set<std::pair<int, int>> control_support;  // (row, column)

  friend bool operator==(const SparsityPattern&,
                         const SparsityPattern&) = default;
};

struct Violation {
  enum class Kind { kOrder, kParity, kDimension, kInputs, kIndexRange };
  Kind kind;
  std::string message;
};

const char* ToString(Violation::Kind kind);

SparsityPattern SparsityPatternOf(const Polysystem& system);

// Draws a realization over `pattern`. Each structural coefficient is s * u
// with s uniform on {-1, +1} and u uniform on [0.5, 2.0]; tensor support is
// drawn first, then control support, both in lexicographic order. The output
// depends only on (pattern, seed) and is identical across platforms.
Polysystem SampleRealization(const SparsityPattern& pattern,
                             std::uint64_t seed);

// Empty when the system is admissible: even order k (odd polynomial degree),
// B with n rows and at least one column.
std::vector<Violation> Validate(const Polysystem& system);
std::vector<Violation> Validate(const SparsityPattern& pattern);

// Throws std::invalid_argument listing every violation, if any.
void RequireValid(const Polysystem& system);
void RequireValid(const SparsityPattern& pattern);

// Copy with every tensor and control coefficient multiplied by `factor`.
Polysystem Scaled(const Polysystem& system, double factor);

}  // namespace polyctrl
