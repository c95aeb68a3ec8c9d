#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyctrl/hypergraph.h"
#include "polyctrl/polysystem.h"

namespace polyctrl {

// (hyperedge index, system vertex) pairs of a head-incidence matching.
using Matching = std::vector<std::pair<int, int>>;

struct DilationResult {
  bool dilated = false;
  // System vertex set S, sorted, with fewer hyperedges heading into S than
  // |S|. Present exactly when `dilated`.
  std::optional<std::vector<int>> witness;
  Matching matching;  // sorted by hyperedge
};

// Maximum matching between hyperedges and the system vertices in their heads,
// by augmenting paths with edges tried in input order. A set of system
// vertices is dilated when fewer hyperedges point into it than it has
// members; such a set exists iff the matching leaves a system vertex
// uncovered. The witness is the alternating-path closure of the lowest
// uncovered vertex.
DilationResult DetectDilation(const DirectedHypergraph& graph);

// Vertices reachable from the control vertices: a hyperedge fires once every
// vertex of its tail has been reached, and adds its head. Sorted, includes
// the control vertices.
std::vector<int> AccessibleSet(const DirectedHypergraph& graph);

struct StructuralVerdict {
  bool controllable = false;
  std::optional<std::vector<int>> dilation_witness;
  std::vector<int> inaccessible;  // system vertices, sorted
  Matching matching;
};

StructuralVerdict DecideStructural(const DirectedHypergraph& graph);
StructuralVerdict DecideStructural(const SparsityPattern& pattern);

}  // namespace polyctrl
