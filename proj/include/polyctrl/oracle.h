#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyctrl/hypergraph.h"
#include "polyctrl/tensor.h"

// Independent reference implementations used to cross-check the fast
// structural and numeric tests. All of them enumerate, so they carry size
// guards and are meant for small instances only.
namespace polyctrl::oracle {

struct BruteForceDilation {
  bool dilated = false;
  std::optional<std::vector<int>> witness;  // smallest, then lexicographic
};

// Number of hyperedges whose head meets `vertices` (system vertex ids).
int HeadsInto(const DirectedHypergraph& graph, const std::vector<int>& vertices);

// Enumerates every non-empty set of system vertices. Requires n <= 12;
// larger inputs throw CapacityError.
BruteForceDilation BruteForceDilationSearch(const DirectedHypergraph& graph);

// Bit v set <=> vertex v is a member.
using VertexMask = std::uint32_t;

struct AccessClosure {
  std::vector<VertexMask> members;        // family F, in discovery order
  std::vector<int> individually_accessible;  // system vertices v with {v} in F
  bool truncated = false;                 // stopped because |F| hit the cap
};

inline constexpr int kMaxClosureVertices = 16;
inline constexpr std::size_t kDefaultClosureCap = 1 << 12;

// Families of visited vertex sets under the strict walk rule. F starts as the
// control singletons. A hyperedge fires when its tail (as a set) is the union
// of members of F contained in it; firing adds its head to F. F is closed
// under pairwise union and set difference after every round, and rounds
// repeat until nothing changes. Requires n + m <= 16.
AccessClosure IndividualAccessibilityClosure(
    const DirectedHypergraph& graph, std::size_t cap = kDefaultClosureCap);

// Rank of [B, AB, ..., A^{n-1} B] with a relative singular-value cutoff
// (tol == 0 selects the automatic cutoff). Blocks are normalized by powers of
// |A| before the cutoff, so uniform rescaling of A and B leaves it unchanged.
int KalmanRank(const DenseMatrix& a, const DenseMatrix& b, double tol);

}  // namespace polyctrl::oracle
