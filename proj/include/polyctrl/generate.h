#pragma once

#include <cstdint>

#include "polyctrl/hypergraph.h"
#include "polyctrl/polysystem.h"

namespace polyctrl {

// Independent, well-mixed seed for the index-th member of a seeded family.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

struct PatternShape {
  int dim = 2;
  int order = 4;
  int inputs = 1;
  int tensor_entries = 3;  // clamped to n^k
  // Each column of B covers one uniformly chosen row plus every other row
  // with this probability.
  double extra_control_density = 0.25;
};

// Uniformly drawn distinct tensor multi-indices and a random control support.
SparsityPattern RandomPattern(const PatternShape& shape, std::uint64_t seed);

// Family of shapes with n in [1, max_dim], m in [1, max_inputs] and
// tensor support size in [0, max_entries], all uniform.
struct PatternFamily {
  int max_dim = 4;
  int order = 4;
  int max_inputs = 2;
  int max_entries = 6;
};

SparsityPattern RandomPatternFrom(const PatternFamily& family,
                                  std::uint64_t seed);

// Random hypergraph with `system_vertices` system and `control_vertices`
// control vertices. Tails are control singletons or system multisets of
// size `tail_size`; heads are non-empty random subsets of system vertices.
DirectedHypergraph RandomHypergraph(int system_vertices, int control_vertices,
                                    int edges, int tail_size,
                                    std::uint64_t seed);

}  // namespace polyctrl
