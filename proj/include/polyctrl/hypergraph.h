#pragma once

#include <utility>
#include <vector>

#include "polyctrl/polysystem.h"
#include "polyctrl/tensor.h"

namespace polyctrl {

// Vertex ids are 0-based: system vertices 0..n-1, control vertices
// n..n+m-1.
struct Hyperedge {
  std::vector<int> tail;  // sorted multiset
  std::vector<int> head;  // sorted set

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Directed hypergraph H(A, B). Tails are pairwise distinct multisets, heads
// and tails are non-empty, and heads never contain control vertices.
class DirectedHypergraph {
 public:
  // Normalizes each tail and head (sorting, head de-duplication) and throws
  // std::invalid_argument if an invariant fails.
  DirectedHypergraph(int system_vertices, int control_vertices,
                     std::vector<Hyperedge> edges);

  int system_vertices() const { return n_; }
  int control_vertices() const { return m_; }
  int vertex_count() const { return n_ + m_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  // Moves the (normalized) edge list out, leaving the graph empty.
  std::vector<Hyperedge> TakeEdges() && { return std::move(edges_); }

  bool is_control(int v) const { return v >= n_; }

  friend bool operator==(const DirectedHypergraph&,
                         const DirectedHypergraph&) = default;

 private:
  int n_;
  int m_;
  std::vector<Hyperedge> edges_;
};

// One control hyperedge per non-empty column of B (in column order), then one
// system hyperedge per distinct tail multiset (in lexicographic order) whose
// head collects the head-mode indices of that tail.
DirectedHypergraph BuildHypergraph(const SparsityPattern& pattern);

// Tensor support encoded by the system hyperedges of `graph`, with each tail
// written in sorted order (tail orderings are not part of the structure).
std::set<MultiIndex> SystemSupport(const DirectedHypergraph& graph);

// Directed bipartite star expansion: one left vertex per hyperedge, one right
// vertex per original vertex.
struct StarGraph {
  struct Arc {
    enum class Direction { kVertexToEdge, kEdgeToVertex };
    Direction direction;
    int edge;
    int vertex;

    friend bool operator==(const Arc&, const Arc&) = default;
  };

  int edge_count = 0;
  int vertex_count = 0;
  std::vector<Arc> arcs;
};

// Arcs v -> e for each distinct tail vertex, e -> v for each head vertex;
// per edge, tail arcs precede head arcs.
StarGraph StarExpansion(const DirectedHypergraph& graph);

// Adjacency tensor of a k-uniform undirected hypergraph: 1/(k-1)! at every
// permutation of each edge. Edges are 0-based vertex lists of k distinct
// vertices; throws std::invalid_argument otherwise.
SparseTensor UniformAdjacencyTensor(int order, int dim,
                                    const std::vector<std::vector<int>>& edges);

}  // namespace polyctrl
