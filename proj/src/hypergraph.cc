#include "polyctrl/hypergraph.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace polyctrl {

DirectedHypergraph::DirectedHypergraph(int system_vertices,
                                       int control_vertices,
                                       std::vector<Hyperedge> edges)
    : n_(system_vertices), m_(control_vertices), edges_(std::move(edges)) {
  if (n_ < 0 || m_ < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  for (Hyperedge& e : edges_) {
    if (e.tail.empty()) throw std::invalid_argument("hyperedge with empty tail");
    if (e.head.empty()) throw std::invalid_argument("hyperedge with empty head");
    std::sort(e.tail.begin(), e.tail.end());
    std::sort(e.head.begin(), e.head.end());
    e.head.erase(std::unique(e.head.begin(), e.head.end()), e.head.end());
    for (int v : e.tail) {
      if (v < 0 || v >= n_ + m_) {
        throw std::invalid_argument("tail vertex " + std::to_string(v + 1) +
                                    " out of range");
      }
    }
    for (int v : e.head) {
      if (v < 0 || v >= n_ + m_) {
        throw std::invalid_argument("head vertex " + std::to_string(v + 1) +
                                    " out of range");
      }
      if (v >= n_) {
        throw std::invalid_argument("control vertex " + std::to_string(v + 1) +
                                    " appears in a hyperedge head");
      }
    }
  }
  auto duplicate = [] {
    return std::invalid_argument("two hyperedges share the same tail");
  };
  if (edges_.size() <= 16) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (edges_[i].tail == edges_[j].tail) throw duplicate();
      }
    }
    return;
  }
  std::vector<const std::vector<int>*> tails;
  tails.reserve(edges_.size());
  for (const Hyperedge& e : edges_) tails.push_back(&e.tail);
  std::sort(tails.begin(), tails.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < tails.size(); ++i) {
    if (*tails[i] == *tails[i - 1]) throw duplicate();
  }
}

DirectedHypergraph BuildHypergraph(const SparsityPattern& pattern) {
  const int n = pattern.dim;
  std::vector<Hyperedge> edges;

  std::vector<std::vector<int>> columns(pattern.inputs);
  for (const auto& [row, col] : pattern.control_support) {
    if (row < 0 || row >= n || col < 0 || col >= pattern.inputs) {
      throw std::invalid_argument("control support out of range");
    }
    columns[col].push_back(row);
  }
  for (int j = 0; j < pattern.inputs; ++j) {
    if (!columns[j].empty()) edges.push_back({{n + j}, std::move(columns[j])});
  }

  std::map<std::vector<int>, std::set<int>> by_tail;
  for (const MultiIndex& index : pattern.tensor_support) {
    if (static_cast<int>(index.size()) != pattern.order) {
      throw std::invalid_argument("tensor support entry has wrong order");
    }
    for (int i : index) {
      if (i < 0 || i >= n) {
        throw std::invalid_argument("tensor support out of range");
      }
    }
    std::vector<int> tail(index.begin(), index.end() - 1);
    std::sort(tail.begin(), tail.end());
    by_tail[tail].insert(index.back());
  }
  for (auto& [tail, head] : by_tail) {
    edges.push_back({tail, std::vector<int>(head.begin(), head.end())});
  }
  return DirectedHypergraph(n, pattern.inputs, std::move(edges));
}

std::set<MultiIndex> SystemSupport(const DirectedHypergraph& graph) {
  std::set<MultiIndex> out;
  for (const Hyperedge& e : graph.edges()) {
    if (graph.is_control(e.tail.front())) continue;
    for (int h : e.head) {
      MultiIndex index = e.tail;
      index.push_back(h);
      out.insert(std::move(index));
    }
  }
  return out;
}

StarGraph StarExpansion(const DirectedHypergraph& graph) {
  StarGraph star;
  star.edge_count = static_cast<int>(graph.edges().size());
  star.vertex_count = graph.vertex_count();
  using Direction = StarGraph::Arc::Direction;
  for (int e = 0; e < star.edge_count; ++e) {
    const Hyperedge& edge = graph.edges()[e];
    for (std::size_t i = 0; i < edge.tail.size(); ++i) {
      if (i > 0 && edge.tail[i] == edge.tail[i - 1]) continue;
      star.arcs.push_back({Direction::kVertexToEdge, e, edge.tail[i]});
    }
    for (int v : edge.head) {
      star.arcs.push_back({Direction::kEdgeToVertex, e, v});
    }
  }
  return star;
}

SparseTensor UniformAdjacencyTensor(
    int order, int dim, const std::vector<std::vector<int>>& edges) {
  double factorial = 1.0;
  for (int i = 2; i < order; ++i) factorial *= i;
  const double value = 1.0 / factorial;

  std::vector<std::pair<MultiIndex, double>> entries;
  for (const std::vector<int>& edge : edges) {
    if (static_cast<int>(edge.size()) != order) {
      throw std::invalid_argument("edge has " + std::to_string(edge.size()) +
                                  " vertices in a " + std::to_string(order) +
                                  "-uniform hypergraph");
    }
    MultiIndex index = edge;
    std::sort(index.begin(), index.end());
    if (std::adjacent_find(index.begin(), index.end()) != index.end()) {
      throw std::invalid_argument("edge repeats a vertex");
    }
    do {
      entries.emplace_back(index, value);
    } while (std::next_permutation(index.begin(), index.end()));
  }
  return SparseTensor(order, dim, entries);
}

}  // namespace polyctrl
