#include "polyctrl/hypergraph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "polyctrl/generate.h"
#include "systems.h"

namespace polyctrl {
namespace {

using Arc = StarGraph::Arc;
using Dir = StarGraph::Arc::Direction;

// Groups a support by sorted tail; the independent reference for system
// hyperedges.
std::map<std::vector<int>, std::set<int>> GroupByTail(
    const std::set<MultiIndex>& support) {
  std::map<std::vector<int>, std::set<int>> out;
  for (const MultiIndex& index : support) {
    std::vector<int> tail(index.begin(), index.end() - 1);
    std::sort(tail.begin(), tail.end());
    out[tail].insert(index.back());
  }
  return out;
}

TEST(BuildHypergraph, Cube) {
  const DirectedHypergraph h =
      BuildHypergraph(SparsityPatternOf(testing::Cube()));
  EXPECT_EQ(h.system_vertices(), 2);
  EXPECT_EQ(h.control_vertices(), 1);
  const std::vector<Hyperedge> expected{{{2}, {0}}, {{0, 0, 0}, {1}}};
  EXPECT_EQ(h.edges(), expected);
}

TEST(BuildHypergraph, DilatedSingleControlEdge) {
  const DirectedHypergraph h =
      BuildHypergraph(SparsityPatternOf(testing::Dilated()));
  const std::vector<Hyperedge> expected{{{2}, {0, 1}}};
  EXPECT_EQ(h.edges(), expected);
}

TEST(BuildHypergraph, SharedTailMergesHeads) {
  SparsityPattern p;
  p.order = 4;
  p.dim = 2;
  p.inputs = 1;
  p.tensor_support = {{0, 0, 0, 0}, {0, 0, 0, 1}};
  p.control_support = {{0, 0}};
  const DirectedHypergraph h = BuildHypergraph(p);
  const auto groups = GroupByTail(p.tensor_support);
  ASSERT_EQ(groups.size(), 1u);
  ASSERT_EQ(h.edges().size(), 2u);
  EXPECT_EQ(h.edges()[0], (Hyperedge{{2}, {0}}));
  EXPECT_EQ(h.edges()[1].tail, groups.begin()->first);
  EXPECT_EQ(h.edges()[1].head,
            std::vector<int>(groups.begin()->second.begin(),
                             groups.begin()->second.end()));
  EXPECT_EQ(h.edges()[1], (Hyperedge{{0, 0, 0}, {0, 1}}));
}

TEST(BuildHypergraph, ZeroControlColumnHasNoEdge) {
  SparsityPattern p = SparsityPatternOf(testing::Cube());
  p.inputs = 2;
  const DirectedHypergraph h = BuildHypergraph(p);
  EXPECT_EQ(h.control_vertices(), 2);
  EXPECT_EQ(h.edges().size(), 2u);
}

TEST(DirectedHypergraph, RejectsBrokenInvariants) {
  EXPECT_THROW(DirectedHypergraph(2, 1, {{{}, {0}}}), std::invalid_argument);
  EXPECT_THROW(DirectedHypergraph(2, 1, {{{2}, {}}}), std::invalid_argument);
  EXPECT_THROW(DirectedHypergraph(2, 1, {{{0}, {2}}}), std::invalid_argument);
  EXPECT_THROW(DirectedHypergraph(2, 1, {{{0}, {1}}, {{0}, {0}}}),
               std::invalid_argument);
  EXPECT_THROW(DirectedHypergraph(2, 1, {{{5}, {0}}}), std::invalid_argument);
}

TEST(StarExpansion, Chain) {
  const StarGraph s =
      StarExpansion(BuildHypergraph(SparsityPatternOf(testing::Chain())));
  EXPECT_EQ(s.edge_count, 2);
  EXPECT_EQ(s.vertex_count, 3);
  const std::vector<Arc> expected{{Dir::kVertexToEdge, 0, 2},
                                  {Dir::kEdgeToVertex, 0, 0},
                                  {Dir::kVertexToEdge, 1, 0},
                                  {Dir::kEdgeToVertex, 1, 1}};
  EXPECT_EQ(s.arcs, expected);
}

TEST(StarExpansion, Dilated) {
  const StarGraph s =
      StarExpansion(BuildHypergraph(SparsityPatternOf(testing::Dilated())));
  const std::vector<Arc> expected{{Dir::kVertexToEdge, 0, 2},
                                  {Dir::kEdgeToVertex, 0, 0},
                                  {Dir::kEdgeToVertex, 0, 1}};
  EXPECT_EQ(s.arcs, expected);
}

TEST(UniformAdjacencyTensor, SingleTriple) {
  const SparseTensor t = UniformAdjacencyTensor(3, 3, {{0, 1, 2}});
  EXPECT_EQ(t.nnz(), 6u);
  for (const auto& [index, value] : t.entries()) EXPECT_EQ(value, 0.5);
}

TEST(UniformAdjacencyTensor, EmptyAndTwoTriples) {
  EXPECT_EQ(UniformAdjacencyTensor(3, 4, {}).nnz(), 0u);
  const SparseTensor t = UniformAdjacencyTensor(3, 4, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_EQ(t.nnz(), 12u);
  for (const auto& [index, value] : t.entries()) {
    EXPECT_EQ(value, 0.5);
    std::vector<int> sorted = index;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(sorted == (std::vector<int>{0, 1, 2}) ||
                sorted == (std::vector<int>{0, 1, 3}));
  }
}

TEST(UniformAdjacencyTensor, RejectsRepeatedOrWrongSize) {
  EXPECT_THROW(UniformAdjacencyTensor(3, 3, {{0, 0, 1}}),
               std::invalid_argument);
  EXPECT_THROW(UniformAdjacencyTensor(3, 4, {{0, 1, 2, 3}}),
               std::invalid_argument);
}

TEST(UniformAdjacencyTensor, FourthOrderValueIsOneSixth) {
  const SparseTensor t = UniformAdjacencyTensor(4, 4, {{0, 1, 2, 3}});
  EXPECT_EQ(t.nnz(), 24u);
  EXPECT_DOUBLE_EQ(t.at({3, 2, 1, 0}), 1.0 / 6.0);
}

// Property tests.

TEST(HypergraphProperties, SupportRoundTrip) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const SparsityPattern p = RandomPatternFrom({}, DeriveSeed(5, i));
    const DirectedHypergraph h = BuildHypergraph(p);
    std::set<MultiIndex> sorted_support;
    for (MultiIndex index : p.tensor_support) {
      std::sort(index.begin(), index.end() - 1);
      sorted_support.insert(index);
    }
    EXPECT_EQ(SystemSupport(h), sorted_support);
    const auto groups = GroupByTail(p.tensor_support);
    int system_edges = 0;
    for (const Hyperedge& e : h.edges()) {
      if (h.is_control(e.tail.front())) continue;
      ++system_edges;
      const auto it = groups.find(e.tail);
      ASSERT_NE(it, groups.end());
      EXPECT_EQ(e.head, std::vector<int>(it->second.begin(), it->second.end()));
    }
    EXPECT_EQ(system_edges, static_cast<int>(groups.size()));
  }
}

TEST(HypergraphProperties, StarDegrees) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const DirectedHypergraph h = RandomHypergraph(5, 2, 6, 3, DeriveSeed(6, i));
    const StarGraph s = StarExpansion(h);
    std::vector<int> in(h.edges().size(), 0);
    std::vector<int> out(h.edges().size(), 0);
    for (const Arc& a : s.arcs) {
      if (a.direction == Dir::kVertexToEdge) {
        ++in[a.edge];
      } else {
        ++out[a.edge];
        EXPECT_FALSE(h.is_control(a.vertex));
      }
    }
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
      std::set<int> distinct(h.edges()[e].tail.begin(),
                             h.edges()[e].tail.end());
      EXPECT_EQ(in[e], static_cast<int>(distinct.size()));
      EXPECT_EQ(out[e], static_cast<int>(h.edges()[e].head.size()));
    }
  }
}

TEST(HypergraphProperties, AdjacencyTensorGivesOmnidirectionalEdges) {
  testing::Draw draw(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = draw.Int(5, 6);
    std::set<std::vector<int>> edges;
    const int count = draw.Int(1, 3);
    while (static_cast<int>(edges.size()) < count) {
      std::set<int> e;
      while (e.size() < 4) e.insert(draw.Int(0, n - 1));
      edges.insert({e.begin(), e.end()});
    }
    const SparseTensor t = UniformAdjacencyTensor(
        4, n, {edges.begin(), edges.end()});
    SparsityPattern p = SparsityPatternOf({t, DenseMatrix::Zero(n, 1)});
    const DirectedHypergraph h = BuildHypergraph(p);
    std::map<std::vector<int>, std::set<int>> expected;
    for (const std::vector<int>& e : edges) {
      for (int j : e) {
        std::vector<int> tail;
        for (int v : e) {
          if (v != j) tail.push_back(v);
        }
        expected[tail].insert(j);
      }
    }
    ASSERT_EQ(h.edges().size(), expected.size());
    for (const Hyperedge& e : h.edges()) {
      const auto it = expected.find(e.tail);
      ASSERT_NE(it, expected.end());
      EXPECT_EQ(e.head, std::vector<int>(it->second.begin(), it->second.end()));
    }
  }
}

}  // namespace
}  // namespace polyctrl
