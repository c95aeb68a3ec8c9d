#include "polyctrl/structural.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "polyctrl/generate.h"
#include "polyctrl/numeric.h"
#include "polyctrl/oracle.h"
#include "systems.h"

namespace polyctrl {
namespace {

DirectedHypergraph GraphOf(const Polysystem& s) {
  return BuildHypergraph(SparsityPatternOf(s));
}

// |{e : head(e) meets S}|, counted directly.
int EdgesInto(const DirectedHypergraph& h, const std::vector<int>& s) {
  int count = 0;
  for (const Hyperedge& e : h.edges()) {
    bool meets = false;
    for (int v : e.head) {
      meets = meets || std::find(s.begin(), s.end(), v) != s.end();
    }
    count += meets;
  }
  return count;
}

// Least fixed point by repeated full sweeps.
std::set<int> NaiveClosure(const DirectedHypergraph& h) {
  std::set<int> reached;
  for (int v = h.system_vertices(); v < h.vertex_count(); ++v) {
    reached.insert(v);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Hyperedge& e : h.edges()) {
      const bool fires = std::all_of(e.tail.begin(), e.tail.end(),
                                     [&](int v) { return reached.count(v); });
      if (!fires) continue;
      for (int v : e.head) grew = reached.insert(v).second || grew;
    }
  }
  return reached;
}

TEST(DetectDilation, DilatedSystem) {
  const DirectedHypergraph h = GraphOf(testing::Dilated());
  const DilationResult d = DetectDilation(h);
  EXPECT_TRUE(d.dilated);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(*d.witness, (std::vector<int>{0, 1}));
  const oracle::BruteForceDilation b = oracle::BruteForceDilationSearch(h);
  EXPECT_TRUE(b.dilated);
  EXPECT_LT(EdgesInto(h, *d.witness), 2);
}

TEST(DetectDilation, Chain) {
  const DirectedHypergraph h = GraphOf(testing::Chain());
  const DilationResult d = DetectDilation(h);
  EXPECT_FALSE(d.dilated);
  EXPECT_FALSE(d.witness.has_value());
  EXPECT_EQ(d.matching, (Matching{{0, 0}, {1, 1}}));
  EXPECT_FALSE(oracle::BruteForceDilationSearch(h).dilated);
}

TEST(DetectDilation, NoEdges) {
  const DirectedHypergraph h(3, 1, {});
  const DilationResult d = DetectDilation(h);
  EXPECT_TRUE(d.dilated);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->size(), 1u);
  EXPECT_EQ(EdgesInto(h, *d.witness), 0);
}

TEST(AccessibleSet, Examples) {
  EXPECT_EQ(AccessibleSet(GraphOf(testing::Inaccessible())),
            (std::vector<int>{0, 2}));
  EXPECT_EQ(AccessibleSet(GraphOf(testing::Chain())),
            (std::vector<int>{0, 1, 2}));
  const DirectedHypergraph no_control(2, 2, {{{0}, {1}}});
  EXPECT_EQ(AccessibleSet(no_control), (std::vector<int>{2, 3}));
}

TEST(AccessibleSet, FlatCoverageFiresMixedTails) {
  // {v1, v2} is reached by one control edge; the tail {v1, v2, v2} fires.
  const DirectedHypergraph h(3, 1, {{{3}, {0, 1}}, {{0, 1, 1}, {2}}});
  EXPECT_EQ(AccessibleSet(h), (std::vector<int>{0, 1, 2, 3}));
}

TEST(DecideStructural, Chain) {
  const SparsityPattern p = SparsityPatternOf(testing::Chain());
  const StructuralVerdict v = DecideStructural(p);
  EXPECT_TRUE(v.controllable);
  const Polysystem s = SampleRealization(p, 1);
  EXPECT_EQ(oracle::KalmanRank(Unfold(s.tensor), s.control, 1e-10), 2);
}

TEST(DecideStructural, Dilated) {
  const SparsityPattern p = SparsityPatternOf(testing::Dilated());
  const StructuralVerdict v = DecideStructural(p);
  EXPECT_FALSE(v.controllable);
  ASSERT_TRUE(v.dilation_witness.has_value());
  EXPECT_EQ(*v.dilation_witness, (std::vector<int>{0, 1}));
  EXPECT_TRUE(v.inaccessible.empty());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(
        ExplicitControllabilityRank(SampleRealization(p, seed), 3, 1e-10), 1);
  }
}

TEST(DecideStructural, Inaccessible) {
  const SparsityPattern p = SparsityPatternOf(testing::Inaccessible());
  const StructuralVerdict v = DecideStructural(p);
  EXPECT_FALSE(v.controllable);
  EXPECT_EQ(v.inaccessible, std::vector<int>{1});
  // Nothing heads into v2 either, so {v2} is also a dilation.
  EXPECT_EQ(v.dilation_witness, std::vector<int>{1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseMatrix c =
        ExplicitControllabilityMatrix(SampleRealization(p, seed), 3);
    EXPECT_TRUE(c.row(1).isZero(0.0));
  }
}

TEST(DecideStructural, BothFailuresReported) {
  // Dilated pair {v1, v2} and an unreachable v3.
  const DirectedHypergraph h(3, 1, {{{3}, {0, 1}}});
  const StructuralVerdict v = DecideStructural(h);
  EXPECT_FALSE(v.controllable);
  EXPECT_TRUE(v.dilation_witness.has_value());
  EXPECT_EQ(v.inaccessible, std::vector<int>{2});
}

// Property tests.

TEST(StructuralProperties, DilationMatchesBruteForce) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const std::uint64_t seed = DeriveSeed(41, i);
    testing::Draw draw(seed);
    const int n = draw.Int(1, 8);
    const DirectedHypergraph h = RandomHypergraph(
        n, draw.Int(1, 2), draw.Int(0, 9), draw.Int(1, 3), seed);
    const DilationResult d = DetectDilation(h);
    const oracle::BruteForceDilation b = oracle::BruteForceDilationSearch(h);
    ASSERT_EQ(d.dilated, b.dilated) << "seed " << seed;
    ASSERT_EQ(d.witness.has_value(), d.dilated);
    if (d.witness) {
      EXPECT_LT(EdgesInto(h, *d.witness),
                static_cast<int>(d.witness->size()));
    }
    if (b.witness) {
      EXPECT_LT(EdgesInto(h, *b.witness),
                static_cast<int>(b.witness->size()));
    }
  }
}

TEST(StructuralProperties, MatchingIsValid) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const DirectedHypergraph h = RandomHypergraph(6, 2, 7, 3, DeriveSeed(42, i));
    const DilationResult d = DetectDilation(h);
    std::set<int> edges;
    std::set<int> vertices;
    for (const auto& [e, v] : d.matching) {
      EXPECT_TRUE(edges.insert(e).second);
      EXPECT_TRUE(vertices.insert(v).second);
      const auto& head = h.edges()[e].head;
      EXPECT_NE(std::find(head.begin(), head.end(), v), head.end());
    }
    EXPECT_LE(d.matching.size(),
              std::min<std::size_t>(h.edges().size(), h.system_vertices()));
  }
}

TEST(StructuralProperties, AccessibleSetIsLeastFixedPoint) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const DirectedHypergraph h = RandomHypergraph(7, 2, 8, 3, DeriveSeed(43, i));
    const std::vector<int> a = AccessibleSet(h);
    const std::set<int> reached(a.begin(), a.end());
    EXPECT_EQ(reached, NaiveClosure(h));
    for (const Hyperedge& e : h.edges()) {
      const bool fires = std::all_of(e.tail.begin(), e.tail.end(),
                                     [&](int v) { return reached.count(v); });
      if (!fires) continue;
      for (int v : e.head) EXPECT_TRUE(reached.count(v));
    }
  }
}

TEST(StructuralProperties, VerdictDependsOnlyOnPattern) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const SparsityPattern p = RandomPatternFrom({}, DeriveSeed(44, i));
    const StructuralVerdict v = DecideStructural(p);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Polysystem s = Scaled(SampleRealization(p, seed), 1e3);
      const StructuralVerdict w = DecideStructural(SparsityPatternOf(s));
      EXPECT_EQ(w.controllable, v.controllable);
      EXPECT_EQ(w.dilation_witness, v.dilation_witness);
      EXPECT_EQ(w.inaccessible, v.inaccessible);
    }
  }
}

// Runtime smoke check: at fixed n, four times the head incidences should
// cost roughly four times as much, not sixteen.
TEST(StructuralProperties, NearLinearScaling) {
  constexpr int kN = 3000;
  auto time_for = [](int edges) {
    testing::Draw draw(45);
    std::vector<Hyperedge> list;
    for (int e = 0; e < edges; ++e) {
      std::vector<int> tail;
      if (e < 4) {
        tail = {kN + e};
      } else {
        tail = {e % kN, (e / kN) % kN, draw.Int(0, kN - 1)};
        std::sort(tail.begin(), tail.end());
      }
      std::vector<int> head;
      const int size = draw.Int(1, 3);
      for (int i = 0; i < size; ++i) head.push_back(draw.Int(0, kN - 1));
      list.push_back({tail, head});
    }
    std::sort(list.begin(), list.end(),
              [](const Hyperedge& a, const Hyperedge& b) {
                return a.tail < b.tail;
              });
    list.erase(std::unique(list.begin(), list.end(),
                           [](const Hyperedge& a, const Hyperedge& b) {
                             return a.tail == b.tail;
                           }),
               list.end());
    const DirectedHypergraph h(kN, 4, list);
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const StructuralVerdict v = DecideStructural(h);
      const auto t1 = std::chrono::steady_clock::now();
      EXPECT_LE(v.matching.size(), static_cast<std::size_t>(kN));
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    std::size_t incidences = 0;
    for (const Hyperedge& e : h.edges()) incidences += e.head.size();
    return best / static_cast<double>(incidences);
  };
  const double small = time_for(6000);
  const double large = time_for(24000);
  EXPECT_LT(large, 4.0 * small);
}

}  // namespace
}  // namespace polyctrl
