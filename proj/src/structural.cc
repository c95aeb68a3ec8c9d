#include "polyctrl/structural.h"

#include <algorithm>
#include <span>

namespace polyctrl {
namespace {

constexpr int kUnmatched = -1;

// Kuhn's augmenting-path search, iterative so that long alternating paths do
// not recurse. All per-vertex and per-edge state lives in one buffer.
class HeadMatcher {
 public:
  HeadMatcher(const DirectedHypergraph& graph, std::vector<int>& work)
      : graph_(graph) {
    const std::size_t edges = graph.edges().size();
    const std::size_t n = graph.system_vertices();
    work.assign(edges + 2 * n + 2 * (edges + 1), kUnmatched);
    int* base = work.data();
    edge_match_ = {base, edges};
    vertex_match_ = {base + edges, n};
    seen_ = {base + edges + n, n};
    stack_edge_ = {base + edges + 2 * n, edges + 1};
    stack_next_ = {base + 2 * edges + 2 * n + 1, edges + 1};
  }

  void Run() {
    const int edges = static_cast<int>(graph_.edges().size());
    // Greedy pass first; augmenting only repairs what it leaves.
    for (int e = 0; e < edges; ++e) {
      for (int v : graph_.edges()[e].head) {
        if (vertex_match_[v] == kUnmatched) {
          edge_match_[e] = v;
          vertex_match_[v] = e;
          break;
        }
      }
    }
    int matched = 0;
    for (int e = 0; e < edges; ++e) matched += edge_match_[e] != kUnmatched;
    const int n = graph_.system_vertices();
    // Vertices visited by a failed search stay dead until the matching
    // changes, so marks are only cleared after a success.
    ++stamp_;
    for (int e = 0; e < edges && matched < n; ++e) {
      if (edge_match_[e] != kUnmatched) continue;
      if (Augment(e)) {
        ++matched;
        ++stamp_;
      }
    }
  }

  std::span<const int> vertex_match() const { return vertex_match_; }
  std::span<const int> edge_match() const { return edge_match_; }

  Matching matching() const {
    Matching out;
    out.reserve(edge_match_.size());
    for (std::size_t e = 0; e < edge_match_.size(); ++e) {
      if (edge_match_[e] != kUnmatched) {
        out.emplace_back(static_cast<int>(e), edge_match_[e]);
      }
    }
    return out;
  }

 private:
  // Each frame is an edge plus the position reached in its head; a path
  // never repeats an edge, so depth <= edge count.
  bool Augment(int root) {
    int depth = 0;
    stack_edge_[0] = root;
    stack_next_[0] = 0;
    while (depth >= 0) {
      const int edge = stack_edge_[depth];
      const std::vector<int>& head = graph_.edges()[edge].head;
      if (stack_next_[depth] == static_cast<int>(head.size())) {
        --depth;
        continue;
      }
      const int v = head[stack_next_[depth]++];
      if (seen_[v] == stamp_) continue;
      seen_[v] = stamp_;
      if (vertex_match_[v] == kUnmatched) {
        // Flip the path: each frame's edge takes the vertex it reached next.
        int take = v;
        for (int d = depth; d >= 0; --d) {
          const int previous = edge_match_[stack_edge_[d]];
          edge_match_[stack_edge_[d]] = take;
          vertex_match_[take] = stack_edge_[d];
          take = previous;
        }
        return true;
      }
      ++depth;
      stack_edge_[depth] = vertex_match_[v];
      stack_next_[depth] = 0;
    }
    return false;
  }

  const DirectedHypergraph& graph_;
  std::span<int> edge_match_;
  std::span<int> vertex_match_;
  std::span<int> seen_;
  std::span<int> stack_edge_;
  std::span<int> stack_next_;
  int stamp_ = 0;
};

}  // namespace

DilationResult DetectDilation(const DirectedHypergraph& graph) {
  const int n = graph.system_vertices();
  const auto& edges = graph.edges();
  const int edge_count = static_cast<int>(edges.size());
  std::vector<int> work;
  HeadMatcher matcher(graph, work);
  matcher.Run();

  DilationResult result;
  result.matching = matcher.matching();
  result.dilated = static_cast<int>(result.matching.size()) < n;
  if (!result.dilated) return result;

  // Hall violator: from an uncovered vertex, alternate vertex -> any edge
  // heading into it -> that edge's matched vertex. Every edge reached is
  // matched (else the matching would augment), and each reached vertex other
  // than the root is matched to a distinct reached edge, so the reached
  // vertex set has one more member than the edges heading into it.
  const std::span<const int> vertex_match = matcher.vertex_match();
  const std::span<const int> edge_match = matcher.edge_match();
  const int root = static_cast<int>(
      std::find(vertex_match.begin(), vertex_match.end(), kUnmatched) -
      vertex_match.begin());

  std::size_t incidences = 0;
  for (const Hyperedge& e : edges) incidences += e.head.size();
  // Layout: start[n+1] | fill[n] | into[incidences] | in_set[n] |
  // edge_seen[edges] | frontier[n]
  std::vector<int> scratch(4 * n + 1 + incidences + edge_count, 0);
  int* start = scratch.data();
  int* fill = start + n + 1;
  int* into = fill + n;
  int* in_set = into + incidences;
  int* edge_seen = in_set + n;
  int* frontier = edge_seen + edge_count;

  for (const Hyperedge& e : edges) {
    for (int v : e.head) ++start[v + 1];
  }
  for (int v = 0; v < n; ++v) start[v + 1] += start[v];
  std::copy(start, start + n, fill);
  for (int e = 0; e < edge_count; ++e) {
    for (int v : edges[e].head) into[fill[v]++] = e;
  }

  int top = 0;
  frontier[top++] = root;
  in_set[root] = 1;
  while (top > 0) {
    const int v = frontier[--top];
    for (int i = start[v]; i < start[v + 1]; ++i) {
      const int e = into[i];
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      const int w = edge_match[e];
      if (w != kUnmatched && !in_set[w]) {
        in_set[w] = 1;
        frontier[top++] = w;
      }
    }
  }
  std::vector<int> witness;
  witness.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) witness.push_back(v);
  }
  result.witness = std::move(witness);
  return result;
}

std::vector<int> AccessibleSet(const DirectedHypergraph& graph) {
  const int total = graph.vertex_count();
  const auto& edges = graph.edges();

  // missing[e] counts distinct tail vertices of e not yet reached.
  std::vector<int> missing(edges.size(), 0);
  std::vector<std::vector<int>> waiting_on(total);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const std::vector<int>& tail = edges[e].tail;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (i > 0 && tail[i] == tail[i - 1]) continue;
      ++missing[e];
      waiting_on[tail[i]].push_back(e);
    }
  }

  std::vector<char> reached(total, 0);
  std::vector<int> queue;
  auto reach = [&](int v) {
    if (reached[v]) return;
    reached[v] = 1;
    queue.push_back(v);
  };
  for (int v = graph.system_vertices(); v < total; ++v) reach(v);

  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int e : waiting_on[queue[q]]) {
      if (--missing[e] == 0) {
        for (int h : edges[e].head) reach(h);
      }
    }
  }

  std::vector<int> out;
  for (int v = 0; v < total; ++v) {
    if (reached[v]) out.push_back(v);
  }
  return out;
}

StructuralVerdict DecideStructural(const DirectedHypergraph& graph) {
  StructuralVerdict verdict;
  DilationResult dilation = DetectDilation(graph);
  verdict.dilation_witness = std::move(dilation.witness);
  verdict.matching = std::move(dilation.matching);

  const std::vector<int> accessible = AccessibleSet(graph);
  std::vector<char> reached(graph.vertex_count(), 0);
  for (int v : accessible) reached[v] = 1;
  for (int v = 0; v < graph.system_vertices(); ++v) {
    if (!reached[v]) verdict.inaccessible.push_back(v);
  }
  verdict.controllable =
      !verdict.dilation_witness.has_value() && verdict.inaccessible.empty();
  return verdict;
}

StructuralVerdict DecideStructural(const SparsityPattern& pattern) {
  return DecideStructural(BuildHypergraph(pattern));
}

}  // namespace polyctrl
