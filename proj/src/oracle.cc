#include "polyctrl/oracle.h"

#include <algorithm>
#include <string>

#include "polyctrl/error.h"
#include "polyctrl/numeric.h"

namespace polyctrl::oracle {
namespace {

constexpr int kMaxBruteForceVertices = 12;

VertexMask MaskOf(const std::vector<int>& vertices) {
  VertexMask mask = 0;
  for (int v : vertices) mask |= VertexMask{1} << v;
  return mask;
}

}  // namespace

int HeadsInto(const DirectedHypergraph& graph,
              const std::vector<int>& vertices) {
  int count = 0;
  for (const Hyperedge& e : graph.edges()) {
    const bool meets = std::any_of(e.head.begin(), e.head.end(), [&](int h) {
      return std::find(vertices.begin(), vertices.end(), h) != vertices.end();
    });
    if (meets) ++count;
  }
  return count;
}

BruteForceDilation BruteForceDilationSearch(const DirectedHypergraph& graph) {
  const int n = graph.system_vertices();
  if (n > kMaxBruteForceVertices) {
    throw CapacityError("brute-force dilation search limited to " +
                        std::to_string(kMaxBruteForceVertices) +
                        " system vertices, got " + std::to_string(n));
  }
  std::vector<VertexMask> heads;
  heads.reserve(graph.edges().size());
  for (const Hyperedge& e : graph.edges()) heads.push_back(MaskOf(e.head));

  BruteForceDilation result;
  std::vector<char> pick(n, 0);
  for (int size = 1; size <= n; ++size) {
    // Selector with `size` leading ones; prev_permutation walks the subsets
    // in lexicographic order of their sorted members.
    std::fill(pick.begin(), pick.begin() + size, 1);
    std::fill(pick.begin() + size, pick.end(), 0);
    do {
      VertexMask subset = 0;
      for (int v = 0; v < n; ++v) {
        if (pick[v]) subset |= VertexMask{1} << v;
      }
      int into = 0;
      for (VertexMask h : heads) {
        if (h & subset) ++into;
      }
      if (into < size) {
        result.dilated = true;
        std::vector<int> witness;
        for (int v = 0; v < n; ++v) {
          if (pick[v]) witness.push_back(v);
        }
        result.witness = std::move(witness);
        return result;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return result;
}

AccessClosure IndividualAccessibilityClosure(const DirectedHypergraph& graph,
                                             std::size_t cap) {
  const int total = graph.vertex_count();
  if (total > kMaxClosureVertices) {
    throw CapacityError("individual accessibility closure limited to " +
                        std::to_string(kMaxClosureVertices) + " vertices");
  }
  std::vector<VertexMask> tails;
  std::vector<VertexMask> heads;
  for (const Hyperedge& e : graph.edges()) {
    tails.push_back(MaskOf(e.tail));
    heads.push_back(MaskOf(e.head));
  }

  AccessClosure closure;
  std::vector<char> present(std::size_t{1} << total, 0);
  auto add = [&](VertexMask s) {
    if (s == 0 || present[s]) return false;
    if (closure.members.size() >= cap) {
      closure.truncated = true;
      return false;
    }
    present[s] = 1;
    closure.members.push_back(s);
    return true;
  };
  for (int v = graph.system_vertices(); v < total; ++v) {
    add(VertexMask{1} << v);
  }

  std::size_t closed_upto = 0;  // members [0, closed_upto) are pairwise closed
  bool changed = true;
  while (changed && !closure.truncated) {
    changed = false;
    // Union/difference closure, semi-naive: pair each new member with every
    // member before it.
    for (std::size_t i = closed_upto; i < closure.members.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const VertexMask a = closure.members[i];
        const VertexMask b = closure.members[j];
        add(a | b);
        add(a & ~b);
        add(b & ~a);
      }
      if (closure.truncated) break;
    }
    closed_upto = closure.members.size();

    for (std::size_t e = 0; e < tails.size(); ++e) {
      if (present[heads[e]]) continue;
      VertexMask covered = 0;
      for (VertexMask s : closure.members) {
        if ((s & ~tails[e]) == 0) covered |= s;
      }
      if (covered == tails[e] && add(heads[e])) changed = true;
    }
  }

  for (int v = 0; v < graph.system_vertices(); ++v) {
    if (present[VertexMask{1} << v]) {
      closure.individually_accessible.push_back(v);
    }
  }
  return closure;
}

int KalmanRank(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("Kalman rank: A must be square");
  }
  if (b.rows() != a.rows()) {
    throw std::invalid_argument("Kalman rank: B has " +
                                std::to_string(b.rows()) + " rows, expected " +
                                std::to_string(a.rows()));
  }
  const Eigen::Index n = a.rows();
  DenseMatrix c(n, n * b.cols());
  // Block i is divided by |A|^i |B|, which keeps the blocks comparable when
  // the coefficients are uniformly rescaled.
  const double a_norm = a.norm();
  const double b_norm = b.norm();
  if (b_norm == 0.0) return 0;
  DenseMatrix block = b / b_norm;
  for (Eigen::Index i = 0; i < n; ++i) {
    c.middleCols(i * b.cols(), b.cols()) = block;
    if (a_norm == 0.0) {
      block.setZero();
    } else {
      block = a * block / a_norm;
    }
  }
  return NumericalRank(c, tol);
}

}  // namespace polyctrl::oracle
