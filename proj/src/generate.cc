#include "polyctrl/generate.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace polyctrl {
namespace {

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementations so seeds reproduce everywhere.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

int Between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(Below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over a mix of both inputs
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SparsityPattern RandomPattern(const PatternShape& shape, std::uint64_t seed) {
  if (shape.dim < 1 || shape.order < 2 || shape.inputs < 1 ||
      shape.tensor_entries < 0) {
    throw std::invalid_argument("invalid pattern shape");
  }
  std::mt19937_64 rng(seed);
  SparsityPattern pattern;
  pattern.order = shape.order;
  pattern.dim = shape.dim;
  pattern.inputs = shape.inputs;

  double cells = 1.0;
  for (int i = 0; i < shape.order; ++i) cells *= shape.dim;
  const auto wanted = static_cast<std::size_t>(
      std::min<double>(shape.tensor_entries, cells));
  while (pattern.tensor_support.size() < wanted) {
    MultiIndex index(shape.order);
    for (int& i : index) i = Between(rng, 0, shape.dim - 1);
    pattern.tensor_support.insert(std::move(index));
  }

  for (int j = 0; j < shape.inputs; ++j) {
    const int anchor = Between(rng, 0, shape.dim - 1);
    for (int i = 0; i < shape.dim; ++i) {
      const bool extra = Unit(rng) < shape.extra_control_density;
      if (i == anchor || extra) pattern.control_support.emplace(i, j);
    }
  }
  return pattern;
}

SparsityPattern RandomPatternFrom(const PatternFamily& family,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PatternShape shape;
  shape.order = family.order;
  shape.dim = Between(rng, 1, family.max_dim);
  shape.inputs = Between(rng, 1, family.max_inputs);
  shape.tensor_entries = Between(rng, 0, family.max_entries);
  return RandomPattern(shape, rng());
}

DirectedHypergraph RandomHypergraph(int system_vertices, int control_vertices,
                                    int edges, int tail_size,
                                    std::uint64_t seed) {
  if (system_vertices < 1 || control_vertices < 0 || edges < 0 ||
      tail_size < 1) {
    throw std::invalid_argument("invalid random hypergraph shape");
  }
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> tails;
  std::vector<Hyperedge> out;
  // Bounded retries: small vertex counts admit few distinct tails.
  for (int attempt = 0; attempt < 8 * edges + 8 &&
                        static_cast<int>(out.size()) < edges;
       ++attempt) {
    std::vector<int> tail;
    if (control_vertices > 0 && Below(rng, 4) == 0) {
      tail.push_back(system_vertices + Between(rng, 0, control_vertices - 1));
    } else {
      for (int i = 0; i < tail_size; ++i) {
        tail.push_back(Between(rng, 0, system_vertices - 1));
      }
      std::sort(tail.begin(), tail.end());
    }
    if (!tails.insert(tail).second) continue;
    std::vector<int> head;
    head.push_back(Between(rng, 0, system_vertices - 1));
    for (int v = 0; v < system_vertices; ++v) {
      if (v != head.front() && Unit(rng) < 0.2) head.push_back(v);
    }
    out.push_back({std::move(tail), std::move(head)});
  }
  return DirectedHypergraph(system_vertices, control_vertices, std::move(out));
}

}  // namespace polyctrl
