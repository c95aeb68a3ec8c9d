#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polyctrl/hypergraph.h"
#include "polyctrl/polysystem.h"

namespace polyctrl {

// Plain-text system description, 1-based and whitespace separated:
//
//   tensor <k> <n>
//   <i_1> ... <i_k> [value]
//   matrix <n> <m>
//   <row> <col> [value]
//
// Values are either given on every entry (a realization) or on none (a
// pattern). '#' starts a comment. Alternatively a hypergraph can be given
// directly:
//
//   hypergraph <n> <m>
//   <t_1>,<t_2>,... -> <h_1>,<h_2>,...
//
// with vertices n+1..n+m being the control vertices.
struct ParsedInput {
  enum class Kind { kSystem, kPattern, kHypergraph };

  Kind kind = Kind::kPattern;
  std::optional<Polysystem> system;           // kSystem
  std::optional<SparsityPattern> pattern;     // kSystem and kPattern
  std::optional<DirectedHypergraph> hypergraph;  // always
};

// Throws ParseError with the line and column of the first problem.
ParsedInput ParseInput(std::string_view text);

std::string FormatSystem(const Polysystem& system);
std::string FormatPattern(const SparsityPattern& pattern);
std::string FormatHypergraph(const DirectedHypergraph& graph);

}  // namespace polyctrl
