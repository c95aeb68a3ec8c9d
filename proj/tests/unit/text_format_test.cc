#include "polyctrl/text_format.h"

#include <gtest/gtest.h>

#include "polyctrl/error.h"
#include "polyctrl/generate.h"
#include "systems.h"

namespace polyctrl {
namespace {

void ExpectParseError(std::string_view text, std::size_t line,
                      std::size_t column) {
  try {
    ParseInput(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.message();
    EXPECT_EQ(e.column(), column) << e.message();
  }
}

TEST(ParseInput, CubeSystem) {
  const ParsedInput in = ParseInput("tensor 4 2\n1 1 1 2 1.0\nmatrix 2 1\n1 1 1.0");
  ASSERT_EQ(in.kind, ParsedInput::Kind::kSystem);
  const Polysystem cube = testing::Cube();
  EXPECT_EQ(in.system->tensor, cube.tensor);
  EXPECT_EQ(in.system->control, cube.control);
  EXPECT_EQ(*in.pattern, SparsityPatternOf(cube));
  EXPECT_EQ(*in.hypergraph, BuildHypergraph(SparsityPatternOf(cube)));
}

TEST(ParseInput, PatternWithComments) {
  const ParsedInput in = ParseInput(
      "# cube pattern\n"
      "tensor 4 2\n"
      "1 1 1 2   # x1^3 drives x2\n"
      "\n"
      "matrix 2 1\n"
      "1 1\n");
  ASSERT_EQ(in.kind, ParsedInput::Kind::kPattern);
  EXPECT_FALSE(in.system.has_value());
  EXPECT_EQ(*in.pattern, SparsityPatternOf(testing::Cube()));
}

TEST(ParseInput, Hypergraph) {
  const ParsedInput in = ParseInput("hypergraph 2 1\n3 -> 1,2\n");
  ASSERT_EQ(in.kind, ParsedInput::Kind::kHypergraph);
  EXPECT_EQ(in.hypergraph->edges(), (std::vector<Hyperedge>{{{2}, {0, 1}}}));
}

TEST(ParseInput, Errors) {
  ExpectParseError("tensor 3 2\n1 2 1 5\nmatrix 2 1\n1 1 1\n", 1, 8);
  ExpectParseError("tensor 4 2\n1 1 1 3 1.0\nmatrix 2 1\n1 1 1.0\n", 2, 7);
  ExpectParseError("tensor 4 2\n1 1 1 2 1.0\n1 1 1 2 2.0\nmatrix 2 1\n1 1 1\n",
                   3, 1);
  ExpectParseError("tensor 4 2\n1 1 1 2 0.0\nmatrix 2 1\n1 1 1\n", 2, 9);
  ExpectParseError("tensor 4 2\n1 1 1 2 1.0\nmatrix 3 1\n1 1 1\n", 3, 8);
  ExpectParseError("tensor 4 2\n1 1 1 2\n", 0, 0);
  ExpectParseError("tensor 4 2\n1 1 1 2 1.0\nmatrix 2 1\n1 1\n", 4, 3);
  ExpectParseError("hypergraph 2 1\n1 -> 3\n", 2, 5);
  ExpectParseError("", 0, 0);
}

TEST(Format, RoundTripsRandomSystems) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const SparsityPattern p = RandomPatternFrom({}, DeriveSeed(61, i));
    const Polysystem s = SampleRealization(p, i);
    const ParsedInput system = ParseInput(FormatSystem(s));
    ASSERT_TRUE(system.system.has_value());
    EXPECT_EQ(system.system->tensor, s.tensor);
    EXPECT_EQ(system.system->control, s.control);
    const ParsedInput pattern = ParseInput(FormatPattern(p));
    EXPECT_EQ(*pattern.pattern, p);
    const DirectedHypergraph h = BuildHypergraph(p);
    EXPECT_EQ(*ParseInput(FormatHypergraph(h)).hypergraph, h);
  }
}

}  // namespace
}  // namespace polyctrl
