#include "polyctrl/cli.h"

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace polyctrl::cli {
namespace {

using nlohmann::json;

constexpr char kCube[] = "tensor 4 2\n1 1 1 2 1.0\nmatrix 2 1\n1 1 1.0\n";
constexpr char kDilated[] = "tensor 4 2\nmatrix 2 1\n1 1 1.0\n2 1 1.0\n";
constexpr char kCubePattern[] = "tensor 4 2\n1 1 1 2\nmatrix 2 1\n1 1\n";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, AnalyzeDilatedSystem) {
  const Outcome r = Invoke({"analyze", "--json", "-"}, kDilated);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["structural"]["controllable"], false);
  EXPECT_EQ(j["structural"]["dilation_witness"], json({1, 2}));
  EXPECT_FALSE(j.contains("numeric"));
}

TEST(Cli, AnalyzeNumericSamplesPatterns) {
  const Outcome r =
      Invoke({"analyze", "--json", "--numeric", "--seed", "9", "-"}, kCubePattern);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["structural"]["controllable"], true);
  EXPECT_EQ(j["numeric"]["rank"], 2);
  EXPECT_EQ(j["numeric"]["sampled_seed"], 9);
}

TEST(Cli, RankOfCube) {
  const Outcome r = Invoke({"rank", "--tol", "1e-10", "--json", "-"}, kCube);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["numeric"]["rank"], 2);
  EXPECT_EQ(j["numeric"]["strongly_controllable"], true);
  EXPECT_EQ(j["numeric"]["sampled_seed"], nullptr);
}

TEST(Cli, DilationAndAccess) {
  json j = json::parse(Invoke({"dilation", "--json", "-"}, kDilated).out);
  EXPECT_EQ(j["dilation"]["dilated"], true);
  EXPECT_EQ(j["dilation"]["matching_size"], 1);
  j = json::parse(Invoke({"access", "--json", "-"}, kCube).out);
  EXPECT_EQ(j["access"]["all_accessible"], true);
  EXPECT_EQ(j["access"]["inaccessible"], json::array());
}

TEST(Cli, LieRank) {
  const Outcome r = Invoke({"lie-rank", "--json", "-"}, kCube);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["lie"]["rank"], 2);
  EXPECT_EQ(j["lie"]["saturated"], true);
}

TEST(Cli, ValidateSummaryAddsUp) {
  const Outcome r = Invoke(
      {"validate", "--json", "--trials", "20", "--seed", "3", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["summary"]["trials"], 20);
  EXPECT_EQ(j["summary"]["agreements"].get<int>() +
                j["summary"]["disagreements"].get<int>(),
            20);
  EXPECT_EQ(j["trials"].size(), 20u);
}

TEST(Cli, GenOutputParsesBack) {
  const Outcome g = Invoke({"gen", "--n", "3", "--seed", "5", "--values"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  const Outcome r = Invoke({"rank", "--json", "-"}, g.out);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Invoke({"gen", "--n", "3", "--seed", "5", "--values"}).out, g.out);
  EXPECT_NE(Invoke({"gen", "--n", "3", "--seed", "6", "--values"}).out, g.out);
}

TEST(Cli, ReportsAreByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", "--json", "--numeric", "-"},
        std::vector<std::string>{"rank", "--json", "-"},
        std::vector<std::string>{"lie-rank", "--json", "-"}}) {
    EXPECT_EQ(Invoke(args, kCubePattern).out, Invoke(args, kCubePattern).out);
  }
  const std::vector<std::string> validate = {"validate", "--json", "--trials",
                                             "10", "--seed", "11"};
  EXPECT_EQ(Invoke(validate).out, Invoke(validate).out);
}

TEST(Cli, ParseErrorIsJsonOnStderr) {
  const Outcome r = Invoke({"analyze", "--json", "-"}, "tensor 3 2\n");
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_TRUE(r.out.empty());
  const json j = json::parse(r.err);
  EXPECT_EQ(j["error"]["kind"], "parse");
  EXPECT_EQ(j["error"]["line"], 1);
  EXPECT_EQ(j["error"]["column"], 8);
}

TEST(Cli, CapacityExitCode) {
  const Outcome r = Invoke({"rank", "--cap", "4", "--json", "-"}, kCube);
  EXPECT_EQ(r.code, kExitCapacity);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "capacity");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitInputError);
  EXPECT_EQ(Invoke({"rank", "--tol", "abc", "-"}, kCube).code, kExitInputError);
  EXPECT_EQ(Invoke({"analyze", "/nonexistent/file"}).code, kExitInputError);
}

TEST(Cli, PlainTextOutput) {
  const Outcome r = Invoke({"analyze", "-"}, kDilated);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("controllable: no"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace polyctrl::cli
