#include "polyctrl/cli.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "polyctrl/crosscheck.h"
#include "polyctrl/error.h"
#include "polyctrl/generate.h"
#include "polyctrl/lie.h"
#include "polyctrl/numeric.h"
#include "polyctrl/report.h"
#include "polyctrl/structural.h"
#include "polyctrl/text_format.h"

namespace polyctrl::cli {
namespace {

struct Options {
  std::string input = "-";
  bool json = false;
  bool numeric = false;
  bool timings = false;
  bool values = false;
  double tol = 0.0;
  std::uint64_t seed = 1;
  std::int64_t cap = kDefaultCapacity;
  int trials = 20;
  int depth = 0;
  int n = 3;
  int k = 4;
  int m = 1;
  int support = -1;
  double scale = 1.0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

// Realization for numeric commands: the given values, or a seeded sample when
// the input carries only a pattern.
Polysystem RealizationOf(const ParsedInput& input, std::uint64_t seed,
                         std::optional<std::uint64_t>& sampled_seed) {
  if (input.kind == ParsedInput::Kind::kHypergraph) {
    throw InputError("numeric tests need a tensor/matrix system, not a "
                     "hypergraph");
  }
  if (input.system) return *input.system;
  sampled_seed = seed;
  return SampleRealization(*input.pattern, seed);
}

Json Analyze(const Options& o, const ParsedInput& input) {
  Stopwatch clock;
  Json timings;
  Json report = ReportHeader("analyze");
  report["system"] = SystemJson(input);
  report["structural"] = StructuralJson(DecideStructural(*input.hypergraph));
  timings["structural"] = clock.Lap();
  if (o.numeric) {
    std::optional<std::uint64_t> sampled;
    const Polysystem system = RealizationOf(input, o.seed, sampled);
    report["numeric"] =
        RankJson(StrongControllability(system, o.tol, o.cap), sampled);
    timings["numeric"] = clock.Lap();
  }
  if (o.timings) report["timings_ms"] = std::move(timings);
  return report;
}

Json Validate(const Options& o) {
  if (o.trials < 0) throw InputError("--trials must be >= 0");
  if (o.n < 1 || o.m < 1 || o.k < 2 || o.k % 2 != 0) {
    throw InputError("validate needs --n >= 1, --m >= 1 and even --k");
  }
  PatternFamily family;
  family.max_dim = o.n;
  family.order = o.k;
  family.max_inputs = o.m;
  family.max_entries = o.support >= 0 ? o.support : o.n + 2;

  Json report = ReportHeader("validate");
  Json trials = Json::array();
  int agreements = 0;
  int controllable = 0;
  // Trials are keyed by index; each derives its own seeds.
  for (int t = 0; t < o.trials; ++t) {
    const SparsityPattern pattern =
        RandomPatternFrom(family, DeriveSeed(o.seed, 2 * t));
    const CrossCheckOutcome outcome = CrossCheckPattern(
        pattern, DeriveSeed(o.seed, 2 * t + 1), o.tol, o.scale);
    agreements += outcome.agrees ? 1 : 0;
    controllable += outcome.structurally_controllable ? 1 : 0;
    Json entry;
    entry["trial"] = t;
    entry["m"] = pattern.inputs;
    entry["tensor_support"] = pattern.tensor_support.size();
    const Json check = CrossCheckJson(outcome);
    for (const auto& [key, value] : check.items()) entry[key] = value;
    trials.push_back(std::move(entry));
  }
  Json summary;
  summary["trials"] = o.trials;
  summary["structurally_controllable"] = controllable;
  summary["agreements"] = agreements;
  summary["disagreements"] = o.trials - agreements;
  report["summary"] = std::move(summary);
  report["trials"] = std::move(trials);
  return report;
}

std::string Generate(const Options& o) {
  if (o.n < 1 || o.m < 1 || o.k < 2) {
    throw InputError("gen needs --n >= 1, --m >= 1, --k >= 2");
  }
  if (o.k % 2 != 0) throw InputError("--k must be even");
  PatternShape shape;
  shape.dim = o.n;
  shape.order = o.k;
  shape.inputs = o.m;
  shape.tensor_entries = o.support >= 0 ? o.support : o.n + 1;
  const SparsityPattern pattern = RandomPattern(shape, o.seed);
  if (o.values) {
    return FormatSystem(SampleRealization(pattern, DeriveSeed(o.seed, 0)));
  }
  return FormatPattern(pattern);
}

void Emit(const Options& o, const Json& report, std::ostream& out) {
  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    out << RenderText(report);
  }
}

int Fail(const Options& o, std::ostream& err, int code, const std::string& kind,
         const std::string& message, std::size_t line = 0,
         std::size_t column = 0) {
  if (o.json) {
    Json e;
    e["version"] = kReportVersion;
    e["error"]["kind"] = kind;
    e["error"]["message"] = message;
    if (line > 0) {
      e["error"]["line"] = line;
      e["error"]["column"] = column;
    }
    err << e.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Structural and strong controllability of odd homogeneous "
               "polynomial control systems",
               "polyctrl"};
  app.require_subcommand(1);

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "system file, '-' for stdin")
        ->default_val("-");
  };
  auto with_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_option("--cap", o.cap, "capacity limit for dense intermediates")
        ->check(CLI::PositiveNumber);
  };
  auto with_numeric = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol,
                    "relative singular-value cutoff (0 = automatic)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "seed for sampled realizations");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structural verdict");
  with_input(analyze);
  with_common(analyze);
  with_numeric(analyze);
  analyze->add_flag("--numeric", o.numeric, "also run the SVD rank test");
  analyze->add_flag("--timings", o.timings, "include timings in the report");

  CLI::App* dilation = app.add_subcommand("dilation", "hyperedge dilation test");
  with_input(dilation);
  with_common(dilation);

  CLI::App* access = app.add_subcommand("access", "accessibility test");
  with_input(access);
  with_common(access);

  CLI::App* rank = app.add_subcommand("rank", "SVD-reduced controllability rank");
  with_input(rank);
  with_common(rank);
  with_numeric(rank);

  CLI::App* lie = app.add_subcommand("lie-rank", "Lie algebra rank at the origin");
  with_input(lie);
  with_common(lie);
  lie->add_option("--seed", o.seed, "seed for a sampled realization");
  lie->add_option("--depth", o.depth, "bracketing rounds (0 = automatic)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* validate =
      app.add_subcommand("validate", "structural vs numeric cross-validation");
  with_common(validate);
  with_numeric(validate);
  validate->add_option("--trials", o.trials, "number of random patterns");
  validate->add_option("--n", o.n, "maximum state dimension");
  validate->add_option("--k", o.k, "tensor order");
  validate->add_option("--m", o.m, "maximum input count");
  validate->add_option("--support", o.support, "maximum tensor support size");
  validate->add_option("--scale", o.scale, "multiply realizations by this")
      ->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("gen", "random sparsity pattern");
  gen->add_flag("--json", o.json, "emit errors as JSON");
  gen->add_option("--n", o.n, "state dimension");
  gen->add_option("--k", o.k, "tensor order");
  gen->add_option("--m", o.m, "input count");
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--support", o.support, "tensor support size");
  gen->add_flag("--values", o.values, "emit a sampled realization");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Fail(o, err, kExitInputError, "usage", e.what());
  }

  try {
    if (gen->parsed()) {
      out << Generate(o);
      return kExitOk;
    }
    if (validate->parsed()) {
      Emit(o, Validate(o), out);
      return kExitOk;
    }
    const ParsedInput input = ParseInput(ReadInput(o.input, in));
    if (analyze->parsed()) {
      Emit(o, Analyze(o, input), out);
    } else if (dilation->parsed()) {
      Json report = ReportHeader("dilation");
      report["system"] = SystemJson(input);
      report["dilation"] = DilationJson(DetectDilation(*input.hypergraph));
      Emit(o, report, out);
    } else if (access->parsed()) {
      Json report = ReportHeader("access");
      report["system"] = SystemJson(input);
      report["access"] =
          AccessJson(*input.hypergraph, AccessibleSet(*input.hypergraph));
      Emit(o, report, out);
    } else if (rank->parsed()) {
      std::optional<std::uint64_t> sampled;
      const Polysystem system = RealizationOf(input, o.seed, sampled);
      Json report = ReportHeader("rank");
      report["system"] = SystemJson(input);
      report["numeric"] =
          RankJson(StrongControllability(system, o.tol, o.cap), sampled);
      Emit(o, report, out);
    } else if (lie->parsed()) {
      std::optional<std::uint64_t> sampled;
      const Polysystem system = RealizationOf(input, o.seed, sampled);
      Json report = ReportHeader("lie-rank");
      report["system"] = SystemJson(input);
      report["lie"] =
          LieJson(oracle::LieAlgebraRankAtOrigin(system, o.depth), sampled);
      Emit(o, report, out);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    return Fail(o, err, kExitInputError, "parse", e.message(), e.line(),
                e.column());
  } catch (const CapacityError& e) {
    return Fail(o, err, kExitCapacity, "capacity", e.what());
  } catch (const InputError& e) {
    return Fail(o, err, kExitInputError, "input", e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(o, err, kExitInputError, "input", e.what());
  }
}

}  // namespace polyctrl::cli
