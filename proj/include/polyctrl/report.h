#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "polyctrl/crosscheck.h"
#include "polyctrl/lie.h"
#include "polyctrl/numeric.h"
#include "polyctrl/structural.h"
#include "polyctrl/text_format.h"

namespace polyctrl {

using Json = nlohmann::ordered_json;

// Bumped whenever a field changes meaning or disappears.
inline constexpr const char* kReportVersion = "polyctrl-report/1";

// All vertex and hyperedge ids in reports are 1-based.
Json SystemJson(const ParsedInput& input);
Json DilationJson(const DilationResult& dilation);
Json AccessJson(const DirectedHypergraph& graph,
                const std::vector<int>& accessible);
Json StructuralJson(const StructuralVerdict& verdict);
Json RankJson(const RankReport& report, std::optional<std::uint64_t> seed);
Json LieJson(const oracle::LieRankResult& result,
             std::optional<std::uint64_t> seed);
Json CrossCheckJson(const CrossCheckOutcome& outcome);

// Header shared by every report: version and command name.
Json ReportHeader(const std::string& command);

// Human-readable rendering of a report produced by this module.
std::string RenderText(const Json& report);

}  // namespace polyctrl
