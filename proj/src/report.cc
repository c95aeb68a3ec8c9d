#include "polyctrl/report.h"

#include <sstream>

namespace polyctrl {
namespace {

Json OneBased(const std::vector<int>& vertices) {
  Json out = Json::array();
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

const char* KindName(ParsedInput::Kind kind) {
  switch (kind) {
    case ParsedInput::Kind::kSystem:
      return "system";
    case ParsedInput::Kind::kPattern:
      return "pattern";
    case ParsedInput::Kind::kHypergraph:
      return "hypergraph";
  }
  return "unknown";
}

void RenderValue(std::ostringstream& os, const std::string& key,
                 const Json& value, int indent) {
  const std::string pad(indent * 2, ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) RenderValue(os, k, v, indent + 1);
    return;
  }
  os << pad << key << ": ";
  if (value.is_array()) {
    // Arrays of scalars or pairs print inline.
    os << value.dump() << "\n";
  } else if (value.is_string()) {
    os << value.get<std::string>() << "\n";
  } else if (value.is_boolean()) {
    os << (value.get<bool>() ? "yes" : "no") << "\n";
  } else {
    os << value.dump() << "\n";
  }
}

}  // namespace

Json ReportHeader(const std::string& command) {
  Json out;
  out["version"] = kReportVersion;
  out["command"] = command;
  return out;
}

Json SystemJson(const ParsedInput& input) {
  Json out;
  out["input"] = KindName(input.kind);
  const DirectedHypergraph& graph = *input.hypergraph;
  out["n"] = graph.system_vertices();
  out["m"] = graph.control_vertices();
  if (input.pattern) {
    out["k"] = input.pattern->order;
    out["tensor_support"] = input.pattern->tensor_support.size();
    out["control_support"] = input.pattern->control_support.size();
  }
  out["hyperedges"] = graph.edges().size();
  return out;
}

Json DilationJson(const DilationResult& dilation) {
  Json out;
  out["dilated"] = dilation.dilated;
  out["dilation_witness"] =
      dilation.witness ? OneBased(*dilation.witness) : Json(nullptr);
  out["matching_size"] = dilation.matching.size();
  Json pairs = Json::array();
  for (const auto& [e, v] : dilation.matching) pairs.push_back({e + 1, v + 1});
  out["matching"] = std::move(pairs);
  return out;
}

Json AccessJson(const DirectedHypergraph& graph,
                const std::vector<int>& accessible) {
  Json out;
  std::vector<char> reached(graph.vertex_count(), 0);
  for (int v : accessible) reached[v] = 1;
  std::vector<int> inaccessible;
  for (int v = 0; v < graph.system_vertices(); ++v) {
    if (!reached[v]) inaccessible.push_back(v);
  }
  out["all_accessible"] = inaccessible.empty();
  out["accessible"] = OneBased(accessible);
  out["inaccessible"] = OneBased(inaccessible);
  return out;
}

Json StructuralJson(const StructuralVerdict& verdict) {
  Json out;
  out["controllable"] = verdict.controllable;
  out["dilated"] = verdict.dilation_witness.has_value();
  out["dilation_witness"] = verdict.dilation_witness
                                ? OneBased(*verdict.dilation_witness)
                                : Json(nullptr);
  out["inaccessible"] = OneBased(verdict.inaccessible);
  Json pairs = Json::array();
  for (const auto& [e, v] : verdict.matching) pairs.push_back({e + 1, v + 1});
  out["matching"] = std::move(pairs);
  return out;
}

Json RankJson(const RankReport& report, std::optional<std::uint64_t> seed) {
  Json out;
  out["rank"] = report.rank;
  out["n"] = report.n;
  out["strongly_controllable"] = report.strongly_controllable;
  out["iterations"] = report.iterations;
  out["tolerance"] = report.tolerance;
  out["sampled_seed"] = seed ? Json(*seed) : Json(nullptr);
  return out;
}

Json LieJson(const oracle::LieRankResult& result,
             std::optional<std::uint64_t> seed) {
  Json out;
  out["rank"] = result.rank;
  out["saturated"] = result.saturated;
  out["basis_size"] = result.basis_size;
  out["depth"] = result.depth;
  out["sampled_seed"] = seed ? Json(*seed) : Json(nullptr);
  return out;
}

Json CrossCheckJson(const CrossCheckOutcome& outcome) {
  Json out;
  out["n"] = outcome.dim;
  out["structurally_controllable"] = outcome.structurally_controllable;
  out["ranks"] = outcome.ranks;
  out["agrees"] = outcome.agrees;
  return out;
}

std::string RenderText(const Json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (key == "version") continue;
    if (key == "trials" && value.is_array()) {
      os << "trials:\n";
      for (const Json& t : value) os << "  " << t.dump() << "\n";
      continue;
    }
    RenderValue(os, key, value, 0);
  }
  return os.str();
}

}  // namespace polyctrl
