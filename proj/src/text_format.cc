#include "polyctrl/text_format.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyctrl/error.h"

namespace polyctrl {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view text;
  std::vector<Token> tokens;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '\r')) {
      ++i;
    }
    if (i == text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\r') {
      ++i;
    }
    out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view body = text.substr(pos, end - pos);
    const std::size_t hash = body.find('#');
    if (hash != std::string_view::npos) body = body.substr(0, hash);
    Line line{number, body, Tokenize(body)};
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

long ParseInt(const Line& line, const Token& token, const char* what) {
  long value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected an integer " + std::string(what) + ", got '" +
                         std::string(token.text) + "'",
                     line.number, token.column);
  }
  return value;
}

double ParseValue(const Line& line, const Token& token) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a coefficient, got '" +
                         std::string(token.text) + "'",
                     line.number, token.column);
  }
  if (value == 0.0) {
    throw ParseError("coefficient is exactly zero", line.number, token.column);
  }
  return value;
}

int ParseIndex(const Line& line, const Token& token, long upper) {
  const long i = ParseInt(line, token, "index");
  if (i < 1 || i > upper) {
    throw ParseError("index " + std::to_string(i) + " out of range [1, " +
                         std::to_string(upper) + "]",
                     line.number, token.column);
  }
  return static_cast<int>(i - 1);
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

struct Header {
  long first;
  long second;
};

Header ParseHeader(const Line& line, const char* name, long min_first,
                   long min_second) {
  if (line.tokens.size() != 3) {
    throw ParseError(std::string("header '") + name + "' takes two integers",
                     line.number, line.tokens.front().column);
  }
  Header h{ParseInt(line, line.tokens[1], "size"),
           ParseInt(line, line.tokens[2], "size")};
  if (h.first < min_first) {
    throw ParseError("size " + std::to_string(h.first) + " below " +
                         std::to_string(min_first),
                     line.number, line.tokens[1].column);
  }
  if (h.second < min_second) {
    throw ParseError("size " + std::to_string(h.second) + " below " +
                         std::to_string(min_second),
                     line.number, line.tokens[2].column);
  }
  constexpr long kMaxSize = 1 << 20;
  if (h.first > kMaxSize || h.second > kMaxSize) {
    throw ParseError("size exceeds " + std::to_string(kMaxSize), line.number,
                     line.tokens[1].column);
  }
  return h;
}

std::vector<int> ParseVertexList(const Line& line, std::string_view part,
                                 std::size_t offset, long upper) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= part.size()) {
    std::size_t comma = part.find(',', pos);
    if (comma == std::string_view::npos) comma = part.size();
    std::string_view item = part.substr(pos, comma - pos);
    std::vector<Token> tokens = Tokenize(item);
    const std::size_t column = offset + pos + 1;
    if (tokens.size() != 1) {
      throw ParseError("expected one vertex between commas", line.number,
                       column);
    }
    tokens[0].column += offset + pos;
    out.push_back(ParseIndex(line, tokens[0], upper));
    if (comma == part.size()) break;
    pos = comma + 1;
  }
  return out;
}

ParsedInput ParseHypergraph(const std::vector<Line>& lines) {
  const Line& head = lines.front();
  const Header h = ParseHeader(head, "hypergraph", 0, 0);
  const long total = h.first + h.second;
  std::vector<Hyperedge> edges;
  std::set<std::vector<int>> seen_tails;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::size_t arrow = line.text.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("expected 'tail -> head'", line.number,
                       line.tokens.front().column);
    }
    Hyperedge e;
    e.tail = ParseVertexList(line, line.text.substr(0, arrow), 0, total);
    e.head = ParseVertexList(line, line.text.substr(arrow + 2), arrow + 2,
                             total);
    for (int v : e.head) {
      if (v >= h.first) {
        throw ParseError("control vertex " + std::to_string(v + 1) +
                             " in a hyperedge head",
                         line.number, arrow + 3);
      }
    }
    std::vector<int> sorted = e.tail;
    std::sort(sorted.begin(), sorted.end());
    if (!seen_tails.insert(sorted).second) {
      throw ParseError("duplicate hyperedge tail", line.number,
                       line.tokens.front().column);
    }
    edges.push_back(std::move(e));
  }
  ParsedInput out;
  out.kind = ParsedInput::Kind::kHypergraph;
  out.hypergraph.emplace(static_cast<int>(h.first), static_cast<int>(h.second),
                         std::move(edges));
  return out;
}

}  // namespace

ParsedInput ParseInput(std::string_view text) {
  const std::vector<Line> lines = SplitLines(text);
  if (lines.empty()) throw ParseError("empty input", 0, 0);
  if (lines.front().tokens.front().text == "hypergraph") {
    return ParseHypergraph(lines);
  }

  enum class Section { kNone, kTensor, kMatrix };
  Section section = Section::kNone;
  std::optional<Header> tensor_header;
  std::optional<Header> matrix_header;
  std::size_t matrix_line = 0;
  std::map<MultiIndex, std::optional<double>> tensor_entries;
  std::map<std::pair<int, int>, std::optional<double>> matrix_entries;
  std::optional<bool> with_values;

  auto note_value_style = [&](const Line& line, bool has_value) {
    if (!with_values) {
      with_values = has_value;
    } else if (*with_values != has_value) {
      throw ParseError(
          "entries must either all carry values or all omit them",
          line.number, line.tokens.back().column);
    }
  };

  for (const Line& line : lines) {
    const std::string_view first = line.tokens.front().text;
    if (first == "tensor") {
      if (tensor_header) {
        throw ParseError("second tensor section", line.number, 1);
      }
      tensor_header = ParseHeader(line, "tensor", 2, 1);
      if (tensor_header->first % 2 != 0) {
        throw ParseError("tensor order " + std::to_string(tensor_header->first) +
                             " is odd; the polynomial degree must be odd",
                         line.number, line.tokens[1].column);
      }
      section = Section::kTensor;
      continue;
    }
    if (first == "matrix") {
      if (matrix_header) {
        throw ParseError("second matrix section", line.number, 1);
      }
      matrix_header = ParseHeader(line, "matrix", 1, 1);
      matrix_line = line.number;
      section = Section::kMatrix;
      continue;
    }
    if (first == "hypergraph") {
      throw ParseError("'hypergraph' must be the first header", line.number, 1);
    }
    if (section == Section::kNone) {
      throw ParseError("entry before any 'tensor' or 'matrix' header",
                       line.number, line.tokens.front().column);
    }
    if (section == Section::kTensor) {
      const auto k = static_cast<std::size_t>(tensor_header->first);
      if (line.tokens.size() != k && line.tokens.size() != k + 1) {
        throw ParseError("tensor entry needs " + std::to_string(k) +
                             " indices and an optional value",
                         line.number, line.tokens.front().column);
      }
      MultiIndex index;
      for (std::size_t i = 0; i < k; ++i) {
        index.push_back(ParseIndex(line, line.tokens[i], tensor_header->second));
      }
      const bool has_value = line.tokens.size() == k + 1;
      note_value_style(line, has_value);
      std::optional<double> value;
      if (has_value) value = ParseValue(line, line.tokens[k]);
      if (!tensor_entries.emplace(std::move(index), value).second) {
        throw ParseError("duplicate tensor entry", line.number,
                         line.tokens.front().column);
      }
    } else {
      if (line.tokens.size() != 2 && line.tokens.size() != 3) {
        throw ParseError("matrix entry needs row, column and optional value",
                         line.number, line.tokens.front().column);
      }
      const int row = ParseIndex(line, line.tokens[0], matrix_header->first);
      const int col = ParseIndex(line, line.tokens[1], matrix_header->second);
      const bool has_value = line.tokens.size() == 3;
      note_value_style(line, has_value);
      std::optional<double> value;
      if (has_value) value = ParseValue(line, line.tokens[2]);
      if (!matrix_entries.emplace(std::make_pair(row, col), value).second) {
        throw ParseError("duplicate matrix entry", line.number,
                         line.tokens.front().column);
      }
    }
  }
  if (!tensor_header) throw ParseError("missing 'tensor' section", 0, 0);
  if (!matrix_header) throw ParseError("missing 'matrix' section", 0, 0);
  if (matrix_header->first != tensor_header->second) {
    throw ParseError("matrix has " + std::to_string(matrix_header->first) +
                         " rows but the tensor dimension is " +
                         std::to_string(tensor_header->second),
                     matrix_line, 8);
  }

  SparsityPattern pattern;
  pattern.order = static_cast<int>(tensor_header->first);
  pattern.dim = static_cast<int>(tensor_header->second);
  pattern.inputs = static_cast<int>(matrix_header->second);
  for (const auto& [index, value] : tensor_entries) {
    pattern.tensor_support.insert(index);
  }
  for (const auto& [rc, value] : matrix_entries) {
    pattern.control_support.insert(rc);
  }

  ParsedInput out;
  if (with_values.value_or(false)) {
    std::vector<std::pair<MultiIndex, double>> entries;
    for (const auto& [index, value] : tensor_entries) {
      entries.emplace_back(index, *value);
    }
    DenseMatrix control = DenseMatrix::Zero(pattern.dim, pattern.inputs);
    for (const auto& [rc, value] : matrix_entries) {
      control(rc.first, rc.second) = *value;
    }
    out.kind = ParsedInput::Kind::kSystem;
    out.system =
        Polysystem{SparseTensor(pattern.order, pattern.dim, entries), control};
  } else {
    out.kind = ParsedInput::Kind::kPattern;
  }
  out.hypergraph = BuildHypergraph(pattern);
  out.pattern = std::move(pattern);
  return out;
}

std::string FormatSystem(const Polysystem& system) {
  std::string out = "tensor " + std::to_string(system.order()) + " " +
                    std::to_string(system.dim()) + "\n";
  for (const auto& [index, value] : system.tensor.entries()) {
    for (int i : index) out += std::to_string(i + 1) + " ";
    out += FormatDouble(value) + "\n";
  }
  out += "matrix " + std::to_string(system.control.rows()) + " " +
         std::to_string(system.control.cols()) + "\n";
  for (Eigen::Index i = 0; i < system.control.rows(); ++i) {
    for (Eigen::Index j = 0; j < system.control.cols(); ++j) {
      if (system.control(i, j) == 0.0) continue;
      out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
             FormatDouble(system.control(i, j)) + "\n";
    }
  }
  return out;
}

std::string FormatPattern(const SparsityPattern& pattern) {
  std::string out = "tensor " + std::to_string(pattern.order) + " " +
                    std::to_string(pattern.dim) + "\n";
  for (const MultiIndex& index : pattern.tensor_support) {
    for (std::size_t i = 0; i < index.size(); ++i) {
      out += (i ? " " : "") + std::to_string(index[i] + 1);
    }
    out += "\n";
  }
  out += "matrix " + std::to_string(pattern.dim) + " " +
         std::to_string(pattern.inputs) + "\n";
  for (const auto& [row, col] : pattern.control_support) {
    out += std::to_string(row + 1) + " " + std::to_string(col + 1) + "\n";
  }
  return out;
}

std::string FormatHypergraph(const DirectedHypergraph& graph) {
  std::string out = "hypergraph " + std::to_string(graph.system_vertices()) +
                    " " + std::to_string(graph.control_vertices()) + "\n";
  auto list = [](const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      s += (i ? "," : "") + std::to_string(vs[i] + 1);
    }
    return s;
  };
  for (const Hyperedge& e : graph.edges()) {
    out += list(e.tail) + " -> " + list(e.head) + "\n";
  }
  return out;
}

}  // namespace polyctrl
