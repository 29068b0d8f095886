#include "dagcode/formats.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace dagcode {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw FormatError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Label parse_label(std::string_view token, std::size_t n, std::size_t line) {
  const std::size_t value = parse_count(token, line);
  if (value < 1 || value > n) {
    throw FormatError(line, "label " + std::string(token) + " is outside 1.." + std::to_string(n));
  }
  return static_cast<Label>(value);
}

std::vector<std::string_view> expect_tokens(std::string_view line, std::size_t count, std::size_t line_no) {
  auto tokens = split_tokens(line);
  if (tokens.size() != count) {
    throw FormatError(line_no, "expected " + std::to_string(count) + " fields, got " + std::to_string(tokens.size()));
  }
  return tokens;
}

void expect_line_count(const std::vector<std::string_view>& lines, std::size_t expected) {
  if (lines.size() < expected) {
    throw FormatError(lines.size() + 1, "input ends early: expected " + std::to_string(expected) + " lines, got " +
                                            std::to_string(lines.size()));
  }
  if (lines.size() > expected) {
    throw FormatError(expected + 1, "unexpected content after the last expected line");
  }
}

// Vertex counts beyond this are rejected up front; labels are 32-bit.
constexpr std::size_t kMaxVertices = std::numeric_limits<Label>::max();

std::size_t parse_vertex_count(std::string_view token) {
  const std::size_t n = parse_count(token, 1);
  if (n == 0) throw FormatError(1, "vertex count must be at least 1");
  if (n > kMaxVertices) throw FormatError(1, "vertex count too large");
  return n;
}

// Edge pairs "u v" on lines [first, first + count).
std::vector<Edge> parse_edge_lines(const std::vector<std::string_view>& lines, std::size_t first, std::size_t count,
                                   std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(count);
  for (std::size_t i = first; i < first + count; ++i) {
    const auto tokens = expect_tokens(lines[i], 2, i + 1);
    edges.emplace_back(parse_label(tokens[0], n, i + 1), parse_label(tokens[1], n, i + 1));
  }
  return edges;
}

}  // namespace

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

// -----------------------------------------------------------------------------
// Parsing
// -----------------------------------------------------------------------------

DagInput parse_dag_input(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(0, "empty input");

  const auto header = expect_tokens(lines[0], 2, 1);
  DagInput input;
  input.n = parse_vertex_count(header[0]);
  const std::size_t m = parse_count(header[1], 1);
  expect_line_count(lines, m + 1);

  input.edges = parse_edge_lines(lines, 1, m, input.n);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < input.edges.size(); ++i) {
    const auto [u, v] = input.edges[i];
    if (u == v) throw FormatError(i + 2, "self-loop on vertex " + std::to_string(u));
    if (!seen.insert(input.edges[i]).second) {
      throw FormatError(i + 2, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return input;
}

LabeledDag parse_dag_file(std::string_view text) {
  const DagInput input = parse_dag_input(text);
  return LabeledDag::make(input.n, input.edges);
}

SetSequence parse_seq_file(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(0, "empty input");

  const std::size_t n = parse_vertex_count(expect_tokens(lines[0], 1, 1)[0]);
  expect_line_count(lines, n);

  std::vector<LabelSet> sets;
  sets.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    LabelSet set;
    for (auto token : split_tokens(lines[i])) {
      const Label x = parse_label(token, n, i + 1);
      if (!set.empty() && x <= set.back()) {
        throw FormatError(i + 1, "set elements must be strictly ascending");
      }
      set.push_back(x);
    }
    sets.push_back(std::move(set));
  }
  return SetSequence::make(n, std::move(sets));
}

LabeledTree parse_tree_file(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError(0, "empty input");

  const std::size_t n = parse_vertex_count(expect_tokens(lines[0], 1, 1)[0]);
  expect_line_count(lines, n);
  return LabeledTree::make(n, parse_edge_lines(lines, 1, n - 1, n));
}

// -----------------------------------------------------------------------------
// Serialization
// -----------------------------------------------------------------------------

std::string to_dag_file(const LabeledDag& g) {
  std::ostringstream os;
  os << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_seq_file(const SetSequence& s) {
  std::ostringstream os;
  os << s.size() << '\n';
  for (const auto& set : s.sets()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) os << ' ';
      os << set[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_tree_file(const LabeledTree& t) {
  std::ostringstream os;
  os << t.size() << '\n';
  for (const auto& [u, v] : t.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace dagcode
