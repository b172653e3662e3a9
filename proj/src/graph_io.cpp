#include "rdisc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "rdisc/error.hpp"

namespace rdisc {

namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Whitespace-separated non-negative integers; false on anything else.
bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  line = trim(line);
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || value < 0) return false;
    i = static_cast<size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

[[noreturn]] void line_error(size_t line, const std::string& what) {
  fail(ErrorKind::Format, "line " + std::to_string(line) + ": " + what);
}

// Non-empty lines with their 1-based line numbers.
std::vector<std::pair<size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<size_t, std::string_view>> out;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) out.emplace_back(i + 1, lines[i]);
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorKind::Format, "graph6: empty input at byte 0");
  for (size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      fail(ErrorKind::Format, "graph6: byte " + std::to_string(i) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > Graph::kMaxOrder) {
    fail(ErrorKind::Format, "graph6: byte 0 announces a long form (n > 62), unsupported");
  }
  const size_t bits = static_cast<size_t>(n) * static_cast<size_t>(n > 0 ? n - 1 : 0) / 2;
  const size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    fail(ErrorKind::Format, "graph6: expected " + std::to_string(expected) + " bytes for n=" +
                                std::to_string(n) + ", got " + std::to_string(text.size()) +
                                " (mismatch at byte " +
                                std::to_string(std::min(text.size(), expected)) + ")");
  }
  std::vector<Edge> edges;
  size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int group = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
      if (group & (1 << (5 - static_cast<int>(k % 6)))) edges.push_back({i, j});
    }
  }
  for (; k % 6 != 0; ++k) {
    int group = static_cast<unsigned char>(text[1 + k / 6]) - kOffset;
    if (group & (1 << (5 - static_cast<int>(k % 6)))) {
      fail(ErrorKind::Format, "graph6: non-zero padding in byte " + std::to_string(1 + k / 6));
    }
  }
  return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > Graph::kMaxOrder) fail(ErrorKind::Size, "graph6 long form (n > 62) unsupported");
  std::string out(1, static_cast<char>(n + kOffset));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kOffset));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
  return out;
}

Graph read_edge_list(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::Format, "line 1: missing \"n m\" header");
  std::vector<long> nums;
  if (!parse_ints(lines[0].second, nums) || nums.size() != 2) {
    line_error(lines[0].first, "expected header \"n m\"");
  }
  const long n = nums[0];
  const long m = nums[1];
  if (n > Graph::kMaxOrder) line_error(lines[0].first, "order exceeds cap of 62");
  if (static_cast<long>(lines.size()) - 1 != m) {
    line_error(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto [lineno, line] = lines[i];
    if (!parse_ints(line, nums) || nums.size() != 2) line_error(lineno, "expected \"u v\"");
    if (nums[0] >= n || nums[1] >= n) line_error(lineno, "vertex out of range");
    if (nums[0] == nums[1]) line_error(lineno, "self-loop");
    Edge e{static_cast<int>(std::min(nums[0], nums[1])), static_cast<int>(std::max(nums[0], nums[1]))};
    if (!seen.insert(e).second) line_error(lineno, "duplicate edge");
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::Format, "empty input");
  std::vector<long> nums;
  if (parse_ints(lines[0].second, nums) && nums.size() == 2) return read_edge_list(text);
  return parse_graph6(lines[0].second);
}

std::string write_coloring(const Graph& g, const EdgeColoring& c) {
  if (!covers(g, c)) fail(ErrorKind::Parameter, "coloring does not cover the graph");
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << ' ' << c.palette() << '\n';
  for (int i = 0; i < g.size(); ++i) {
    out << g.edge(i).u << ' ' << g.edge(i).v << ' ' << c.colors[static_cast<size_t>(i)] << '\n';
  }
  return out.str();
}

EdgeColoring read_coloring(const Graph& g, std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::Format, "line 1: missing \"n m k\" header");
  std::vector<long> nums;
  if (!parse_ints(lines[0].second, nums) || nums.size() != 3) {
    line_error(lines[0].first, "expected header \"n m k\"");
  }
  if (nums[0] != g.order() || nums[1] != g.size()) {
    line_error(lines[0].first, "coloring is for n=" + std::to_string(nums[0]) + " m=" +
                                   std::to_string(nums[1]) + ", graph has n=" +
                                   std::to_string(g.order()) + " m=" + std::to_string(g.size()));
  }
  const long k = nums[2];
  if (static_cast<long>(lines.size()) - 1 != g.size()) {
    line_error(lines.back().first, "expected " + std::to_string(g.size()) + " edge lines");
  }
  EdgeColoring c;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto [lineno, line] = lines[i];
    if (!parse_ints(line, nums) || nums.size() != 3) line_error(lineno, "expected \"u v c\"");
    const Edge& e = g.edge(static_cast<int>(i - 1));
    if (nums[0] != e.u || nums[1] != e.v) {
      line_error(lineno, "edge out of canonical order, expected " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
    }
    if (nums[2] < 1 || nums[2] > k) line_error(lineno, "color outside 1..k");
    c.colors.push_back(static_cast<int>(nums[2]));
  }
  return c;
}

}  // namespace rdisc
