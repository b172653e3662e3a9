#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdisc/edge_coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

/// Connected graphs on n <= 7 vertices, one per isomorphism class, ordered
/// by canonical code.
///
/// The canonical code is the smallest graph6 bit string over all vertex
/// orders that list vertices by non-increasing degree; the set of such
/// orders depends only on the isomorphism class.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Canonical relabelling of g (n <= 10).
Graph canonical_form(const Graph& g);

enum class Outcome { Pass, Fail, NotApplicable, Skipped };

struct RuleOutcome {
  std::string rule;
  Outcome outcome = Outcome::NotApplicable;
  std::string observed;
  // Bounds attained with equality: (witness id, value).
  std::vector<std::pair<std::string, int>> tight;
};

struct TheoremReport {
  std::string graph6;
  std::vector<RuleOutcome> outcomes;
  double seconds = 0.0;
};

struct SurveyConfig {
  std::optional<int> exhaustive_n;  // enumerate connected graphs of this order
  std::string stream_path;          // otherwise read graph6 lines from here
  std::vector<std::string> rules;   // empty = all
  std::uint64_t budget = kDefaultBudget;
  int edge_cap = 15;
  int jobs = 1;
  std::optional<std::uint64_t> seed;  // overrides the graph6-derived sampling seed
};

/// Every rule id in report order.
const std::vector<std::string>& all_rules();

/// Checks every selected rule on one graph. Failures are data: a Fail
/// outcome carries the observed values needed to re-check it.
TheoremReport check_theorems(const Graph& g, const SurveyConfig& config);

struct RuleCounts {
  long pass = 0;
  long fail = 0;
  long na = 0;
  long skipped = 0;
};

struct Violation {
  std::string graph6;
  std::string rule;
  std::string observed;
};

struct Witness {
  std::string graph6;
  int value = 0;
  std::size_t index = 0;  // stream position; the earliest one is kept
};

class SurveyReport {
 public:
  /// Merging is associative and order-insensitive: violations are kept in
  /// stream order and each witness id keeps its earliest graph.
  void add(std::size_t index, const TheoremReport& report);
  void merge(const SurveyReport& other);

  const std::map<std::string, RuleCounts>& counts() const { return counts_; }
  std::vector<Violation> violations() const;
  const std::map<std::string, Witness>& witnesses() const { return witnesses_; }
  std::vector<std::pair<std::string, std::string>> skipped() const;  // (graph6, rule)
  long graphs() const { return graphs_; }

  /// RULE lines, then VIOLATION lines, then WITNESS lines; empty when no
  /// graph was processed.
  std::string render(const std::vector<std::string>& rules) const;

 private:
  long graphs_ = 0;
  std::map<std::string, RuleCounts> counts_;
  std::map<std::pair<std::size_t, std::string>, Violation> violations_;
  std::map<std::pair<std::size_t, std::string>, std::string> skipped_;
  std::map<std::string, Witness> witnesses_;
};

/// Parses a graph6 stream: one graph per line, '>' lines and blanks ignored.
/// Malformed lines raise Error(Format) naming the line.
std::vector<Graph> read_graph6_stream(const std::string& text);

SurveyReport survey_graphs(const std::vector<Graph>& graphs, const SurveyConfig& config);

/// Sources the graphs named by config and surveys them.
SurveyReport run_survey(const SurveyConfig& config);

}  // namespace rdisc
