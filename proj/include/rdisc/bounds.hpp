#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdisc/edge_coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

enum class BoundKind { Lower, Upper, Exact };

const char* to_string(BoundKind kind);

struct BoundEntry {
  std::string rule;       // stable id, e.g. "upper-edge-connectivity"
  BoundKind kind = BoundKind::Lower;
  int value = 0;
  std::string statement;  // the inequality the entry instantiates
};

struct RdBounds {
  int lower = 1;
  int upper = 0;
  std::optional<int> exact;  // set iff lower == upper
  std::vector<BoundEntry> ledger;
  std::vector<std::string> skipped;  // rules whose sub-search ran out of budget

  bool consistent() const { return lower <= upper; }
};

/// Whether the size inequality for upper edge-connectivity is used as a
/// lower bound. It is checked against exact upper edge-connectivity over
/// every connected graph up to order 7 in the test suite.
inline constexpr bool kMaderRuleEnabled = true;

/// Every bound rule that applies to g, aggregated into [lower, upper].
/// Requires g connected with n >= 2.
RdBounds rd_bounds(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// rd of the complete multipartite graph with the given part sizes.
int multipartite_rd(std::vector<int> parts);

/// One line per ledger entry, "<kind> <value> <rule>: <statement>".
std::string format_bounds(const RdBounds& b);

}  // namespace rdisc
