#pragma once

#include <vector>

#include "rdisc/graph.hpp"

namespace rdisc {

/// Edge coloring indexed by canonical edge position; colors are 1-based.
struct EdgeColoring {
  std::vector<int> colors;

  int palette() const;  // largest color in use, 0 when there are no edges
  int distinct() const;

  bool operator==(const EdgeColoring&) const = default;
};

/// Every edge colored within 1..palette and the coloring matches g's size.
bool covers(const Graph& g, const EdgeColoring& c);

/// No two edges sharing an endpoint have the same color.
bool is_proper(const Graph& g, const EdgeColoring& c);

}  // namespace rdisc
