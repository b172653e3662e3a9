#include "rdisc/coloring.hpp"

#include <algorithm>
#include <set>

namespace rdisc {

int EdgeColoring::palette() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

int EdgeColoring::distinct() const {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

bool covers(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) return false;
  return std::all_of(c.colors.begin(), c.colors.end(), [](int x) { return x >= 1; });
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
  if (!covers(g, c)) return false;
  for (int v = 0; v < g.order(); ++v) {
    std::set<int> seen;
    for (int e : g.incident_edges(v)) {
      if (!seen.insert(c.colors[static_cast<size_t>(e)]).second) return false;
    }
  }
  return true;
}

}  // namespace rdisc
