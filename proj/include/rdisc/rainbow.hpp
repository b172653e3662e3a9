#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdisc/coloring.hpp"
#include "rdisc/edge_coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

/// Largest order for which bipartitions are enumerated explicitly.
inline constexpr int kMaxCutEnumerationOrder = 24;

/// Witness that u and v are separated by a rainbow edge cut: `side` holds u
/// but not v, and `crossing` lists (edge index, color) for every edge with
/// exactly one endpoint in `side`.
struct RainbowCutCertificate {
  int u = 0;
  int v = 0;
  VertexMask side = 0;
  std::vector<std::pair<int, int>> crossing;
};

/// Star cut at u or v when either is rainbow, else the first bipartition in
/// enumeration order whose crossing edges carry distinct colors.
///
/// Deciding over bipartition cuts only loses nothing: every u-v edge cut
/// contains the cut of some vertex set holding u but not v, and a subset of
/// a rainbow set is rainbow.
std::optional<RainbowCutCertificate> find_rainbow_cut(const Graph& g, const EdgeColoring& c,
                                                      int u, int v);

/// Independent re-check: crossing set recomputed from `side`, colors
/// distinct, and u, v disconnected once the crossing edges are removed.
bool validate_certificate(const Graph& g, const EdgeColoring& c,
                          const RainbowCutCertificate& cert);

/// "pair u v | side a b c | cut (u1,v1,c1) (u2,v2,c2)"
std::string format_certificate(const Graph& g, const RainbowCutCertificate& cert);

struct VerifyReport {
  bool ok = false;
  std::vector<RainbowCutCertificate> certificates;  // all pairs when ok
  std::optional<std::pair<int, int>> failing_pair;
};

VerifyReport verify_rd_coloring(const Graph& g, const EdgeColoring& c);

struct RdOptions {
  std::uint64_t budget = kDefaultBudget;  // search nodes across all k
  int edge_cap = 15;
  bool bond_symmetry_break = true;
};

struct RdResult {
  int value = 0;
  EdgeColoring coloring;
  std::vector<RainbowCutCertificate> certificates;
  int lower = 0;  // certified lower bound the search started from
  int upper = 0;  // palette of the verified construction
  std::string construction;
  std::string infeasibility_note;
  std::uint64_t nodes = 0;
};

/// Exact rainbow disconnection number. Requires a connected graph with at
/// least two vertices and at most opts.edge_cap edges.
///
/// Starts from the self-certifying bounds only: upper edge-connectivity
/// below, the palette of a verified constructive coloring above. Each k in
/// between is refuted or witnessed by an exhaustive search over set
/// partitions of the edges.
RdResult rd_exact(const Graph& g, const RdOptions& opts = {});

/// Outcome of one feasibility search.
struct RdSearchOutcome {
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
  std::optional<std::pair<int, int>> hardest_pair;  // most frequent dead pair
};

/// Searches for a rainbow disconnection coloring with at most k colors.
/// Error(Budget) once `budget` nodes are spent.
RdSearchOutcome find_rd_coloring(const Graph& g, int k, std::uint64_t budget,
                                 bool bond_symmetry_break = true);

/// Vertex sets S containing vertex 0 such that S and V - S both induce
/// connected subgraphs; their cuts are exactly the bonds of g.
std::vector<VertexMask> bonds(const Graph& g);

}  // namespace rdisc
