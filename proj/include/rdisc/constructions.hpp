#pragma once

#include <optional>
#include <string>

#include "rdisc/coloring.hpp"
#include "rdisc/edge_coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

struct ConstructedColoring {
  EdgeColoring coloring;
  std::string construction;  // which rule produced it, e.g. "tree", "proper fallback"
};

/// Verified rainbow disconnection coloring using the cheapest applicable
/// construction: tree, cycle, complete multipartite case colorings, the
/// missing-color extension around a single vertex, block-wise combination,
/// and finally an optimal proper coloring.
ConstructedColoring construct_rd_coloring(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Extends a proper coloring of G - u (given on G's canonical edge positions,
/// edges at u left 0) by giving each edge ux the smallest color in
/// 1..palette missing at x. nullopt when some neighbor x sees every color.
std::optional<EdgeColoring> extend_by_missing_colors(const Graph& g, int u,
                                                     const EdgeColoring& partial, int palette);

struct ExtremalGraph {
  Graph graph;
  EdgeColoring coloring;
  int expected_rd = 0;
};

/// For odd n >= 5 and 1 <= k <= n-1: a connected graph of order n with
/// (k+1)(n-1)/2 edges and a k-color rainbow disconnection coloring. For
/// k <= n-2 this is a (k-1)-regular union of round-robin matchings joined to
/// one apex vertex (vertex n-1), apex edges colored k; for k = n-1 it is K_n.
ExtremalGraph construct_extremal_graph(int n, int k);

/// Graph on n >= 6 vertices (u=0, v=1, w=2, x_i = 3..n-1) with edge uv, both
/// x_i u and x_i v for every i, and w joined to x_1 = 3. Its rd plus the rd of
/// its complement reaches 2n-5.
Graph construct_ng_sharp_graph(int n);

}  // namespace rdisc
