#pragma once

#include <vector>

#include "rdisc/graph.hpp"

namespace rdisc {

/// Local edge-connectivity with both Menger witnesses: `paths` are pairwise
/// edge-disjoint u-v paths (vertex sequences) and `cut` holds canonical edge
/// indices whose removal separates u from v. |paths| == |cut| == value.
struct CutValue {
  int value = 0;
  std::vector<std::vector<int>> paths;
  std::vector<int> cut;
  VertexMask source_side = 0;  // vertices reachable from u once `cut` is removed
};

/// Unit-capacity augmenting-path max-flow. u != v required; a disconnected
/// pair yields value 0 with an empty cut.
CutValue local_edge_connectivity(const Graph& g, int u, int v);

/// Throws when the witnesses fail to certify each other.
void check_menger_witness(const Graph& g, int u, int v, const CutValue& cv);

/// min over pairs; 0 for disconnected graphs or n < 2.
int edge_connectivity(const Graph& g);

/// max over pairs; 0 for n < 2.
int upper_edge_connectivity(const Graph& g);

/// A pair attaining upper_edge_connectivity (first in lexicographic order).
std::pair<int, int> upper_edge_connectivity_pair(const Graph& g);

/// Sum of k - d(x) over vertices with d(x) <= k.
long sigma_k(const Graph& g, int k);

/// Largest k+1 over k >= 1 with k+2 <= n and 2e > (k+1)(n-1) - sigma_k.
/// Returns 1 when no k qualifies.
int mader_lambda_plus_lower_bound(const Graph& g);

}  // namespace rdisc
