#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rdisc {

using VertexMask = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;  // u < v

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
///
/// Adjacency is kept as one bitmask per vertex, which caps the order at
/// kMaxOrder (the graph6 short-form limit). Edges are stored in
/// lexicographic (u, v) order with u < v; every module addresses edges by
/// their position in that order.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;

  /// Throws Error(Parameter) on self-loops, duplicates or out-of-range ids,
  /// Error(Size) when n > kMaxOrder.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<size_t>(index)]; }

  VertexMask neighbors(int v) const { return adjacency_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  /// Position of {u, v} in the canonical edge order, or -1.
  int edge_index(int u, int v) const;

  /// Canonical edge positions incident to v, ascending.
  std::vector<int> incident_edges(int v) const;

  int min_degree() const;
  int max_degree() const;
  VertexMask all_vertices() const noexcept { return (VertexMask{1} << n_) - 1; }

  Graph without_edge(int index) const;

  /// Induced subgraph on the vertices in mask, relabelled in ascending order.
  Graph induced(VertexMask mask) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

struct BasicStats {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degrees;
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  double average_degree = 0.0;
};

BasicStats basic_stats(const Graph& g);

bool is_connected(const Graph& g);
/// Whether the subgraph induced by mask is connected (empty mask counts as not).
bool is_connected_within(const Graph& g, VertexMask mask);
/// Vertices reachable from start without leaving mask.
VertexMask reachable_within(const Graph& g, int start, VertexMask mask);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

/// Part sizes in non-decreasing order when g is complete multipartite with at
/// least two parts, otherwise empty.
std::vector<int> multipartite_parts(const Graph& g);

namespace gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,leaves}
Graph star(int leaves);
Graph complete_multipartite(std::span<const int> parts);
Graph petersen();
/// g's vertices keep their ids, h's are shifted by g.order().
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

}  // namespace gen

struct Block {
  Graph graph;
  std::vector<int> vertices;  // block vertex i is vertices[i] in the parent
};

/// Biconnected components. Requires g connected with n >= 2.
std::vector<Block> blocks(const Graph& g);

}  // namespace rdisc
