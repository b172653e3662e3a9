#include "rdisc/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rdisc/error.hpp"

namespace rdisc {

namespace {

int popcount(VertexMask m) { return std::popcount(m); }

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) fail(ErrorKind::Parameter, "negative vertex count");
  if (n > kMaxOrder) {
    fail(ErrorKind::Size, "order " + std::to_string(n) + " exceeds cap of " +
                              std::to_string(kMaxOrder));
  }
  adjacency_.assign(static_cast<size_t>(n), 0);
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      fail(ErrorKind::Parameter, "edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) fail(ErrorKind::Parameter, "self-loop at " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    fail(ErrorKind::Parameter, "duplicate edge (" + std::to_string(dup->u) + "," +
                                   std::to_string(dup->v) + ")");
  }
  for (const Edge& e : edges_) {
    adjacency_[static_cast<size_t>(e.u)] |= bit(e.v);
    adjacency_[static_cast<size_t>(e.v)] |= bit(e.u);
  }
}

int Graph::degree(int v) const { return popcount(neighbors(v)); }

bool Graph::has_edge(int u, int v) const {
  return u != v && (neighbors(u) & bit(v)) != 0;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (!has_edge(u, v)) return -1;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::incident_edges(int v) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (edges_[static_cast<size_t>(i)].u == v || edges_[static_cast<size_t>(i)].v == v) {
      out.push_back(i);
    }
  }
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph Graph::without_edge(int index) const {
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + index);
  return Graph(n_, std::move(rest));
}

Graph Graph::induced(VertexMask mask) const {
  std::vector<int> relabel(static_cast<size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (mask & bit(v)) relabel[static_cast<size_t>(v)] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    int a = relabel[static_cast<size_t>(e.u)];
    int b = relabel[static_cast<size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back({a, b});
  }
  return Graph(next, std::move(kept));
}

VertexMask reachable_within(const Graph& g, int start, VertexMask mask) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected_within(const Graph& g, VertexMask mask) {
  if (mask == 0) return false;
  return reachable_within(g, std::countr_zero(mask), mask) == mask;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return is_connected_within(g, g.all_vertices());
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[static_cast<size_t>(s)] >= 0) continue;
    side[static_cast<size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (VertexMask nb = g.neighbors(x); nb; nb &= nb - 1) {
        int y = std::countr_zero(nb);
        if (side[static_cast<size_t>(y)] < 0) {
          side[static_cast<size_t>(y)] = 1 - side[static_cast<size_t>(x)];
          stack.push_back(y);
        } else if (side[static_cast<size_t>(y)] == side[static_cast<size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

bool is_regular(const Graph& g) { return g.min_degree() == g.max_degree(); }

std::vector<int> multipartite_parts(const Graph& g) {
  // Complete multipartite iff non-adjacency (with reflexivity) is an
  // equivalence relation, i.e. the complement is a disjoint union of cliques.
  const int n = g.order();
  std::vector<int> parts;
  VertexMask assigned = 0;
  for (int v = 0; v < n; ++v) {
    if (assigned & bit(v)) continue;
    VertexMask part = g.all_vertices() & ~g.neighbors(v);
    for (VertexMask p = part; p; p &= p - 1) {
      int w = std::countr_zero(p);
      if ((g.all_vertices() & ~g.neighbors(w)) != part) return {};
    }
    assigned |= part;
    parts.push_back(popcount(part));
  }
  if (parts.size() < 2) return {};
  std::sort(parts.begin(), parts.end());
  return parts;
}

BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  s.n = g.order();
  s.m = g.size();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  for (int v = 0; v < g.order(); ++v) s.degrees.push_back(g.degree(v));
  s.connected = is_connected(g);
  s.bipartite = is_bipartite(g);
  s.regular = is_regular(g);
  s.average_degree = g.order() == 0 ? 0.0 : 2.0 * g.size() / g.order();
  return s;
}

namespace gen {

Graph path(int n) {
  if (n < 1) fail(ErrorKind::Parameter, "path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorKind::Parameter, "cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  if (n < 1) fail(ErrorKind::Parameter, "complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  if (leaves < 1) fail(ErrorKind::Parameter, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) fail(ErrorKind::Parameter, "empty part list");
  std::vector<int> part_of;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) fail(ErrorKind::Parameter, "part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<size_t>(parts[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[static_cast<size_t>(i)] != part_of[static_cast<size_t>(j)]) e.push_back({i, j});
    }
  }
  return Graph(n, std::move(e));
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});          // outer 5-cycle
    e.push_back({i, i + 5});                // spokes
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph(10, std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  for (const Edge& x : h.edges()) e.push_back({x.u + shift, x.v + shift});
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < h.order(); ++b) e.push_back({a, b + shift});
  }
  return Graph(g.order() + h.order(), std::move(e));
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.has_edge(i, j)) e.push_back({i, j});
    }
  }
  return Graph(g.order(), std::move(e));
}

}  // namespace gen

std::vector<Block> blocks(const Graph& g) {
  const int n = g.order();
  if (n < 2) fail(ErrorKind::Structure, "blocks need at least two vertices");
  if (!is_connected(g)) fail(ErrorKind::Structure, "blocks need a connected graph");

  // Hopcroft-Tarjan with an explicit edge stack.
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> components;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    VertexMask pending;
  };
  std::vector<Frame> stack;
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, g.neighbors(0)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pending) {
      int w = std::countr_zero(f.pending);
      f.pending &= f.pending - 1;
      if (w == f.parent) continue;
      auto sv = static_cast<size_t>(f.v);
      auto sw = static_cast<size_t>(w);
      if (disc[sw] < 0) {
        edge_stack.push_back({f.v, w});
        disc[sw] = low[sw] = timer++;
        stack.push_back({w, f.v, g.neighbors(w)});
      } else if (disc[sw] < disc[sv]) {
        edge_stack.push_back({f.v, w});
        low[sv] = std::min(low[sv], disc[sw]);
      }
      continue;
    }
    const int v = f.v;
    const int parent = f.parent;
    stack.pop_back();
    if (parent < 0) break;
    auto sv = static_cast<size_t>(v);
    auto sp = static_cast<size_t>(parent);
    low[sp] = std::min(low[sp], low[sv]);
    if (low[sv] >= disc[sp]) {
      std::vector<Edge> comp;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        comp.push_back(e);
        if (e.u == parent && e.v == v) break;
      }
      components.push_back(std::move(comp));
    }
  }

  std::vector<Block> out;
  for (auto& comp : components) {
    VertexMask mask = 0;
    for (const Edge& e : comp) mask |= bit(e.u) | bit(e.v);
    Block b;
    for (VertexMask m = mask; m; m &= m - 1) b.vertices.push_back(std::countr_zero(m));
    b.graph = g.induced(mask);
    out.push_back(std::move(b));
  }
  // Deterministic order: by smallest vertex, then by vertex list.
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return out;
}

}  // namespace rdisc
