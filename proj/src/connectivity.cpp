#include "rdisc/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rdisc/error.hpp"

namespace rdisc {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

// Flow on canonical edge i: +1 means edge(i).u -> edge(i).v, -1 the reverse.
int flow_from(const Graph& g, const std::vector<int>& flow, int e, int x) {
  return g.edge(e).u == x ? flow[static_cast<size_t>(e)] : -flow[static_cast<size_t>(e)];
}

void push_from(const Graph& g, std::vector<int>& flow, int e, int x) {
  flow[static_cast<size_t>(e)] += g.edge(e).u == x ? 1 : -1;
}

}  // namespace

CutValue local_edge_connectivity(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u == v) fail(ErrorKind::Parameter, "local edge-connectivity needs distinct vertices");
  if (u < 0 || v < 0 || u >= n || v >= n) fail(ErrorKind::Parameter, "vertex out of range");

  std::vector<std::vector<int>> inc(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) inc[static_cast<size_t>(x)] = g.incident_edges(x);
  auto other = [&](int e, int x) { return g.edge(e).u == x ? g.edge(e).v : g.edge(e).u; };

  std::vector<int> flow(static_cast<size_t>(g.size()), 0);
  int value = 0;
  VertexMask reached = 0;
  while (true) {
    // BFS over residual arcs; via[x] = edge used to enter x.
    std::vector<int> via(static_cast<size_t>(n), -1);
    std::vector<int> queue{u};
    reached = bit(u);
    for (size_t head = 0; head < queue.size() && !(reached & bit(v)); ++head) {
      int x = queue[head];
      for (int e : inc[static_cast<size_t>(x)]) {
        int y = other(e, x);
        if ((reached & bit(y)) || flow_from(g, flow, e, x) >= 1) continue;
        reached |= bit(y);
        via[static_cast<size_t>(y)] = e;
        queue.push_back(y);
      }
    }
    if (!(reached & bit(v))) break;
    for (int y = v; y != u;) {
      int e = via[static_cast<size_t>(y)];
      int x = other(e, y);
      push_from(g, flow, e, x);
      y = x;
    }
    ++value;
  }

  CutValue out;
  out.value = value;
  out.source_side = reached;
  for (int e = 0; e < g.size(); ++e) {
    bool a = reached & bit(g.edge(e).u);
    bool b = reached & bit(g.edge(e).v);
    if (a != b) out.cut.push_back(e);
  }

  std::vector<bool> used(static_cast<size_t>(g.size()), false);
  for (int p = 0; p < value; ++p) {
    std::vector<int> path{u};
    std::vector<int> position(static_cast<size_t>(n), -1);
    position[static_cast<size_t>(u)] = 0;
    int x = u;
    while (x != v) {
      int next_edge = -1;
      for (int e : inc[static_cast<size_t>(x)]) {
        if (!used[static_cast<size_t>(e)] && flow_from(g, flow, e, x) == 1) {
          next_edge = e;
          break;
        }
      }
      if (next_edge < 0) fail(ErrorKind::Structure, "flow decomposition failed");
      used[static_cast<size_t>(next_edge)] = true;
      x = other(next_edge, x);
      if (position[static_cast<size_t>(x)] >= 0) {
        // Drop the loop so the path stays simple.
        auto keep = static_cast<size_t>(position[static_cast<size_t>(x)]) + 1;
        for (size_t i = keep; i < path.size(); ++i) position[static_cast<size_t>(path[i])] = -1;
        path.resize(keep);
      } else {
        position[static_cast<size_t>(x)] = static_cast<int>(path.size());
        path.push_back(x);
      }
    }
    out.paths.push_back(std::move(path));
  }
  check_menger_witness(g, u, v, out);
  return out;
}

void check_menger_witness(const Graph& g, int u, int v, const CutValue& cv) {
  auto broken = [&](const std::string& why) {
    fail(ErrorKind::Structure, "Menger witness for (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") invalid: " + why);
  };
  if (static_cast<int>(cv.paths.size()) != cv.value || static_cast<int>(cv.cut.size()) != cv.value) {
    broken("witness sizes differ from value");
  }
  std::vector<bool> used(static_cast<size_t>(g.size()), false);
  for (const auto& path : cv.paths) {
    if (path.empty() || path.front() != u || path.back() != v) broken("path endpoints");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int e = g.edge_index(path[i], path[i + 1]);
      if (e < 0) broken("path uses a non-edge");
      if (used[static_cast<size_t>(e)]) broken("paths share an edge");
      used[static_cast<size_t>(e)] = true;
    }
  }
  std::vector<Edge> rest;
  std::vector<bool> in_cut(static_cast<size_t>(g.size()), false);
  for (int e : cv.cut) in_cut[static_cast<size_t>(e)] = true;
  for (int e = 0; e < g.size(); ++e) {
    if (!in_cut[static_cast<size_t>(e)]) rest.push_back(g.edge(e));
  }
  Graph h(g.order(), std::move(rest));
  if (reachable_within(h, u, h.all_vertices()) & bit(v)) broken("cut does not separate");
}

int edge_connectivity(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return 0;
  int best = g.size();
  // lambda(G) = min over v of lambda(0, v).
  for (int v = 1; v < g.order(); ++v) best = std::min(best, local_edge_connectivity(g, 0, v).value);
  return best;
}

std::pair<int, int> upper_edge_connectivity_pair(const Graph& g) {
  std::pair<int, int> best_pair{0, 1};
  int best = -1;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      // lambda(u,v) <= min degree of the endpoints.
      if (std::min(g.degree(u), g.degree(v)) <= best) continue;
      int value = local_edge_connectivity(g, u, v).value;
      if (value > best) {
        best = value;
        best_pair = {u, v};
      }
    }
  }
  return best_pair;
}

int upper_edge_connectivity(const Graph& g) {
  if (g.order() < 2) return 0;
  auto [u, v] = upper_edge_connectivity_pair(g);
  return local_edge_connectivity(g, u, v).value;
}

long sigma_k(const Graph& g, int k) {
  if (k < 0) fail(ErrorKind::Parameter, "sigma_k needs k >= 0");
  long total = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) <= k) total += k - g.degree(x);
  }
  return total;
}

int mader_lambda_plus_lower_bound(const Graph& g) {
  const long n = g.order();
  const long e2 = 2L * g.size();
  int best = 1;
  for (int k = 1; k + 2 <= n; ++k) {
    if (e2 > (k + 1) * (n - 1) - sigma_k(g, k)) best = std::max(best, k + 1);
  }
  return best;
}

}  // namespace rdisc
