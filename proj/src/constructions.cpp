#include "rdisc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rdisc/error.hpp"
#include "rdisc/rainbow.hpp"

namespace rdisc {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

EdgeColoring proper_coloring(const Graph& h, std::uint64_t budget) {
  try {
    return chromatic_index_exact(h, budget).coloring;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    return misra_gries_color(h);
  }
}

// Proper coloring of G - u, written onto G's edge positions (edges at u = 0).
EdgeColoring lift_from_deleted(const Graph& g, int u, const EdgeColoring& sub) {
  const Graph f = g.induced(g.all_vertices() & ~bit(u));
  EdgeColoring out{std::vector<int>(static_cast<size_t>(g.size()), 0)};
  auto to_g = [u](int x) { return x < u ? x : x + 1; };
  for (int e = 0; e < f.size(); ++e) {
    int idx = g.edge_index(to_g(f.edge(e).u), to_g(f.edge(e).v));
    out.colors[static_cast<size_t>(idx)] = sub.colors[static_cast<size_t>(e)];
  }
  return out;
}

// Missing-color extension around u with the smallest palette it supports.
std::optional<EdgeColoring> vertex_extension(const Graph& g, int u, std::uint64_t budget,
                                             int palette = 0) {
  const Graph f = g.induced(g.all_vertices() & ~bit(u));
  const EdgeColoring sub = proper_coloring(f, budget);
  int need = std::max(1, sub.palette());
  for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
    need = std::max(need, g.degree(std::countr_zero(nb)));  // d_F(x) + 1
  }
  if (palette == 0) palette = need;
  if (palette < need) return std::nullopt;
  return extend_by_missing_colors(g, u, lift_from_deleted(g, u, sub), palette);
}

std::vector<VertexMask> multipartite_classes(const Graph& g) {
  std::vector<VertexMask> classes;
  VertexMask seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen & bit(v)) continue;
    VertexMask part = g.all_vertices() & ~g.neighbors(v);
    classes.push_back(part);
    seen |= part;
  }
  std::stable_sort(classes.begin(), classes.end(), [](VertexMask a, VertexMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return classes;
}

std::optional<ConstructedColoring> multipartite_coloring(const Graph& g, std::uint64_t budget) {
  const std::vector<int> parts = multipartite_parts(g);
  if (parts.empty()) return std::nullopt;
  const auto classes = multipartite_classes(g);
  const int n = g.order();
  const int n1 = parts[0];
  const int n2 = parts[1];
  int u = std::countr_zero(classes[0]);
  std::string name;
  int palette = 0;
  if (n1 == 1 && n2 == 1) {
    name = "multipartite case 1";
    palette = n - 1;
  } else if (n1 == 1) {
    name = "multipartite case 2";
    palette = n - n2;
  } else {
    palette = n - n1;
    auto uneven = std::find_if(classes.begin(), classes.end(),
                               [&](VertexMask c) { return std::popcount(c) != n1; });
    if (uneven != classes.end()) {
      name = "multipartite case 3.1";
      u = std::countr_zero(*uneven);
    } else {
      // All parts equal: the part-mates of u are the only max-degree vertices
      // of G - u and they are independent, so G - u is Class 1.
      name = "multipartite case 3.2";
    }
  }
  auto coloring = vertex_extension(g, u, budget, palette);
  if (!coloring) return std::nullopt;
  return ConstructedColoring{std::move(*coloring), name};
}

std::optional<EdgeColoring> block_combination(const Graph& g, std::uint64_t budget) {
  const auto parts = blocks(g);
  if (parts.size() < 2) return std::nullopt;
  EdgeColoring out{std::vector<int>(static_cast<size_t>(g.size()), 0)};
  for (const Block& b : parts) {
    ConstructedColoring inner = construct_rd_coloring(b.graph, budget);
    for (int e = 0; e < b.graph.size(); ++e) {
      const Edge& be = b.graph.edge(e);
      int idx = g.edge_index(b.vertices[static_cast<size_t>(be.u)],
                             b.vertices[static_cast<size_t>(be.v)]);
      out.colors[static_cast<size_t>(idx)] = inner.coloring.colors[static_cast<size_t>(e)];
    }
  }
  return out;
}

ConstructedColoring checked(const Graph& g, ConstructedColoring c) {
  if (!verify_rd_coloring(g, c.coloring).ok) {
    fail(ErrorKind::Structure, "construction '" + c.construction + "' failed verification");
  }
  return c;
}

}  // namespace

std::optional<EdgeColoring> extend_by_missing_colors(const Graph& g, int u,
                                                     const EdgeColoring& partial, int palette) {
  EdgeColoring out = partial;
  for (VertexMask nb = g.neighbors(u); nb; nb &= nb - 1) {
    const int x = std::countr_zero(nb);
    std::uint64_t used = 0;
    for (int e : g.incident_edges(x)) {
      const Edge& ed = g.edge(e);
      if (ed.u == u || ed.v == u) continue;
      used |= std::uint64_t{1} << partial.colors[static_cast<size_t>(e)];
    }
    int missing = 0;
    for (int c = 1; c <= palette && missing == 0; ++c) {
      if (!(used & (std::uint64_t{1} << c))) missing = c;
    }
    if (missing == 0) return std::nullopt;
    out.colors[static_cast<size_t>(g.edge_index(u, x))] = missing;
  }
  return out;
}

ConstructedColoring construct_rd_coloring(const Graph& g, std::uint64_t budget) {
  if (g.order() < 2) fail(ErrorKind::Parameter, "rd colorings need at least two vertices");
  if (!is_connected(g)) fail(ErrorKind::Structure, "rd colorings need a connected graph");

  if (is_tree(g)) {
    return checked(g, {EdgeColoring{std::vector<int>(static_cast<size_t>(g.size()), 1)}, "tree"});
  }
  if (is_cycle(g)) {
    EdgeColoring c{std::vector<int>(static_cast<size_t>(g.size()), 2)};
    c.colors[0] = 1;
    return checked(g, {std::move(c), "cycle"});
  }
  if (auto mp = multipartite_coloring(g, budget)) return checked(g, std::move(*mp));

  ConstructedColoring best{proper_coloring(g, budget), "proper fallback"};
  for (int u = 0; u < g.order(); ++u) {
    auto ext = vertex_extension(g, u, budget);
    if (ext && ext->palette() < best.coloring.palette()) {
      best = {std::move(*ext), "vertex extension"};
    }
  }
  if (auto combined = block_combination(g, budget)) {
    if (combined->palette() < best.coloring.palette()) best = {std::move(*combined), "block combination"};
  }
  return checked(g, std::move(best));
}

ExtremalGraph construct_extremal_graph(int n, int k) {
  if (n < 5 || n % 2 == 0) fail(ErrorKind::Parameter, "extremal construction needs odd n >= 5");
  if (k < 1 || k > n - 1) fail(ErrorKind::Parameter, "extremal construction needs 1 <= k <= n-1");
  ExtremalGraph out;
  out.expected_rd = k;
  if (k == n - 1) {
    out.graph = gen::complete(n);
    out.coloring = construct_rd_coloring(out.graph).coloring;
    return out;
  }
  ColoredGraph core = union_of_rounds(n - 1, k - 1);
  out.graph = gen::join(core.graph, gen::complete(1));
  out.coloring.colors.assign(static_cast<size_t>(out.graph.size()), k);
  for (int e = 0; e < core.graph.size(); ++e) {
    const Edge& ed = core.graph.edge(e);
    out.coloring.colors[static_cast<size_t>(out.graph.edge_index(ed.u, ed.v))] =
        core.coloring.colors[static_cast<size_t>(e)];
  }
  return out;
}

Graph construct_ng_sharp_graph(int n) {
  if (n < 6) fail(ErrorKind::Parameter, "sharpness construction needs n >= 6");
  constexpr int u = 0;
  constexpr int v = 1;
  constexpr int w = 2;
  std::vector<Edge> edges{{u, v}, {w, 3}};
  for (int x = 3; x < n; ++x) {
    edges.push_back({u, x});
    edges.push_back({v, x});
  }
  return Graph(n, std::move(edges));
}

}  // namespace rdisc
