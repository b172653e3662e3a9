#include "rdisc/edge_coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rdisc/error.hpp"

namespace rdisc {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

/// Dense color matrix used by the recoloring algorithms; 0 = uncolored.
class ColorTable {
 public:
  explicit ColorTable(int n) : n_(n), cells_(static_cast<size_t>(n * n), 0) {}

  int get(int x, int y) const { return cells_[static_cast<size_t>(x * n_ + y)]; }
  void set(int x, int y, int c) {
    cells_[static_cast<size_t>(x * n_ + y)] = c;
    cells_[static_cast<size_t>(y * n_ + x)] = c;
  }

  bool is_free(const Graph& g, int x, int c) const {
    for (VertexMask nb = g.neighbors(x); nb; nb &= nb - 1) {
      if (get(x, std::countr_zero(nb)) == c) return false;
    }
    return true;
  }

  int first_free(const Graph& g, int x, int palette) const {
    for (int c = 1; c <= palette; ++c) {
      if (is_free(g, x, c)) return c;
    }
    return 0;
  }

  // Neighbor of x over an edge of color c, or -1.
  int along(const Graph& g, int x, int c) const {
    for (VertexMask nb = g.neighbors(x); nb; nb &= nb - 1) {
      int y = std::countr_zero(nb);
      if (get(x, y) == c) return y;
    }
    return -1;
  }

  // Swap colors a and b along the maximal a/b path leaving `start` by an a-edge.
  void flip_path(const Graph& g, int start, int a, int b) {
    std::vector<int> path{start};
    int x = start;
    int want = a;
    VertexMask seen = bit(start);
    while (true) {
      int y = along(g, x, want);
      if (y < 0 || (seen & bit(y))) break;
      seen |= bit(y);
      path.push_back(y);
      x = y;
      want = want == a ? b : a;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      int c = get(path[i], path[i + 1]);
      set(path[i], path[i + 1], c == a ? b : a);
    }
  }

  EdgeColoring extract(const Graph& g) const {
    EdgeColoring out;
    for (const Edge& e : g.edges()) out.colors.push_back(get(e.u, e.v));
    return out;
  }

 private:
  int n_;
  std::vector<int> cells_;
};

}  // namespace

EdgeColoring misra_gries_color(const Graph& g) {
  const int palette = g.max_degree() + 1;
  ColorTable table(g.order());
  for (const Edge& e : g.edges()) {
    const int x = e.u;
    int shared = 0;
    for (int c = 1; c <= palette && !shared; ++c) {
      if (table.is_free(g, x, c) && table.is_free(g, e.v, c)) shared = c;
    }
    if (shared) {
      table.set(x, e.v, shared);
      continue;
    }
    // Maximal fan at x starting with the uncolored edge x-v.
    std::vector<int> fan{e.v};
    VertexMask in_fan = bit(e.v);
    for (bool grown = true; grown;) {
      grown = false;
      for (VertexMask nb = g.neighbors(x) & ~in_fan; nb; nb &= nb - 1) {
        int y = std::countr_zero(nb);
        int c = table.get(x, y);
        if (c != 0 && table.is_free(g, fan.back(), c)) {
          fan.push_back(y);
          in_fan |= bit(y);
          grown = true;
          break;
        }
      }
    }
    const int c = table.first_free(g, x, palette);
    const int d = table.first_free(g, fan.back(), palette);
    if (c != d) table.flip_path(g, x, d, c);

    size_t w = 0;
    while (w < fan.size() && !table.is_free(g, fan[w], d)) ++w;
    if (w == fan.size()) fail(ErrorKind::Structure, "Misra-Gries: no rotatable fan prefix");
    for (size_t i = 0; i < w; ++i) table.set(x, fan[i], table.get(x, fan[i + 1]));
    table.set(x, fan[w], d);
  }
  EdgeColoring out = table.extract(g);
  if (!is_proper(g, out)) fail(ErrorKind::Structure, "Misra-Gries produced an improper coloring");
  return out;
}

EdgeColoring bipartite_color(const Graph& g) {
  if (!is_bipartite(g)) fail(ErrorKind::Structure, "bipartite_color needs a bipartite graph");
  const int palette = g.max_degree();
  ColorTable table(g.order());
  for (const Edge& e : g.edges()) {
    const int alpha = table.first_free(g, e.u, palette);
    const int beta = table.first_free(g, e.v, palette);
    if (!table.is_free(g, e.v, alpha)) {
      // The alpha/beta path from v cannot end at u in a bipartite graph.
      table.flip_path(g, e.v, alpha, beta);
    }
    table.set(e.u, e.v, alpha);
  }
  EdgeColoring out = table.extract(g);
  if (!is_proper(g, out)) fail(ErrorKind::Structure, "bipartite_color produced an improper coloring");
  return out;
}

namespace {

/// Backtracking search for a proper coloring with `palette` colors.
class EdgeColorSearch {
 public:
  EdgeColorSearch(const Graph& g, int palette, std::uint64_t budget)
      : g_(g), palette_(palette), budget_(budget),
        used_(static_cast<size_t>(g.order()), 0),
        colors_(static_cast<size_t>(g.size()), 0) {}

  bool run() {
    const int n = g_.order();
    auto max_end_degree = [&](int e) {
      return std::max(g_.degree(g_.edge(e).u), g_.degree(g_.edge(e).v));
    };
    // Edges at one max-degree vertex take colors 1..palette up front when
    // palette equals the max degree: that vertex must see every color.
    int anchor = -1;
    if (palette_ == g_.max_degree()) {
      for (int v = 0; v < n && anchor < 0; ++v) {
        if (g_.degree(v) == palette_) anchor = v;
      }
    }
    std::vector<int> fixed = anchor >= 0 ? g_.incident_edges(anchor) : std::vector<int>{};
    for (size_t i = 0; i < fixed.size(); ++i) assign(fixed[i], static_cast<int>(i) + 1);

    for (int e = 0; e < g_.size(); ++e) {
      if (std::find(fixed.begin(), fixed.end(), e) == fixed.end()) order_.push_back(e);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return max_end_degree(a) > max_end_degree(b); });
    return descend(0);
  }

  EdgeColoring coloring() const { return EdgeColoring{colors_}; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void assign(int e, int c) {
    colors_[static_cast<size_t>(e)] = c;
    used_[static_cast<size_t>(g_.edge(e).u)] |= 1ULL << c;
    used_[static_cast<size_t>(g_.edge(e).v)] |= 1ULL << c;
  }
  void clear(int e, int c) {
    colors_[static_cast<size_t>(e)] = 0;
    used_[static_cast<size_t>(g_.edge(e).u)] &= ~(1ULL << c);
    used_[static_cast<size_t>(g_.edge(e).v)] &= ~(1ULL << c);
  }

  bool descend(size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      fail(ErrorKind::Budget, "chromatic index search exceeded budget of " +
                                  std::to_string(budget_) + " nodes");
    }
    const int e = order_[depth];
    const auto blocked = used_[static_cast<size_t>(g_.edge(e).u)] |
                         used_[static_cast<size_t>(g_.edge(e).v)];
    for (int c = 1; c <= palette_; ++c) {
      if (blocked & (1ULL << c)) continue;
      assign(e, c);
      if (descend(depth + 1)) return true;
      clear(e, c);
    }
    return false;
  }

  const Graph& g_;
  int palette_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> used_;
  std::vector<int> colors_;
  std::vector<int> order_;
};

}  // namespace

ChromaticIndexResult chromatic_index_exact(const Graph& g, std::uint64_t budget) {
  const int delta = g.max_degree();
  ChromaticIndexResult out;
  if (g.size() == 0) {
    out.verdict = {EdgeClass::Class1, ClassMethod::Exact, 0};
    return out;
  }
  if (delta > 62) fail(ErrorKind::Size, "max degree above 62");
  if (is_bipartite(g)) {
    out.verdict = {EdgeClass::Class1, ClassMethod::Bipartite, delta};
    out.coloring = bipartite_color(g);
    return out;
  }
  EdgeColorSearch search(g, delta, budget);
  bool found = search.run();
  out.nodes = search.nodes();
  if (found) {
    out.verdict = {EdgeClass::Class1, ClassMethod::Exact, delta};
    out.coloring = search.coloring();
  } else {
    out.verdict = {EdgeClass::Class2, ClassMethod::Exact, delta + 1};
    out.coloring = misra_gries_color(g);
  }
  if (!is_proper(g, out.coloring) || out.coloring.palette() > out.verdict.chromatic_index) {
    fail(ErrorKind::Structure, "chromatic index witness failed its properness check");
  }
  return out;
}

std::optional<ClassVerdict> fournier_class1_test(const Graph& g) {
  const int delta = g.max_degree();
  if (g.size() == 0) return std::nullopt;
  VertexMask core = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == delta) core |= bit(v);
  }
  bool all_cycles = true;
  for (VertexMask rest = core; rest;) {
    VertexMask comp = reachable_within(g, std::countr_zero(rest), core);
    rest &= ~comp;
    int vertices = std::popcount(comp);
    int edges = 0;
    bool two_regular = true;
    for (VertexMask m = comp; m; m &= m - 1) {
      int d = std::popcount(g.neighbors(std::countr_zero(m)) & comp);
      edges += d;
      if (d != 2) two_regular = false;
    }
    edges /= 2;
    if (edges > vertices) return std::nullopt;  // neither tree nor unicyclic
    if (!two_regular) all_cycles = false;
  }
  if (all_cycles) return std::nullopt;
  return ClassVerdict{EdgeClass::Class1, ClassMethod::Fournier, delta};
}

std::optional<ClassVerdict> regular_class1_test(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 != 0 || !is_regular(g)) return std::nullopt;
  const int d = g.max_degree();
  const int threshold = 2 * ((n / 2 + 1) / 2) - 1;
  const bool near_complete = (d == n - 3 || d == n - 4 || d == n - 5) && d >= threshold;
  const bool dense = 7 * d >= 6 * n;
  if (!near_complete && !dense) return std::nullopt;
  return ClassVerdict{EdgeClass::Class1, ClassMethod::RegularParity, d};
}

std::vector<std::vector<Edge>> round_robin_one_factorization(int m) {
  if (m < 2 || m % 2 != 0) fail(ErrorKind::Parameter, "one-factorization needs an even m >= 2");
  const int rotating = m - 1;
  std::vector<std::vector<Edge>> rounds;
  for (int r = 0; r < rotating; ++r) {
    std::vector<Edge> matching{{r, m - 1}};
    for (int i = 1; i < m / 2; ++i) {
      int a = (r + i) % rotating;
      int b = (r - i + rotating) % rotating;
      matching.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(matching.begin(), matching.end());
    rounds.push_back(std::move(matching));
  }
  return rounds;
}

ColoredGraph union_of_rounds(int m, int r) {
  if (m < 2 || m % 2 != 0) fail(ErrorKind::Parameter, "union_of_rounds needs an even m >= 2");
  if (r < 0 || r > m - 1) fail(ErrorKind::Parameter, "round count outside 0..m-1");
  auto rounds = round_robin_one_factorization(m);
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) {
    edges.insert(edges.end(), rounds[static_cast<size_t>(i)].begin(),
                 rounds[static_cast<size_t>(i)].end());
  }
  ColoredGraph out{Graph(m, edges), {}};
  out.coloring.colors.assign(static_cast<size_t>(out.graph.size()), 0);
  for (int i = 0; i < r; ++i) {
    for (const Edge& e : rounds[static_cast<size_t>(i)]) {
      out.coloring.colors[static_cast<size_t>(out.graph.edge_index(e.u, e.v))] = i + 1;
    }
  }
  return out;
}

namespace {

class VertexColorSearch {
 public:
  VertexColorSearch(const Graph& g, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), budget_(budget), nodes_(nodes), color_(static_cast<size_t>(g.order()), 0) {
    for (int v = 0; v < g.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool colorable(int k) {
    std::fill(color_.begin(), color_.end(), 0);
    k_ = k;
    return descend(0, 0);
  }

 private:
  bool descend(size_t depth, int used) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      fail(ErrorKind::Budget, "chromatic number search exceeded budget of " +
                                  std::to_string(budget_) + " nodes");
    }
    const int v = order_[depth];
    // Restricted growth: a fresh color is only ever the next unused one.
    for (int c = 1; c <= std::min(used + 1, k_); ++c) {
      bool clash = false;
      for (VertexMask nb = g_.neighbors(v); nb; nb &= nb - 1) {
        if (color_[static_cast<size_t>(std::countr_zero(nb))] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[static_cast<size_t>(v)] = c;
      if (descend(depth + 1, std::max(used, c))) return true;
      color_[static_cast<size_t>(v)] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int> color_;
  std::vector<int> order_;
  int k_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g, std::uint64_t budget) {
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  std::uint64_t nodes = 0;
  VertexColorSearch search(g, budget, nodes);
  for (int k = 2;; ++k) {
    if (search.colorable(k)) return k;
  }
}

std::optional<int> is_color_critical(const Graph& g, std::uint64_t budget) {
  const int chi = chromatic_number(g, budget);
  for (int e = 0; e < g.size(); ++e) {
    if (chromatic_number(g.without_edge(e), budget) >= chi) return std::nullopt;
  }
  return chi;
}

bool is_chromatic_index_minimal(const Graph& g, std::uint64_t budget) {
  if (g.size() < 2) fail(ErrorKind::Parameter, "chromatic-index minimality needs at least two edges");
  const int chi = chromatic_index_exact(g, budget).verdict.chromatic_index;
  for (int e = 0; e < g.size(); ++e) {
    if (chromatic_index_exact(g.without_edge(e), budget).verdict.chromatic_index != chi - 1) {
      return false;
    }
  }
  return true;
}

bool chromatic_index_minimal_by_class(const Graph& g, std::uint64_t budget) {
  const int delta = g.max_degree();
  const auto verdict = chromatic_index_exact(g, budget).verdict.verdict;
  if (verdict == EdgeClass::Class1) {
    return g.order() == delta + 1 && g.size() == delta && is_tree(g);
  }
  for (int e = 0; e < g.size(); ++e) {
    if (chromatic_index_exact(g.without_edge(e), budget).verdict.verdict != EdgeClass::Class1) {
      return false;
    }
  }
  return true;
}

}  // namespace rdisc
