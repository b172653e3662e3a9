#include "rdisc/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "rdisc/connectivity.hpp"
#include "rdisc/constructions.hpp"
#include "rdisc/error.hpp"

namespace rdisc {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

bool star_is_rainbow(const Graph& g, const EdgeColoring& c, int x) {
  std::set<int> seen;
  for (int e : g.incident_edges(x)) {
    if (!seen.insert(c.colors[static_cast<size_t>(e)]).second) return false;
  }
  return true;
}

RainbowCutCertificate make_certificate(const Graph& g, const EdgeColoring& c, int u, int v,
                                       VertexMask side) {
  RainbowCutCertificate cert{u, v, side, {}};
  for (int e = 0; e < g.size(); ++e) {
    bool a = side & bit(g.edge(e).u);
    bool b = side & bit(g.edge(e).v);
    if (a != b) cert.crossing.emplace_back(e, c.colors[static_cast<size_t>(e)]);
  }
  return cert;
}

void check_pair(const Graph& g, int u, int v) {
  if (u == v) fail(ErrorKind::Parameter, "rainbow cut needs two distinct vertices");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    fail(ErrorKind::Parameter, "vertex out of range");
  }
}

}  // namespace

std::optional<RainbowCutCertificate> find_rainbow_cut(const Graph& g, const EdgeColoring& c,
                                                      int u, int v) {
  check_pair(g, u, v);
  if (!covers(g, c)) fail(ErrorKind::Parameter, "coloring does not cover every edge");
  if (star_is_rainbow(g, c, u)) return make_certificate(g, c, u, v, bit(u));
  if (star_is_rainbow(g, c, v)) return make_certificate(g, c, u, v, g.all_vertices() & ~bit(v));
  if (g.order() > kMaxCutEnumerationOrder) {
    fail(ErrorKind::Size, "bipartition enumeration capped at " +
                              std::to_string(kMaxCutEnumerationOrder) + " vertices");
  }

  std::vector<int> free_vertices;
  for (int x = 0; x < g.order(); ++x) {
    if (x != u && x != v) free_vertices.push_back(x);
  }
  std::vector<unsigned> stamp(static_cast<size_t>(c.palette()) + 1, 0);
  unsigned epoch = 0;
  const std::uint64_t limit = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t pick = 0; pick < limit; ++pick) {
    VertexMask side = bit(u);
    for (size_t i = 0; i < free_vertices.size(); ++i) {
      if (pick & (std::uint64_t{1} << i)) side |= bit(free_vertices[i]);
    }
    ++epoch;
    bool rainbow = true;
    for (int e = 0; e < g.size() && rainbow; ++e) {
      bool a = side & bit(g.edge(e).u);
      bool b = side & bit(g.edge(e).v);
      if (a == b) continue;
      auto& s = stamp[static_cast<size_t>(c.colors[static_cast<size_t>(e)])];
      if (s == epoch) rainbow = false;
      s = epoch;
    }
    if (rainbow) return make_certificate(g, c, u, v, side);
  }
  return std::nullopt;
}

bool validate_certificate(const Graph& g, const EdgeColoring& c,
                          const RainbowCutCertificate& cert) {
  if (cert.u == cert.v || !(cert.side & bit(cert.u)) || (cert.side & bit(cert.v))) return false;
  std::set<int> crossing_edges;
  std::set<int> colors;
  for (const auto& [e, color] : cert.crossing) {
    if (e < 0 || e >= g.size()) return false;
    if (c.colors[static_cast<size_t>(e)] != color) return false;
    if (!colors.insert(color).second) return false;
    crossing_edges.insert(e);
  }
  std::vector<Edge> rest;
  for (int e = 0; e < g.size(); ++e) {
    bool a = cert.side & bit(g.edge(e).u);
    bool b = cert.side & bit(g.edge(e).v);
    if ((a != b) != (crossing_edges.count(e) == 1)) return false;
    if (a == b) rest.push_back(g.edge(e));
  }
  Graph remainder(g.order(), std::move(rest));
  return (reachable_within(remainder, cert.u, remainder.all_vertices()) & bit(cert.v)) == 0;
}

std::string format_certificate(const Graph& g, const RainbowCutCertificate& cert) {
  std::ostringstream out;
  out << "pair " << cert.u << ' ' << cert.v << " | side";
  for (VertexMask s = cert.side; s; s &= s - 1) out << ' ' << std::countr_zero(s);
  out << " | cut";
  for (const auto& [e, color] : cert.crossing) {
    out << " (" << g.edge(e).u << ',' << g.edge(e).v << ',' << color << ')';
  }
  return out.str();
}

VerifyReport verify_rd_coloring(const Graph& g, const EdgeColoring& c) {
  if (!covers(g, c)) fail(ErrorKind::Parameter, "coloring does not cover every edge");
  VerifyReport report;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      auto cert = find_rainbow_cut(g, c, u, v);
      if (!cert) {
        report.ok = false;
        report.certificates.clear();
        report.failing_pair = std::make_pair(u, v);
        return report;
      }
      report.certificates.push_back(std::move(*cert));
    }
  }
  report.ok = true;
  return report;
}

std::vector<VertexMask> bonds(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCutEnumerationOrder) {
    fail(ErrorKind::Size, "bond enumeration capped at " +
                              std::to_string(kMaxCutEnumerationOrder) + " vertices");
  }
  std::vector<VertexMask> out;
  if (n < 2) return out;
  const VertexMask all = g.all_vertices();
  for (VertexMask rest = 0; rest < (VertexMask{1} << (n - 1)); ++rest) {
    VertexMask side = 1 | (rest << 1);
    if (side == all) continue;
    if (is_connected_within(g, side) && is_connected_within(g, all & ~side)) out.push_back(side);
  }
  return out;
}

namespace {

/// Exhaustive search over colorings with at most k colors that keep, for
/// every vertex pair, some separating bond rainbow.
///
/// Bonds suffice: every rainbow u-v cut contains a rainbow bond separating
/// u and v (take the component D of v after deleting the component C of u;
/// the cut of D lies inside the cut of C and both sides of it are connected).
class RdSearch {
 public:
  RdSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), k_(k), budget_(budget), n_(g.order()), m_(g.size()) {
    if (m_ > 64) fail(ErrorKind::Size, "rd search handles at most 64 edges");
    if (k_ > 63) fail(ErrorKind::Size, "rd search handles at most 63 colors");
    pair_index_.assign(static_cast<size_t>(n_ * n_), -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        pair_index_[static_cast<size_t>(a * n_ + b)] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(a, b);
      }
    }
    edge_bonds_.resize(static_cast<size_t>(m_));
    for (VertexMask side : bonds(g)) {
      Bond b{side, 0, {}};
      for (int e = 0; e < m_; ++e) {
        bool x = side & bit(g.edge(e).u);
        bool y = side & bit(g.edge(e).v);
        if (x != y) b.edges |= std::uint64_t{1} << e;
      }
      for (int a = 0; a < n_; ++a) {
        for (int c = a + 1; c < n_; ++c) {
          if (((side >> a) & 1) != ((side >> c) & 1)) {
            b.pairs.push_back(pair_index_[static_cast<size_t>(a * n_ + c)]);
          }
        }
      }
      bonds_.push_back(std::move(b));
    }
    for (size_t b = 0; b < bonds_.size(); ++b) {
      for (std::uint64_t es = bonds_[b].edges; es; es &= es - 1) {
        edge_bonds_[static_cast<size_t>(std::countr_zero(es))].push_back(static_cast<int>(b));
      }
    }
    dead_pair_hits_.assign(pairs_.size(), 0);
    order_edges();
  }

  /// Bonds of exactly k edges separating the pair that attains the fewest
  /// such bonds among pairs whose local connectivity equals k. When k equals
  /// that connectivity, every rainbow separating cut of the pair is one of
  /// these bonds colored 1..k up to renaming colors.
  std::vector<std::uint64_t> forced_bond_branches() const {
    std::vector<std::uint64_t> best;
    bool found = false;
    for (size_t p = 0; p < pairs_.size(); ++p) {
      auto [a, b] = pairs_[p];
      int min_size = m_ + 1;
      std::vector<std::uint64_t> candidates;
      for (const Bond& bond : bonds_) {
        if (((bond.side >> a) & 1) == ((bond.side >> b) & 1)) continue;
        int size = std::popcount(bond.edges);
        if (size < min_size) {
          min_size = size;
          candidates.clear();
        }
        if (size == min_size) candidates.push_back(bond.edges);
      }
      if (min_size != k_) continue;
      if (!found || candidates.size() < best.size()) {
        best = std::move(candidates);
        found = true;
      }
    }
    return best;
  }

  std::optional<EdgeColoring> run(bool symmetry_break) {
    reset();
    // Bonds wider than the palette can never be rainbow.
    for (size_t b = 0; b < bonds_.size(); ++b) {
      if (std::popcount(bonds_[b].edges) > k_) kill(static_cast<int>(b));
    }
    if (conflict_) return std::nullopt;

    std::vector<std::uint64_t> branches;
    if (symmetry_break) branches = forced_bond_branches();
    if (branches.empty()) {
      if (descend(order_, 0, 0)) return EdgeColoring{colors_};
      return std::nullopt;
    }
    for (std::uint64_t prefix : branches) {
      std::vector<int> order;
      for (std::uint64_t es = prefix; es; es &= es - 1) order.push_back(std::countr_zero(es));
      const size_t fixed = order.size();
      for (int e : order_) {
        if (!(prefix & (std::uint64_t{1} << e))) order.push_back(e);
      }
      const size_t mark = trail_.size();
      bool ok = true;
      for (size_t i = 0; i < fixed && ok; ++i) ok = assign(order[i], static_cast<int>(i) + 1);
      if (ok && descend(order, fixed, k_)) return EdgeColoring{colors_};
      undo(mark);
      for (size_t i = 0; i < fixed; ++i) colors_[static_cast<size_t>(order[i])] = 0;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

  std::optional<std::pair<int, int>> hardest_pair() const {
    auto it = std::max_element(dead_pair_hits_.begin(), dead_pair_hits_.end());
    if (it == dead_pair_hits_.end() || *it == 0) return std::nullopt;
    return pairs_[static_cast<size_t>(it - dead_pair_hits_.begin())];
  }

 private:
  struct Bond {
    VertexMask side;
    std::uint64_t edges;
    std::vector<int> pairs;
  };

  struct TrailEntry {
    int bond;
    bool killed;
    std::uint64_t previous;
  };

  // Vertices in BFS order from a max-degree vertex; edges sorted by the later
  // endpoint so bonds around early vertices fill up first.
  void order_edges() {
    std::vector<int> position(static_cast<size_t>(n_), n_);
    int root = 0;
    for (int v = 0; v < n_; ++v) {
      if (g_.degree(v) > g_.degree(root)) root = v;
    }
    std::vector<int> queue{root};
    position[static_cast<size_t>(root)] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      for (VertexMask nb = g_.neighbors(queue[h]); nb; nb &= nb - 1) {
        int y = std::countr_zero(nb);
        if (position[static_cast<size_t>(y)] == n_) {
          position[static_cast<size_t>(y)] = static_cast<int>(queue.size());
          queue.push_back(y);
        }
      }
    }
    for (int e = 0; e < m_; ++e) order_.push_back(e);
    auto key = [&](int e) {
      int a = position[static_cast<size_t>(g_.edge(e).u)];
      int b = position[static_cast<size_t>(g_.edge(e).v)];
      return std::make_pair(std::max(a, b), std::min(a, b));
    };
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return key(x) < key(y); });
  }

  void reset() {
    used_.assign(bonds_.size(), 0);
    dead_.assign(bonds_.size(), false);
    alive_.assign(pairs_.size(), 0);
    for (const Bond& b : bonds_) {
      for (int p : b.pairs) ++alive_[static_cast<size_t>(p)];
    }
    colors_.assign(static_cast<size_t>(m_), 0);
    trail_.clear();
    conflict_ = false;
    for (size_t p = 0; p < pairs_.size(); ++p) {
      if (alive_[p] == 0) conflict_ = true;  // disconnected pair
    }
  }

  void kill(int b) {
    dead_[static_cast<size_t>(b)] = true;
    trail_.push_back({b, true, 0});
    for (int p : bonds_[static_cast<size_t>(b)].pairs) {
      if (--alive_[static_cast<size_t>(p)] == 0) {
        conflict_ = true;
        ++dead_pair_hits_[static_cast<size_t>(p)];
      }
    }
  }

  // Colors edge e; false when some pair has lost its last candidate bond.
  bool assign(int e, int c) {
    colors_[static_cast<size_t>(e)] = c;
    const std::uint64_t color_bit = std::uint64_t{1} << c;
    conflict_ = false;
    for (int b : edge_bonds_[static_cast<size_t>(e)]) {
      auto sb = static_cast<size_t>(b);
      if (dead_[sb]) continue;
      if (used_[sb] & color_bit) {
        kill(b);
      } else {
        trail_.push_back({b, false, used_[sb]});
        used_[sb] |= color_bit;
      }
    }
    return !conflict_;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      TrailEntry t = trail_.back();
      trail_.pop_back();
      auto sb = static_cast<size_t>(t.bond);
      if (t.killed) {
        dead_[sb] = false;
        for (int p : bonds_[sb].pairs) ++alive_[static_cast<size_t>(p)];
      } else {
        used_[sb] = t.previous;
      }
    }
    conflict_ = false;
  }

  bool descend(const std::vector<int>& order, size_t depth, int max_used) {
    if (depth == order.size()) return true;
    if (++nodes_ > budget_) {
      fail(ErrorKind::Budget, "rd search exceeded budget of " + std::to_string(budget_) +
                                  " nodes at k=" + std::to_string(k_));
    }
    const int e = order[depth];
    // Restricted growth: colors are named in order of first use.
    const int top = std::min(max_used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      const size_t mark = trail_.size();
      if (assign(e, c) && descend(order, depth + 1, std::max(max_used, c))) return true;
      undo(mark);
      colors_[static_cast<size_t>(e)] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  int n_;
  int m_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> edge_bonds_;
  std::vector<int> order_;

  std::vector<std::uint64_t> used_;
  std::vector<bool> dead_;
  std::vector<int> alive_;
  std::vector<int> colors_;
  std::vector<TrailEntry> trail_;
  std::vector<std::uint64_t> dead_pair_hits_;
  bool conflict_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

RdSearchOutcome find_rd_coloring(const Graph& g, int k, std::uint64_t budget,
                                 bool bond_symmetry_break) {
  if (k < 1) fail(ErrorKind::Parameter, "palette size must be at least 1");
  RdSearch search(g, k, budget);
  RdSearchOutcome out;
  out.coloring = search.run(bond_symmetry_break);
  out.nodes = search.nodes();
  out.hardest_pair = search.hardest_pair();
  return out;
}

RdResult rd_exact(const Graph& g, const RdOptions& opts) {
  if (g.order() < 2) fail(ErrorKind::Parameter, "rd is defined for nontrivial connected graphs");
  if (!is_connected(g)) fail(ErrorKind::Structure, "rd is only defined for connected graphs");
  if (g.size() > opts.edge_cap) {
    fail(ErrorKind::Size, "graph has " + std::to_string(g.size()) + " edges, above the cap of " +
                              std::to_string(opts.edge_cap));
  }

  RdResult result;
  result.lower = upper_edge_connectivity(g);
  ConstructedColoring built = construct_rd_coloring(g, opts.budget);
  result.upper = built.coloring.palette();

  std::ostringstream note;
  std::uint64_t remaining = opts.budget;
  for (int k = result.lower; k < result.upper; ++k) {
    RdSearchOutcome outcome = find_rd_coloring(g, k, remaining, opts.bond_symmetry_break);
    result.nodes += outcome.nodes;
    remaining = remaining > outcome.nodes ? remaining - outcome.nodes : 0;
    if (outcome.coloring) {
      result.value = k;
      result.coloring = std::move(*outcome.coloring);
      result.construction = "exhaustive search";
      break;
    }
    note << "k=" << k << " refuted after " << outcome.nodes << " nodes";
    if (outcome.hardest_pair) {
      note << " (pair " << outcome.hardest_pair->first << ' ' << outcome.hardest_pair->second
           << " resisted most often)";
    }
    note << "; ";
  }
  if (result.value == 0) {
    result.value = result.upper;
    result.coloring = std::move(built.coloring);
    result.construction = built.construction;
  }
  std::string text = note.str();
  if (text.empty()) {
    text = "lower bound " + std::to_string(result.lower) + " met by the construction";
  } else {
    text.resize(text.size() - 2);
  }
  result.infeasibility_note = text;

  VerifyReport report = verify_rd_coloring(g, result.coloring);
  if (!report.ok) fail(ErrorKind::Structure, "rd witness coloring failed verification");
  result.certificates = std::move(report.certificates);
  return result;
}

}  // namespace rdisc
