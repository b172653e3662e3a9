// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "rdisc/bounds.hpp"
#include "rdisc/connectivity.hpp"
#include "rdisc/constructions.hpp"
#include "rdisc/edge_coloring.hpp"
#include "rdisc/harness.hpp"
#include "rdisc/rainbow.hpp"

using namespace rdisc;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

int rd_of(const Graph& g, int edge_cap = 15) {
  RdOptions opts;
  opts.edge_cap = edge_cap;
  return rd_exact(g, opts).value;
}

std::vector<Graph> connected_up_to(int max_n, int min_n = 2) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

void family_formulas(Check& c) {
  for (int n = 2; n <= 8; ++n) c.expect(rd_of(gen::path(n)) == 1, "rd(P_" + std::to_string(n) + ")");
  for (int n = 3; n <= 8; ++n) c.expect(rd_of(gen::cycle(n)) == 2, "rd(C_" + std::to_string(n) + ")");
  for (int n = 2; n <= 5; ++n) {
    c.expect(rd_of(gen::complete(n)) == n - 1, "rd(K_" + std::to_string(n) + ")");
  }
  // K_6 has 15 edges; pin it between upper edge connectivity and chi'.
  const Graph k6 = gen::complete(6);
  const int lower = upper_edge_connectivity(k6);
  const int upper = chromatic_index_exact(k6).verdict.chromatic_index;
  c.expect(lower == 5 && upper == 5, "K_6 pinning");
  c.detail << "K_6 pinned at " << lower << ".." << upper;
}

void multipartite_formula(Check& c) {
  int lists = 0;
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int remaining, int max_part) {
    if (parts.size() >= 2) {
      Graph g = gen::complete_multipartite(parts);
      std::string name = "K_{";
      for (size_t i = 0; i < parts.size(); ++i) name += (i ? "," : "") + std::to_string(parts[i]);
      c.expect(rd_of(g, g.size()) == multipartite_rd(parts), name + "}");
      ++lists;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      grow(remaining - p, p);
      parts.pop_back();
    }
  };
  grow(7, 7);
  c.expect(multipartite_rd({1, 1, 2}) == 3 && multipartite_rd({2, 2}) == 2 &&
               multipartite_rd({1, 2, 2}) == 3 && multipartite_rd({1, 1, 1, 2}) == 4,
           "named examples");
  if (c.ok) c.detail << lists << " part lists";
}

void petersen(Check& c) {
  const Graph p = gen::petersen();
  RdResult r = rd_exact(p);
  c.expect(r.value == 4, "rd(Petersen) = " + std::to_string(r.value));
  c.expect(r.lower == 3 && r.upper == 4, "search window");
  c.expect(r.construction == "proper fallback", "upper bound from a proper 4-coloring");
  c.expect(verify_rd_coloring(p, r.coloring).ok && r.coloring.palette() == 4, "witness");
  c.expect(!find_rd_coloring(p, 3, kDefaultBudget).coloring, "k = 3 refuted");
  if (c.ok) c.detail << r.infeasibility_note;
}

void extremal(Check& c) {
  int built = 0;
  for (int n : {5, 7, 9}) {
    for (int k = 1; k <= n - 1; ++k) {
      ExtremalGraph x = construct_extremal_graph(n, k);
      const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.expect(x.graph.size() * 2 == (k + 1) * (n - 1), tag + " size");
      c.expect(x.coloring.palette() == k && verify_rd_coloring(x.graph, x.coloring).ok,
               tag + " coloring");
      c.expect(upper_edge_connectivity(x.graph) >= k, tag + " lambda+");
      ++built;
    }
  }
  int graphs = 0;
  for (const Graph& g : enumerate_connected_graphs(5)) {
    const int k = rd_of(g, g.size());
    c.expect(g.size() * 2 <= (k + 1) * 4, "maximality at n=5");
    ++graphs;
  }
  if (c.ok) c.detail << built << " constructions, " << graphs << " graphs on 5 vertices";
}

void nordhaus_gaddum(Check& c) {
  int checked = 0;
  for (const Graph& g : connected_up_to(6)) {
    const Graph co = gen::complement(g);
    if (!is_connected(co)) continue;
    const int n = g.order();
    const int a = rd_of(g);
    const int b = rd_of(co);
    c.expect(n - 2 <= a + b && a + b <= 2 * n - 5, "sum window");
    c.expect(n - 3 <= a * b && a * b <= (n - 2) * (n - 3), "product window");
    ++checked;
  }
  const Graph p4 = gen::path(4);
  const int a = rd_of(p4);
  const int b = rd_of(gen::complement(p4));
  c.expect(a + b == 2 && a * b == 1, "P_4 attains both lower bounds");
  const Graph s = construct_ng_sharp_graph(6);
  const int x = rd_of(s);
  const int y = rd_of(gen::complement(s));
  c.expect(x == 4 && y == 3 && x + y == 7 && x * y == 12, "n = 6 upper bounds attained");
  if (c.ok) c.detail << checked << " graph/complement pairs; sharp pair rd " << x << "+" << y;
}

void chain(Check& c) {
  int checked = 0;
  for (const Graph& g : connected_up_to(6)) {
    const int l = edge_connectivity(g);
    const int lp = upper_edge_connectivity(g);
    const int rd = rd_of(g);
    const int chi = chromatic_index_exact(g).verdict.chromatic_index;
    c.expect(l <= lp && lp <= rd && rd <= chi && chi <= g.max_degree() + 1, "chain");
    ++checked;
  }
  if (c.ok) c.detail << checked << " graphs";
}

void structural(Check& c) {
  SurveyConfig config;
  config.rules = {"block",      "universal", "two-leaves",        "few-high-degree",
                  "avg-degree", "regular",   "index-minimal",     "critical",
                  "co-regular", "regular-bipartite", "regular-dense"};
  config.jobs = 4;
  SurveyReport report = survey_graphs(connected_up_to(6), config);
  long applied = 0;
  for (const auto& [rule, counts] : report.counts()) {
    c.expect(counts.fail == 0, rule + " violated");
    c.expect(counts.skipped == 0, rule + " skipped");
    applied += counts.pass;
  }
  for (const Violation& v : report.violations()) c.detail << " " << v.graph6 << ":" << v.rule;
  if (c.ok) c.detail << applied << " rule applications over " << report.graphs() << " graphs";
}

int bipartition_min_cut(const Graph& g, int u, int v) {
  int best = g.size();
  for (VertexMask side = 0; side <= g.all_vertices(); ++side) {
    if (!(side >> u & 1) || (side >> v & 1)) continue;
    int crossing = 0;
    for (const Edge& e : g.edges()) crossing += ((side >> e.u) & 1) != ((side >> e.v) & 1);
    best = std::min(best, crossing);
  }
  return best;
}

bool rainbow_cut_by_subsets(const Graph& g, const EdgeColoring& col, int u, int v) {
  for (VertexMask side = 0; side <= g.all_vertices(); ++side) {
    if (!(side >> u & 1) || (side >> v & 1)) continue;
    std::uint64_t seen = 0;
    bool rainbow = true;
    for (int e = 0; e < g.size() && rainbow; ++e) {
      const Edge& ed = g.edge(e);
      if (((side >> ed.u) & 1) == ((side >> ed.v) & 1)) continue;
      const std::uint64_t b = std::uint64_t{1} << col.colors[static_cast<size_t>(e)];
      rainbow = !(seen & b);
      seen |= b;
    }
    if (rainbow) return true;
  }
  return false;
}

void oracles(Check& c) {
  long pairs = 0;
  for (const Graph& g : connected_up_to(6)) {
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        c.expect(local_edge_connectivity(g, u, v).value == bipartition_min_cut(g, u, v), "max flow");
        ++pairs;
      }
    }
  }
  const std::vector<Graph> small = connected_up_to(5);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& g = small[rng() % small.size()];
    const int k = 1 + static_cast<int>(rng() % 4);
    EdgeColoring col;
    for (int e = 0; e < g.size(); ++e) col.colors.push_back(1 + static_cast<int>(rng() % k));
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        c.expect(find_rainbow_cut(g, col, u, v).has_value() == rainbow_cut_by_subsets(g, col, u, v),
                 "rainbow cut");
      }
    }
  }
  long predicates = 0;
  for (const Graph& g : connected_up_to(7)) {
    const bool fast = fournier_class1_test(g).has_value() || regular_class1_test(g).has_value();
    if (!fast) continue;
    c.expect(chromatic_index_exact(g).verdict.chromatic_index == g.max_degree(), "Class 1 predicate");
    ++predicates;
  }
  if (c.ok) {
    c.detail << pairs << " flow pairs, 200 colorings, " << predicates << " Class 1 verdicts";
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"family formulas", 60, family_formulas},
      {"complete multipartite formula, n <= 7", 600, multipartite_formula},
      {"Petersen graph rd = 4", 600, petersen},
      {"extremal constructions and maximality", 660, extremal},
      {"complement sum and product windows, n <= 6", 1800, nordhaus_gaddum},
      {"invariant chain, n <= 6", 600, chain},
      {"structural rules, n <= 6", 600, structural},
      {"oracle equivalences", 600, oracles},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& cr : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs <= cr.limit_seconds, "time limit");
    failed += check.ok ? 0 : 1;
    std::printf("criterion %d %s: %s (%.2fs) %s\n", index, check.ok ? "PASS" : "FAIL", cr.name,
                secs, check.detail.str().c_str());
  }
  return failed == 0 ? 0 : 1;
}
