#include <array>

#include "doctest.h"
#include "rdisc/bounds.hpp"
#include "rdisc/connectivity.hpp"
#include "rdisc/constructions.hpp"
#include "rdisc/error.hpp"
#include "rdisc/harness.hpp"
#include "rdisc/rainbow.hpp"

using namespace rdisc;

namespace {

Graph multipartite(std::initializer_list<int> parts) {
  std::vector<int> p(parts);
  return gen::complete_multipartite(p);
}

}  // namespace

TEST_CASE("constructed colorings by family") {
  auto k122 = construct_rd_coloring(multipartite({1, 2, 2}));
  CHECK(k122.coloring.palette() == 3);
  CHECK(k122.construction == "multipartite case 2");
  CHECK(verify_rd_coloring(multipartite({1, 2, 2}), k122.coloring).ok);

  auto c7 = construct_rd_coloring(gen::cycle(7));
  CHECK(c7.coloring.palette() == 2);
  CHECK(c7.construction == "cycle");
  CHECK(construct_rd_coloring(gen::cycle(9)).coloring.palette() == 2);

  auto p = construct_rd_coloring(gen::petersen());
  CHECK(p.coloring.palette() == 4);
  CHECK(p.construction == "proper fallback");

  auto tree = construct_rd_coloring(gen::star(5));
  CHECK(tree.coloring.palette() == 1);
  CHECK(tree.construction == "tree");

  CHECK(construct_rd_coloring(multipartite({1, 1, 2})).construction == "multipartite case 1");
  CHECK_THROWS_AS(construct_rd_coloring(Graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("multipartite constructions match the formula for every part list, n <= 7") {
  std::vector<std::vector<int>> lists;
  std::vector<int> current;
  auto grow = [&](auto& self, int remaining, int max_part) -> void {
    if (current.size() >= 2) lists.push_back(current);
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  grow(grow, 7, 7);
  CHECK(lists.size() > 30);
  for (const auto& parts : lists) {
    Graph g = gen::complete_multipartite(parts);
    auto c = construct_rd_coloring(g);
    CAPTURE(c.construction);
    REQUIRE(verify_rd_coloring(g, c.coloring).ok);
    REQUIRE(c.coloring.palette() == multipartite_rd(parts));
    const bool named = c.construction.rfind("multipartite case", 0) == 0 ||
                       c.construction == "tree" || c.construction == "cycle";
    REQUIRE(named);
  }
}

TEST_CASE("constructions always verify and never beat the exact value, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      auto c = construct_rd_coloring(g);
      REQUIRE(verify_rd_coloring(g, c.coloring).ok);
      REQUIRE(c.coloring.palette() >= rd_exact(g).value);
    }
  }
}

TEST_CASE("extension by missing colors") {
  // K_4 minus vertex 3 is a triangle colored 1,2,3; vertex 3's neighbours
  // each miss exactly one color.
  Graph k4 = gen::complete(4);
  EdgeColoring partial{std::vector<int>(6, 0)};
  partial.colors[static_cast<size_t>(k4.edge_index(0, 1))] = 1;
  partial.colors[static_cast<size_t>(k4.edge_index(0, 2))] = 2;
  partial.colors[static_cast<size_t>(k4.edge_index(1, 2))] = 3;
  auto ext = extend_by_missing_colors(k4, 3, partial, 3);
  REQUIRE(ext);
  CHECK(verify_rd_coloring(k4, *ext).ok);
  CHECK_FALSE(extend_by_missing_colors(k4, 3, partial, 2));
}

TEST_CASE("extremal graphs") {
  auto g52 = construct_extremal_graph(5, 2);
  CHECK(g52.graph.size() == 6);
  CHECK(g52.expected_rd == 2);
  CHECK(verify_rd_coloring(g52.graph, g52.coloring).ok);
  CHECK(rd_exact(g52.graph).value == 2);

  auto g51 = construct_extremal_graph(5, 1);
  CHECK(g51.graph.size() == 4);
  CHECK(is_tree(g51.graph));

  auto g54 = construct_extremal_graph(5, 4);
  CHECK(g54.graph == gen::complete(5));

  auto g73 = construct_extremal_graph(7, 3);
  CHECK(g73.graph.size() == 12);
  CHECK(upper_edge_connectivity(g73.graph) >= 3);
  CHECK(g73.coloring.palette() == 3);
  CHECK(verify_rd_coloring(g73.graph, g73.coloring).ok);

  CHECK_THROWS_AS(construct_extremal_graph(6, 2), Error);
  CHECK_THROWS_AS(construct_extremal_graph(3, 1), Error);
  CHECK_THROWS_AS(construct_extremal_graph(5, 0), Error);
  CHECK_THROWS_AS(construct_extremal_graph(5, 5), Error);
}

TEST_CASE("graphs reaching the upper complement bounds") {
  Graph g = construct_ng_sharp_graph(6);
  Graph co = gen::complement(g);
  CHECK(g.size() == 8);
  CHECK(co.size() == 7);
  CHECK(local_edge_connectivity(g, 0, 1).value == 4);
  CHECK(upper_edge_connectivity(co) == 3);
  CHECK(rd_exact(g).value == 4);
  CHECK(rd_exact(co).value == 3);
  CHECK_THROWS_AS(construct_ng_sharp_graph(5), Error);
}
