#include <array>
#include <random>

#include "doctest.h"
#include "rdisc/edge_coloring.hpp"
#include "rdisc/error.hpp"
#include "rdisc/harness.hpp"
#include "rdisc/rainbow.hpp"

using namespace rdisc;

namespace {

// Every subset containing u but not v, checked directly.
bool rainbow_cut_by_subsets(const Graph& g, const EdgeColoring& c, int u, int v) {
  for (VertexMask side = 0; side <= g.all_vertices(); ++side) {
    if (!(side >> u & 1) || (side >> v & 1)) continue;
    std::uint64_t seen = 0;
    bool rainbow = true;
    for (int e = 0; e < g.size() && rainbow; ++e) {
      const Edge& ed = g.edge(e);
      if (((side >> ed.u) & 1) == ((side >> ed.v) & 1)) continue;
      std::uint64_t b = std::uint64_t{1} << c.colors[static_cast<size_t>(e)];
      rainbow = !(seen & b);
      seen |= b;
    }
    if (rainbow) return true;
  }
  return false;
}

int rd(const Graph& g) { return rd_exact(g).value; }

}  // namespace

TEST_CASE("rainbow cut examples") {
  Graph c4 = gen::cycle(4);  // edges 01, 03, 12, 23
  auto proper = chromatic_index_exact(c4).coloring;
  auto star = find_rainbow_cut(c4, proper, 0, 2);
  REQUIRE(star);
  CHECK(star->side == 1);
  // 1,2,1,2 around the cycle 0-1-2-3-0.
  EdgeColoring alternating{{1, 2, 2, 1}};
  auto cut = find_rainbow_cut(c4, alternating, 0, 1);
  REQUIRE(cut);
  CHECK(cut->crossing.size() == 2);
  CHECK(validate_certificate(c4, alternating, *cut));
  EdgeColoring mono{{1, 1, 1, 1}};
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) CHECK_FALSE(find_rainbow_cut(c4, mono, u, v));
  }
  CHECK_THROWS_AS(find_rainbow_cut(c4, mono, 2, 2), Error);
}

TEST_CASE("certificates are rejected when they do not separate or are not rainbow") {
  Graph c4 = gen::cycle(4);
  EdgeColoring alternating{{1, 2, 2, 1}};
  auto cut = find_rainbow_cut(c4, alternating, 0, 1);
  REQUIRE(cut);
  auto wrong_side = *cut;
  wrong_side.side |= VertexMask{1} << 1;
  CHECK_FALSE(validate_certificate(c4, alternating, wrong_side));
  EdgeColoring mono{{1, 1, 1, 1}};
  CHECK_FALSE(validate_certificate(c4, mono, *cut));
}

TEST_CASE("oracle: rainbow cut search matches subset brute force, 200 colorings, n <= 5") {
  std::mt19937_64 rng(1234);
  std::vector<Graph> pool;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) pool.push_back(g);
  }
  long found = 0;
  long absent = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph& g = pool[rng() % pool.size()];
    const int k = 1 + static_cast<int>(rng() % 4);
    EdgeColoring c;
    for (int e = 0; e < g.size(); ++e) c.colors.push_back(1 + static_cast<int>(rng() % k));
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        auto cert = find_rainbow_cut(g, c, u, v);
        REQUIRE(cert.has_value() == rainbow_cut_by_subsets(g, c, u, v));
        if (cert) {
          REQUIRE(validate_certificate(g, c, *cert));
          ++found;
        } else {
          ++absent;
        }
      }
    }
  }
  CHECK(found > 100);
  CHECK(absent > 100);
}

TEST_CASE("verification") {
  Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  auto ok = verify_rd_coloring(tree, EdgeColoring{{1, 1, 1, 1}});
  CHECK(ok.ok);
  CHECK(ok.certificates.size() == 10);
  Graph k4 = gen::complete(4);
  CHECK(verify_rd_coloring(k4, chromatic_index_exact(k4).coloring).ok);
  auto bad = verify_rd_coloring(k4, EdgeColoring{std::vector<int>(6, 1)});
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_pair.has_value());
}

TEST_CASE("bonds have both sides connected") {
  Graph c4 = gen::cycle(4);
  auto b = bonds(c4);
  CHECK(b.size() == 6);  // a cycle's bonds are its pairs of edges
  for (VertexMask side : b) {
    CHECK((side & 1) == 1);
    CHECK(is_connected_within(c4, side));
    CHECK(is_connected_within(c4, c4.all_vertices() & ~side));
  }
}

TEST_CASE("exact rd on small families") {
  CHECK(rd(gen::path(4)) == 1);
  CHECK(rd(gen::cycle(5)) == 2);
  CHECK(rd(gen::complete(4)) == 3);
  std::array<int, 2> k22{2, 2};
  CHECK(rd(gen::complete_multipartite(k22)) == 2);
  auto r = rd_exact(gen::cycle(5));
  CHECK(r.lower == 2);
  CHECK(r.coloring.palette() == 2);
  CHECK(r.certificates.size() == 10);
  CHECK(verify_rd_coloring(gen::cycle(5), r.coloring).ok);
}

TEST_CASE("exact rd of the Petersen graph") {
  auto r = rd_exact(gen::petersen());
  CHECK(r.value == 4);
  CHECK(r.lower == 3);
  CHECK(r.upper == 4);
  CHECK(r.infeasibility_note.find("k=3 refuted") == 0);
  RdOptions plain;
  plain.bond_symmetry_break = false;
  CHECK(rd_exact(gen::petersen(), plain).value == 4);
}

TEST_CASE("exact rd input checks") {
  CHECK_THROWS_AS(rd_exact(Graph(4, {{0, 1}, {2, 3}})), Error);
  CHECK_THROWS_AS(rd_exact(gen::complete(1)), Error);
  try {
    rd_exact(gen::complete(7));
    FAIL("edge cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Size);
  }
  RdOptions wide;
  wide.edge_cap = 21;
  CHECK(rd_exact(gen::complete(7), wide).value == 6);
  RdOptions starved;
  starved.budget = 5;
  starved.bond_symmetry_break = false;
  try {
    find_rd_coloring(gen::petersen(), 3, starved.budget, false);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
  }
}

TEST_CASE("fixed-palette search") {
  auto three = find_rd_coloring(gen::complete(4), 3, kDefaultBudget);
  REQUIRE(three.coloring);
  CHECK(verify_rd_coloring(gen::complete(4), *three.coloring).ok);
  CHECK_FALSE(find_rd_coloring(gen::complete(4), 2, kDefaultBudget).coloring);
}

TEST_CASE("symmetry break does not change rd, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      RdOptions plain;
      plain.bond_symmetry_break = false;
      REQUIRE(rd_exact(g).value == rd_exact(g, plain).value);
    }
  }
}

namespace {

// Smallest k for which some assignment of colors 1..k verifies.
int rd_by_all_colorings(const Graph& g) {
  const size_t m = static_cast<size_t>(g.size());
  for (int k = 1;; ++k) {
    EdgeColoring c{std::vector<int>(m, 1)};
    for (;;) {
      if (verify_rd_coloring(g, c).ok) return k;
      size_t i = 0;
      while (i < m && c.colors[i] == k) c.colors[i++] = 1;
      if (i == m) break;
      ++c.colors[i];
    }
  }
}

}  // namespace

TEST_CASE("oracle: exact rd matches exhaustive coloring search, m <= 8") {
  long checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (g.size() > 8) continue;
      REQUIRE(rd_exact(g).value == rd_by_all_colorings(g));
      for (int k = 1; k <= 3; ++k) {
        const bool feasible = find_rd_coloring(g, k, kDefaultBudget).coloring.has_value();
        REQUIRE(feasible == (k >= rd_exact(g).value));
      }
      ++checked;
    }
  }
  CHECK(checked > 60);
}
