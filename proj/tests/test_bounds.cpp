#include <algorithm>

#include "doctest.h"
#include "rdisc/bounds.hpp"
#include "rdisc/error.hpp"
#include "rdisc/harness.hpp"
#include "rdisc/rainbow.hpp"

using namespace rdisc;

namespace {

bool has_entry(const RdBounds& b, const std::string& rule, BoundKind kind, int value) {
  return std::any_of(b.ledger.begin(), b.ledger.end(), [&](const BoundEntry& e) {
    return e.rule == rule && e.kind == kind && e.value == value;
  });
}

}  // namespace

TEST_CASE("multipartite formula") {
  CHECK(multipartite_rd({1, 1, 2}) == 3);
  CHECK(multipartite_rd({2, 2}) == 2);
  CHECK(multipartite_rd({2, 1, 2}) == 3);
  CHECK(multipartite_rd({1, 1, 1, 2}) == 4);
  CHECK(multipartite_rd({3, 3}) == 3);
  CHECK_THROWS_AS(multipartite_rd({4}), Error);
}

TEST_CASE("bounds examples") {
  std::vector<int> parts{1, 2, 2};
  auto k122 = rd_bounds(gen::complete_multipartite(parts));
  CHECK(k122.exact == 3);
  CHECK(has_entry(k122, "multipartite", BoundKind::Exact, 3));

  auto p = rd_bounds(gen::petersen());
  CHECK(p.lower == 3);
  CHECK(p.upper == 4);
  CHECK_FALSE(p.exact);
  CHECK(has_entry(p, "chromatic-index", BoundKind::Upper, 4));
  CHECK(has_entry(p, "regular", BoundKind::Lower, 3));

  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto b = rd_bounds(bowtie);
  CHECK(b.exact == 2);
  CHECK(has_entry(b, "block-max", BoundKind::Exact, 2));

  auto tree = rd_bounds(gen::path(5));
  CHECK(tree.exact == 1);
  CHECK(has_entry(tree, "tree", BoundKind::Exact, 1));

  auto k5 = rd_bounds(gen::complete(5));
  CHECK(k5.exact == 4);
  CHECK(has_entry(k5, "two-universal", BoundKind::Exact, 4));
}

TEST_CASE("bounds preconditions") {
  CHECK_THROWS_AS(rd_bounds(Graph(3, {{0, 1}})), Error);
  CHECK_THROWS_AS(rd_bounds(gen::complete(1)), Error);
}

TEST_CASE("every bound entry holds against the exact value, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int rd = rd_exact(g).value;
      auto b = rd_bounds(g);
      REQUIRE(b.consistent());
      for (const BoundEntry& e : b.ledger) {
        CAPTURE(e.rule);
        if (e.kind != BoundKind::Upper) REQUIRE(e.value <= rd);
        if (e.kind != BoundKind::Lower) REQUIRE(e.value >= rd);
      }
    }
  }
}

TEST_CASE("ledger formatting") {
  auto text = format_bounds(rd_bounds(gen::cycle(5)));
  CHECK(text.find("exact 2 cycle: ") != std::string::npos);
  CHECK(text.find("lower 2 upper-edge-connectivity: ") != std::string::npos);
}
