#include <array>

#include "doctest.h"
#include "rdisc/error.hpp"
#include "rdisc/graph.hpp"
#include "rdisc/graph_io.hpp"

using namespace rdisc;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("graph construction normalises and validates edges") {
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.size() == 2);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(1).u == 1);
  CHECK(g.edge(1).v == 2);
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 2) == -1);
  CHECK(kind_of([] { Graph(3, {{0, 0}}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::Parameter);
  CHECK(kind_of([] { Graph(63, {}); }) == ErrorKind::Size);
}

TEST_CASE("graph6 decoding") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4 == gen::complete(4));
  Graph p4 = parse_graph6("Ch");
  CHECK(p4 == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);
}

TEST_CASE("graph6 encoding and round trip") {
  CHECK(encode_graph6(gen::complete(4)) == "C~");
  CHECK(encode_graph6(Graph(5, {})) == "D??");  // ten bits fill two groups
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(parse_graph6(encode_graph6(c4)) == c4);
  Graph p = gen::petersen();
  CHECK(parse_graph6(encode_graph6(p)) == p);
  Graph big = gen::cycle(62);
  CHECK(parse_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input with the byte offset") {
  CHECK(kind_of([] { parse_graph6(""); }) == ErrorKind::Format);
  CHECK(kind_of([] { parse_graph6("C"); }) == ErrorKind::Format);
  CHECK(kind_of([] { parse_graph6("C~~"); }) == ErrorKind::Format);
  CHECK(kind_of([] { parse_graph6("D?"); }) == ErrorKind::Format);
  CHECK(kind_of([] { parse_graph6("~??"); }) == ErrorKind::Format);
  try {
    parse_graph6("C\x7f");
    FAIL("accepted byte 127");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
  }
}

TEST_CASE("edge lists") {
  Graph c3 = read_edge_list("3 3\n0 1\n1 2\n0 2");
  CHECK(c3 == gen::cycle(3));
  CHECK(read_edge_list("2 1\n0 1") == gen::complete(2));
  try {
    read_edge_list("3 2\n0 1\n0 1");
    FAIL("accepted a duplicate edge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Format);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { read_edge_list("3 2\n0 1"); }) == ErrorKind::Format);
  CHECK(kind_of([] { read_edge_list("3 1\n0 5"); }) == ErrorKind::Format);
  Graph p = gen::petersen();
  CHECK(read_edge_list(write_edge_list(p)) == p);
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph_auto("C~\n") == gen::complete(4));
  CHECK(parse_graph_auto("\n3 2\n0 1\n1 2\n") == gen::path(3));
}

TEST_CASE("generators") {
  std::array<int, 3> parts{1, 2, 2};
  Graph k122 = gen::complete_multipartite(parts);
  CHECK(k122.order() == 5);
  CHECK(k122.size() == 8);
  CHECK(gen::complement(gen::path(4)).size() == 3);
  CHECK(encode_graph6(gen::complement(gen::path(4))) != "");
  CHECK(is_tree(gen::complement(gen::path(4))));
  Graph matching(4, {{0, 1}, {2, 3}});
  Graph joined = gen::join(matching, gen::complete(1));
  CHECK(joined.order() == 5);
  CHECK(joined.size() == 6);
  std::array<int, 0> none{};
  CHECK(kind_of([&] { gen::complete_multipartite(none); }) == ErrorKind::Parameter);
  std::array<int, 2> zero{2, 0};
  CHECK(kind_of([&] { gen::complete_multipartite(zero); }) == ErrorKind::Parameter);
  CHECK(gen::star(4).max_degree() == 4);
}

TEST_CASE("blocks") {
  auto b = blocks(bowtie());
  REQUIRE(b.size() == 2);
  CHECK(is_cycle(b[0].graph));
  CHECK(is_cycle(b[1].graph));
  CHECK(blocks(gen::path(4)).size() == 3);
  auto k4 = blocks(gen::complete(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].graph == gen::complete(4));
  CHECK(kind_of([] { blocks(Graph(4, {{0, 1}, {2, 3}})); }) == ErrorKind::Structure);
}

TEST_CASE("basic stats") {
  auto p = basic_stats(gen::petersen());
  CHECK(p.n == 10);
  CHECK(p.m == 15);
  CHECK(p.regular);
  CHECK(p.min_degree == 3);
  CHECK_FALSE(p.bipartite);
  std::array<int, 2> parts{3, 3};
  auto k33 = basic_stats(gen::complete_multipartite(parts));
  CHECK(k33.regular);
  CHECK(k33.bipartite);
  auto star = basic_stats(gen::star(4));
  CHECK(star.min_degree == 1);
  CHECK(star.max_degree == 4);
  CHECK(star.average_degree == doctest::Approx(1.6));
}

TEST_CASE("multipartite recognition") {
  std::array<int, 3> parts{2, 1, 3};
  CHECK(multipartite_parts(gen::complete_multipartite(parts)) == std::vector<int>{1, 2, 3});
  CHECK(multipartite_parts(gen::complete(4)) == std::vector<int>{1, 1, 1, 1});
  CHECK(multipartite_parts(gen::path(4)).empty());
  CHECK(multipartite_parts(gen::cycle(4)) == std::vector<int>{2, 2});
}

TEST_CASE("coloring files") {
  Graph g = gen::path(3);
  EdgeColoring c{{1, 2}};
  std::string text = write_coloring(g, c);
  CHECK(text == "3 2 2\n0 1 1\n1 2 2\n");
  CHECK(read_coloring(g, text).colors == c.colors);
  CHECK(kind_of([&] { read_coloring(g, "3 2 2\n1 2 1\n0 1 2\n"); }) == ErrorKind::Format);
  CHECK(kind_of([&] { read_coloring(g, "4 2 2\n0 1 1\n1 2 2\n"); }) == ErrorKind::Format);
  CHECK(kind_of([&] { read_coloring(g, "3 2 1\n0 1 1\n1 2 2\n"); }) == ErrorKind::Format);
}
