#pragma once

#include <string>
#include <string_view>

#include "rdisc/coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

// graph6 short form: size byte n+63, then the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte (MSB first),
// zero-padded, each group offset by 63.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// "n m" header followed by m lines "u v". The writer emits canonical order.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Edge list when the first non-empty line is two integers, graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

// Coloring file: "n m k" then m lines "u v c" in canonical edge order.
std::string write_coloring(const Graph& g, const EdgeColoring& c);
EdgeColoring read_coloring(const Graph& g, std::string_view text);

}  // namespace rdisc
