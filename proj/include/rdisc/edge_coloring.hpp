#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rdisc/coloring.hpp"
#include "rdisc/graph.hpp"

namespace rdisc {

/// Backtracking node cap shared by the exact searches. Exceeding it raises
/// Error(Budget) instead of returning a guess.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class EdgeClass { Class1, Class2 };

enum class ClassMethod { Fournier, RegularParity, Bipartite, Exact };

struct ClassVerdict {
  EdgeClass verdict = EdgeClass::Class1;
  ClassMethod method = ClassMethod::Exact;
  int chromatic_index = 0;
};

struct ChromaticIndexResult {
  ClassVerdict verdict;
  EdgeColoring coloring;  // proper, with chromatic_index colors
  std::uint64_t nodes = 0;
};

/// Proper coloring with at most max_degree + 1 colors (fan rotation and
/// cd-path inversion).
EdgeColoring misra_gries_color(const Graph& g);

/// Decides whether a proper max_degree coloring exists. Bipartite inputs
/// short-circuit through bipartite_color.
ChromaticIndexResult chromatic_index_exact(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Class 1 when every component of the max-degree core is a tree or
/// unicyclic and the core is not a disjoint union of cycles; otherwise
/// inconclusive.
std::optional<ClassVerdict> fournier_class1_test(const Graph& g);

/// Class 1 for regular graphs of even order n and degree d when either
///   d in {n-3, n-4, n-5} and d >= 2 * floor((n/2 + 1) / 2) - 1, or
///   7d >= 6n.
/// Inconclusive for everything else, including odd order.
std::optional<ClassVerdict> regular_class1_test(const Graph& g);

/// Proper max_degree coloring of a bipartite graph by alternating-path
/// recoloring. Error(Structure) on non-bipartite input.
EdgeColoring bipartite_color(const Graph& g);

/// Circle-method schedule for K_m: m-1 perfect matchings partitioning E(K_m).
std::vector<std::vector<Edge>> round_robin_one_factorization(int m);

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

/// r-regular graph on m vertices made of the first r round-robin matchings,
/// with matching i+1 as the color of its edges.
ColoredGraph union_of_rounds(int m, int r);

/// Exact vertex chromatic number.
int chromatic_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// chi(G) when deleting any single edge lowers chi, otherwise nullopt.
std::optional<int> is_color_critical(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Whether deleting any single edge lowers the chromatic index by one.
/// Needs at least two edges.
bool is_chromatic_index_minimal(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Independent characterisation for connected graphs with max degree >= 2:
/// Class 1 star K_{1,d}, or Class 2 with every G-e Class 1.
bool chromatic_index_minimal_by_class(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace rdisc
