#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

enum class Family {
  complete_graph,
  complete_minus_edge,
  bipartite_constant,
  random_oriented,
  random_chemical,
  figure1,
};

std::string_view to_string(Family f);
/// Accepts the names printed by to_string ("complete", "random-oriented", ...).
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::figure1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t part1 = 0;
  std::size_t part2 = 0;
  double p_member = 0.5;
  double p_input = 0.5;
  double p_catalyst = 0.0;
  std::uint64_t seed = 0;

  bool operator==(const GeneratorSpec&) const = default;
};

inline constexpr int kGeneratorRetries = 100;
inline constexpr int kBipartiteRetries = 1000;

Hypergraph complete_graph(std::size_t n);
/// K_n without the (v0, v1) edge.
Hypergraph complete_minus_edge(std::size_t n);
/// Inputs from vertices [0, part1), outputs from [part1, part1 + part2);
/// every hyperedge has exactly c members. Connected and covering.
Hypergraph bipartite_constant(std::size_t part1, std::size_t part2, std::size_t m,
                              std::size_t c, std::uint64_t seed);
Hypergraph random_oriented(std::size_t n, std::size_t m, double p_member,
                           double p_input, std::uint64_t seed);
Hypergraph random_chemical(std::size_t n, std::size_t m, double p_member,
                           double p_input, double p_catalyst, std::uint64_t seed);
/// Two hyperedges on six vertices: ({0,1},{3,4}) and ({4,5},{1,2}).
Hypergraph figure1();

Hypergraph generate(const GeneratorSpec& spec);

}  // namespace hyperlap
