#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

/// eta = (sum_{v in sub} deg_sub(v)^2 / deg v) / |sub edges|.
struct EtaValue {
  double value = 0.0;
  double numerator = 0.0;
  std::size_t denominator = 0;
};

/// Ambient degrees come from g. Throws no_induced_edges when sub is empty.
EtaValue eta(const Hypergraph& g, const SubHypergraph& sub);

std::size_t max_cardinality(const Hypergraph& g);

struct UpperEquality {
  bool is_equality = false;
  bool bipartite = false;
  bool constant_cardinality = false;
};

/// Combinatorial test for lambda_N == max |h|. Throws disconnected_input.
UpperEquality check_upper_equality(const Hypergraph& g);

/// Which sub-hypergraphs the lower-bound search ranges over.
///
/// induced: vertex subsets, every hyperedge restricted to the subset, kept
/// only if the result is bipartite.
///
/// signed_selection: a vertex subset together with a 2-colouring; every
/// hyperedge meeting the subset whose restriction agrees with the colouring
/// (inputs on one side, outputs on the other) is kept, the rest dropped.
/// The searches also consider the sub-hypergraph generated by each single
/// hyperedge. This contains every bipartite induced sub-hypergraph as well as
/// edge-generated ones such as the star of a vertex in a graph.
enum class SearchDomain { induced, signed_selection };

/// Vertex colouring with values in {-1, 0, +1}; 0 = not selected.
using Selection = std::vector<std::int8_t>;

/// Sub-hypergraph picked by a selection in the signed domain.
SubHypergraph signed_sub(const Hypergraph& g, const Selection& sel);

struct BipartiteSub {
  EtaValue eta;
  SubHypergraph sub;
  Bipartition partition;
};

struct ExactOptions {
  std::size_t n_limit = 16;
  SearchDomain domain = SearchDomain::signed_selection;
  unsigned threads = 1;
};

/// Exhaustive maximum of eta. Ties go to the lexicographically smallest
/// vertex subset, then the smallest side vector. Throws too_large when
/// N > n_limit and no_induced_edges if nothing qualifies.
BipartiteSub best_bipartite_sub_exact(const Hypergraph& g, const ExactOptions& opts = {});

struct GreedyOptions {
  std::uint64_t seed = 0;
  std::size_t restarts = 8;
  SearchDomain domain = SearchDomain::signed_selection;
  /// Called on every state the search accepts, including starting points.
  std::function<void(const BipartiteSub&)> on_visit;
};

/// Steepest-ascent local search from every single-hyperedge seed plus
/// `restarts` random starting points.
BipartiteSub best_bipartite_sub_greedy(const Hypergraph& g, const GreedyOptions& opts = {});

struct BoundsOptions {
  std::size_t n_limit = 16;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  double tolerance = 1e-8;
  SearchDomain domain = SearchDomain::signed_selection;
  unsigned threads = 1;
};

struct BoundsReport {
  double lambda_max = 0.0;
  std::size_t upper = 0;
  UpperEquality upper_equality;
  bool spectral_equality = false;  // |lambda_N - upper| <= tolerance
  BipartiteSub lower;
  bool lower_is_exact = false;
  double upper_gap = 0.0;  // upper - lambda_N
  double lower_gap = 0.0;  // lambda_N - eta*
};

/// Requires a connected hypergraph; throws bound_violation if the sandwich
/// eta* <= lambda_N <= max|h| fails beyond tolerance.
BoundsReport bounds_report(const Hypergraph& g, const BoundsOptions& opts = {});

/// Indicator construction: reorient g so that every kept hyperedge has its
/// side-1 vertices as inputs, and return the indicator of the kept hyperedges.
struct ReorientedIndicator {
  Hypergraph reoriented;
  std::vector<double> gamma;
};
ReorientedIndicator reoriented_indicator(const Hypergraph& g, const SubHypergraph& sub,
                                         const Bipartition& partition);

}  // namespace hyperlap
