#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

/// Q = max_h sum_{v in h} 1/deg v over non-catalyst members.
struct QValue {
  double value = 0.0;
  HyperedgeId argmax = 0;  // lowest id among maximizers
  std::vector<double> per_edge;
};

QValue q_constant(const Hypergraph& g);

/// sum_v (1/deg v) |sum_{h: v in} gamma - sum_{h: v out} gamma| / sum_h |gamma|.
double l1_quotient(const Hypergraph& g, std::span<const double> gamma);

struct QCharacterization {
  bool pass = false;
  double q = 0.0;
  double lambda_max = 0.0;
  double indicator_value = 0.0;     // quotient at the argmax indicator
  double worst_quotient = 0.0;      // largest sampled quotient
  std::size_t worst_sample = 0;
  bool indicator_attains = false;   // |indicator_value - q| <= 1e-12
  bool dominated = false;           // every sample <= q + 1e-12
  bool below_lambda = false;        // q <= lambda_max + 1e-8
};

/// Checks the L1 characterization of Q on `samples` random hyperedge
/// functions with coordinates uniform on [-1, 1].
QCharacterization verify_q_characterization(const Hypergraph& g, std::size_t samples,
                                            std::uint64_t seed);

}  // namespace hyperlap
