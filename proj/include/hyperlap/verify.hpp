#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlap/generators.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

struct Check {
  std::string name;
  bool pass = true;
  bool skipped = false;
  double residual = 0.0;
};

/// Fixed order of the checks in every InstanceResult (and CSV column order).
const std::vector<std::string>& check_names();

struct InstanceResult {
  std::string family;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double lambda_max = 0.0;
  std::size_t upper = 0;
  double eta_star = 0.0;
  bool eta_exact = false;
  double q = 0.0;
  bool bipartite = false;
  bool constant_cardinality = false;
  std::vector<Check> checks;

  bool pass() const;
  /// Largest residual among failed checks (0 if all pass).
  double worst_residual() const;
};

struct VerifyOptions {
  double tolerance = 1e-8;           // bound and equality checks
  double spectral_tolerance = 1e-9;  // elementwise spectral comparisons
  std::size_t exact_limit = 12;
  std::size_t restarts = 8;
  std::size_t q_samples = 1000;
  std::size_t flips = 10;
};

/// Spectrum of L assembled column by column from apply_laplacian, so that
/// catalysts are never stripped, then symmetrised with D^{1/2}.
Spectrum spectrum_by_definition(const Hypergraph& g);

/// Runs the whole property battery on one connected, validated hypergraph.
InstanceResult verify_instance(const Hypergraph& g, std::uint64_t seed,
                               const VerifyOptions& opts = {});

/// Generates and verifies every spec; results keep the input order however
/// many jobs run.
std::vector<InstanceResult> verify_ensemble(const std::vector<GeneratorSpec>& specs,
                                            const VerifyOptions& opts, unsigned jobs = 1);

}  // namespace hyperlap
