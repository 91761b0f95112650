#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// Signed M x N incidence: +1 input-only, -1 output-only, 0 otherwise.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t edges, std::size_t vertices)
      : edges_(edges), vertices_(vertices), data_(edges * vertices, 0) {}

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_; }

  int operator()(HyperedgeId h, VertexId v) const { return data_[h * vertices_ + v]; }
  std::int8_t& at(HyperedgeId h, VertexId v) { return data_[h * vertices_ + v]; }

  Matrix to_matrix() const;

 private:
  std::size_t edges_;
  std::size_t vertices_;
  std::vector<std::int8_t> data_;
};

/// Sorted eigenvalues, with eigenvectors stored as columns when requested.
struct Spectrum {
  std::vector<double> values;
  std::optional<Matrix> vectors;

  double max() const { return values.back(); }
  double min() const { return values.front(); }
};

IncidenceMatrix incidence(const Hypergraph& g);

/// D^{-1} I^T I.
Matrix vertex_laplacian(const Hypergraph& g);

/// D^{-1/2} I^T I D^{-1/2}; exactly symmetric.
Matrix symmetric_laplacian(const Hypergraph& g);

/// I D^{-1} I^T, acting on functions of the hyperedges.
Matrix hyperedge_laplacian(const Hypergraph& g);

/// Lf(v) evaluated term by term from the operator's definition, counting a
/// catalyst hyperedge in both its input and output sums. Works directly on
/// chemical hypergraphs without stripping.
std::vector<double> apply_laplacian(const Hypergraph& g, std::span<const double> f);

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi eigensolver. Stops when the off-diagonal Frobenius norm is
/// at most tol * ||A||_F; throws not_symmetric / no_convergence.
Spectrum eig_symmetric(const Matrix& a, double tol = kJacobiTolerance,
                       bool want_vectors = true);

/// Spectrum of the normalized Laplacian (catalysts handled implicitly).
Spectrum spectrum(const Hypergraph& g, bool want_vectors = false);

inline constexpr double kZeroEigenvalue = 1e-8;

std::vector<double> nonzero_eigenvalues(std::span<const double> values,
                                        double zero_tol = kZeroEigenvalue);

/// sum_h (sum_{in} f - sum_{out} f)^2 / sum_v deg v f(v)^2
double rayleigh_vertex(const Hypergraph& g, std::span<const double> f);

/// sum_v (1/deg v)(sum_{h: v in} gamma - sum_{h: v out} gamma)^2 / sum_h gamma^2.
/// With restrict_to, the outer sum runs over those vertices only.
double rayleigh_hyperedge(const Hypergraph& g, std::span<const double> gamma,
                          std::optional<std::span<const VertexId>> restrict_to = {});

/// Top eigenvector of the symmetric form moved back by D^{-1/2}, i.e. an
/// eigenfunction of L for the largest eigenvalue.
std::vector<double> top_eigenfunction(const Hypergraph& g);

}  // namespace hyperlap
