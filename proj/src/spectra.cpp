#include "hyperlap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperlap/error.hpp"

namespace hyperlap {

namespace {

std::vector<double> positive_degrees(const Hypergraph& g) {
  const auto deg = degrees(g);
  std::vector<double> d(deg.size());
  for (VertexId v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0)
      throw Error(ErrorKind::zero_degree_vertex,
                  "vertex " + std::to_string(v) + " has degree 0");
    d[v] = static_cast<double>(deg[v]);
  }
  return d;
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// A <- J^T A J for the rotation in the (p, q) plane; V <- V J.
void rotate(Matrix& a, Matrix* v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const double vkp = (*v)(k, p);
      const double vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * vkq;
      (*v)(k, q) = s * vkp + c * vkq;
    }
  }
}

}  // namespace

Matrix IncidenceMatrix::to_matrix() const {
  Matrix m(edges_, vertices_);
  for (HyperedgeId h = 0; h < edges_; ++h)
    for (VertexId v = 0; v < vertices_; ++v) m(h, v) = (*this)(h, v);
  return m;
}

IncidenceMatrix incidence(const Hypergraph& g) {
  IncidenceMatrix inc(g.edge_count(), g.vertex_count());
  for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
    const Hyperedge& e = g.edge(h);
    for (VertexId v : e.inputs) inc.at(h, v) += 1;
    for (VertexId v : e.outputs) inc.at(h, v) -= 1;
  }
  return inc;
}

Matrix vertex_laplacian(const Hypergraph& g) {
  const auto d = positive_degrees(g);
  const IncidenceMatrix inc = incidence(g);
  const std::size_t n = g.vertex_count();
  Matrix l(n, n);
  for (HyperedgeId h = 0; h < inc.edge_count(); ++h)
    for (VertexId i = 0; i < n; ++i) {
      const int a = inc(h, i);
      if (a == 0) continue;
      for (VertexId j = 0; j < n; ++j) l(i, j) += a * inc(h, j);
    }
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = 0; j < n; ++j) l(i, j) /= d[i];
  return l;
}

Matrix symmetric_laplacian(const Hypergraph& g) {
  const auto d = positive_degrees(g);
  const IncidenceMatrix inc = incidence(g);
  const std::size_t n = g.vertex_count();
  std::vector<double> gram(n * n, 0.0);
  for (HyperedgeId h = 0; h < inc.edge_count(); ++h)
    for (VertexId i = 0; i < n; ++i) {
      const int a = inc(h, i);
      if (a == 0) continue;
      for (VertexId j = i; j < n; ++j) gram[i * n + j] += a * inc(h, j);
    }
  Matrix s(n, n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i; j < n; ++j) {
      const double x = gram[i * n + j] / std::sqrt(d[i] * d[j]);
      s(i, j) = x;
      s(j, i) = x;
    }
  return s;
}

Matrix hyperedge_laplacian(const Hypergraph& g) {
  const auto d = positive_degrees(g);
  const IncidenceMatrix inc = incidence(g);
  const std::size_t m = g.edge_count();
  Matrix l(m, m);
  for (HyperedgeId a = 0; a < m; ++a)
    for (HyperedgeId b = a; b < m; ++b) {
      double x = 0.0;
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        x += inc(a, v) * inc(b, v) / d[v];
      l(a, b) = x;
      l(b, a) = x;
    }
  return l;
}

std::vector<double> apply_laplacian(const Hypergraph& g, std::span<const double> f) {
  if (f.size() != g.vertex_count())
    throw Error(ErrorKind::bad_parameter, "vertex function has wrong length");
  const auto deg = degrees(g);
  std::vector<double> flux(g.edge_count(), 0.0);
  for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
    const Hyperedge& e = g.edge(h);
    for (VertexId v : e.inputs) flux[h] += f[v];
    for (VertexId w : e.outputs) flux[h] -= f[w];
  }
  std::vector<double> out(g.vertex_count(), 0.0);
  for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
    const Hyperedge& e = g.edge(h);
    for (VertexId v : e.inputs) out[v] += flux[h];
    for (VertexId v : e.outputs) out[v] -= flux[h];
  }
  for (VertexId v = 0; v < out.size(); ++v) {
    if (deg[v] == 0)
      throw Error(ErrorKind::zero_degree_vertex,
                  "vertex " + std::to_string(v) + " has degree 0");
    out[v] /= static_cast<double>(deg[v]);
  }
  return out;
}

Spectrum eig_symmetric(const Matrix& a_in, double tol, bool want_vectors) {
  if (a_in.rows() != a_in.cols())
    throw Error(ErrorKind::not_symmetric, "matrix is not square");
  const std::size_t n = a_in.rows();
  const double scale = a_in.max_abs();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a_in(i, j) - a_in(j, i)) > 1e-12 * scale)
        throw Error(ErrorKind::not_symmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) +
                        ") and their transpose differ");

  Matrix a = a_in;
  std::optional<Matrix> v;
  if (want_vectors) v = Matrix::identity(n);

  const double target = tol * a.frobenius_norm();
  int sweep = 0;
  while (!(off_diagonal_norm(a) <= target)) {  // also catches NaN
    if (sweep++ == kJacobiMaxSweeps)
      throw Error(ErrorKind::no_convergence,
                  "Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) +
                      " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v ? &*v : nullptr, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  Spectrum out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (v) {
    Matrix sorted(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) sorted(r, k) = (*v)(r, order[k]);
    out.vectors = std::move(sorted);
  }
  return out;
}

Spectrum spectrum(const Hypergraph& g, bool want_vectors) {
  return eig_symmetric(symmetric_laplacian(g), kJacobiTolerance, want_vectors);
}

std::vector<double> nonzero_eigenvalues(std::span<const double> values, double zero_tol) {
  std::vector<double> out;
  for (double x : values)
    if (std::abs(x) > zero_tol) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

double rayleigh_vertex(const Hypergraph& g, std::span<const double> f) {
  if (f.size() != g.vertex_count())
    throw Error(ErrorKind::bad_parameter, "vertex function has wrong length");
  if (std::all_of(f.begin(), f.end(), [](double x) { return x == 0.0; }))
    throw Error(ErrorKind::zero_function, "Rayleigh quotient of the zero function");
  double num = 0.0;
  for (const Hyperedge& h : g.edges()) {
    double flux = 0.0;
    for (VertexId v : h.inputs) flux += f[v];
    for (VertexId w : h.outputs) flux -= f[w];
    num += flux * flux;
  }
  const auto deg = degrees(g);
  double den = 0.0;
  for (VertexId v = 0; v < f.size(); ++v) den += static_cast<double>(deg[v]) * f[v] * f[v];
  if (den == 0.0)
    throw Error(ErrorKind::zero_function, "function vanishes on all positive-degree vertices");
  return num / den;
}

double rayleigh_hyperedge(const Hypergraph& g, std::span<const double> gamma,
                          std::optional<std::span<const VertexId>> restrict_to) {
  if (gamma.size() != g.edge_count())
    throw Error(ErrorKind::bad_parameter, "hyperedge function has wrong length");
  double den = 0.0;
  for (double x : gamma) den += x * x;
  if (den == 0.0)
    throw Error(ErrorKind::zero_function, "Rayleigh quotient of the zero function");

  std::vector<double> net(g.vertex_count(), 0.0);
  for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
    const Hyperedge& e = g.edge(h);
    for (VertexId v : e.inputs) net[v] += gamma[h];
    for (VertexId v : e.outputs) net[v] -= gamma[h];
  }
  const auto deg = degrees(g);
  auto term = [&](VertexId v) {
    return deg[v] == 0 ? 0.0 : net[v] * net[v] / static_cast<double>(deg[v]);
  };
  double num = 0.0;
  if (restrict_to) {
    for (VertexId v : *restrict_to) num += term(v);
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) num += term(v);
  }
  return num / den;
}

std::vector<double> top_eigenfunction(const Hypergraph& g) {
  const auto d = positive_degrees(g);
  const Spectrum s = spectrum(g, true);
  std::vector<double> f = s.vectors->column(g.vertex_count() - 1);
  for (VertexId v = 0; v < f.size(); ++v) f[v] /= std::sqrt(d[v]);
  return f;
}

}  // namespace hyperlap
