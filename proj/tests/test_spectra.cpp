#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperlap/error.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/spectra.hpp"
#include "oracles.hpp"

using namespace hyperlap;
using doctest::Approx;

namespace {

Hypergraph single_edge() { return complete_graph(2); }

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> f(n);
  for (double& x : f) x = u(rng);
  return f;
}

Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

}  // namespace

TEST_CASE("incidence") {
  const IncidenceMatrix e = incidence(single_edge());
  CHECK(e(0, 0) == 1);
  CHECK(e(0, 1) == -1);

  const IncidenceMatrix f = incidence(figure1());
  const int row0[] = {1, 1, 0, -1, -1, 0};
  const int row1[] = {0, -1, -1, 0, 1, 1};
  for (VertexId v = 0; v < 6; ++v) {
    CHECK(f(0, v) == row0[v]);
    CHECK(f(1, v) == row1[v]);
  }
}

TEST_CASE("incidence rows and columns count members and degrees") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph g = random_chemical(9, 7, 0.4, 0.5, 0.2, rng());
    const IncidenceMatrix inc = incidence(g);
    for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
      std::size_t nz = 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) nz += inc(h, v) != 0;
      CHECK(nz == cardinality(g, h));
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::size_t nz = 0;
      for (HyperedgeId h = 0; h < g.edge_count(); ++h) nz += inc(h, v) != 0;
      CHECK(nz == degree(g, v));
    }
  }
}

TEST_CASE("vertex_laplacian") {
  const Matrix l = vertex_laplacian(single_edge());
  CHECK(l(0, 0) == 1.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(1, 0) == -1.0);
  CHECK(l(1, 1) == 1.0);

  const Matrix k3 = vertex_laplacian(complete_graph(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k3(i, j) == Approx(i == j ? 1.0 : -0.5));
}

TEST_CASE("vertex_laplacian matches the pointwise definition") {
  std::mt19937_64 rng(2);
  const Hypergraph g = random_oriented(8, 9, 0.4, 0.5, 77);
  const Matrix l = vertex_laplacian(g);
  const auto deg = degrees(g);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_vector(g.vertex_count(), rng);
    const auto lf = l * std::span<const double>(f);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      // (1/deg v) * sum over hyperedges with v as input of the signed sum,
      // minus the same over hyperedges with v as output.
      double acc = 0.0;
      for (const Hyperedge& h : g.edges()) {
        double s = 0.0;
        for (VertexId w : h.inputs) s += f[w];
        for (VertexId w : h.outputs) s -= f[w];
        if (oracle::in(h.inputs, v)) acc += s;
        if (oracle::in(h.outputs, v)) acc -= s;
      }
      CHECK(lf[v] == Approx(acc / static_cast<double>(deg[v])).epsilon(1e-12));
    }
  }
}

TEST_CASE("apply_laplacian counts catalysts in both sums") {
  std::mt19937_64 rng(4);
  const Hypergraph g = random_chemical(7, 6, 0.5, 0.5, 0.3, 4242);
  const Matrix l = vertex_laplacian(strip_catalysts(g));
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_vector(g.vertex_count(), rng);
    const auto direct = apply_laplacian(g, f);
    const auto stripped = l * std::span<const double>(f);
    for (std::size_t v = 0; v < f.size(); ++v) CHECK(direct[v] == Approx(stripped[v]).epsilon(1e-12));
  }
}

TEST_CASE("symmetric_laplacian") {
  const Matrix s1 = symmetric_laplacian(single_edge());
  CHECK(s1 == vertex_laplacian(single_edge()));

  const Hypergraph g = random_chemical(10, 12, 0.4, 0.5, 0.1, 9);
  const Matrix s = symmetric_laplacian(g);
  CHECK((s - s.transpose()).max_abs() == 0.0);

  // Same spectrum as the nonsymmetric form, solved independently.
  const auto mine = spectrum(g).values;
  const auto ref = oracle::nonsymmetric_spectrum(g);
  REQUIRE(static_cast<Eigen::Index>(mine.size()) == ref.size());
  for (std::size_t i = 0; i < mine.size(); ++i) CHECK(std::abs(mine[i] - ref(i)) <= 1e-9);
}

TEST_CASE("hyperedge_laplacian") {
  const Matrix e = hyperedge_laplacian(single_edge());
  CHECK(e.rows() == 1);
  CHECK(e(0, 0) == 2.0);

  const Matrix f = hyperedge_laplacian(figure1());
  CHECK(f(0, 0) == Approx(3.0));
  CHECK(f(1, 1) == Approx(3.0));
  CHECK(f(0, 1) == Approx(-1.0));
  CHECK(f(1, 0) == Approx(-1.0));
}

TEST_CASE("vertex and hyperedge Laplacians share the nonzero spectrum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Hypergraph g = random_oriented(7, 5 + seed % 6, 0.4, 0.5, seed);
    const auto a = nonzero_eigenvalues(spectrum(g).values);
    const auto b = nonzero_eigenvalues(eig_symmetric(hyperedge_laplacian(g)).values);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9);
  }
}

TEST_CASE("eig_symmetric") {
  CHECK(eig_symmetric(Matrix::identity(3)).values == std::vector<double>{1, 1, 1});
  const double d[] = {3, 1, 2};
  const Spectrum s = eig_symmetric(Matrix::diagonal(d));
  CHECK(s.values == std::vector<double>{1, 2, 3});

  std::mt19937_64 rng(8);
  const Matrix a = random_symmetric(8, rng);
  const Spectrum r = eig_symmetric(a);
  REQUIRE(r.vectors);
  const Matrix& v = *r.vectors;
  const Matrix rebuilt = v * Matrix::diagonal(r.values) * v.transpose();
  CHECK((rebuilt - a).max_abs() <= 1e-10);
  CHECK((v.transpose() * v - Matrix::identity(8)).max_abs() <= 1e-10);
  for (std::size_t i = 0; i + 1 < r.values.size(); ++i) CHECK(r.values[i] <= r.values[i + 1]);

  const auto ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(oracle::to_eigen(a)).eigenvalues();
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(r.values[i] - ref(i)) <= 1e-10);
}

TEST_CASE("eig_symmetric residuals") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1, 2, 5, 17, 40}) {
    const Matrix a = random_symmetric(n, rng);
    const Spectrum r = eig_symmetric(a);
    for (std::size_t i = 0; i < n; ++i) {
      const auto col = r.vectors->column(i);
      const auto av = a * std::span<const double>(col);
      double res = 0.0;
      for (std::size_t k = 0; k < n; ++k) res += std::pow(av[k] - r.values[i] * col[k], 2);
      CHECK(std::sqrt(res) <= 1e-10 * std::max(1.0, a.frobenius_norm()));
    }
  }
}

TEST_CASE("eig_symmetric errors") {
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  try {
    eig_symmetric(a);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_symmetric);
  }
  std::mt19937_64 rng(1);
  const Matrix b = random_symmetric(30, rng);
  try {
    eig_symmetric(b, -1.0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_convergence);
  }
  Matrix c = Matrix::identity(3);
  c(1, 1) = std::nan("");
  try {
    eig_symmetric(c);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_convergence);
  }
}

TEST_CASE("spectrum of the standard fixtures") {
  for (std::size_t n = 2; n <= 8; ++n)
    CHECK(std::abs(spectrum(complete_graph(n)).max() - double(n) / double(n - 1)) <= 1e-9);
  for (std::size_t n = 3; n <= 8; ++n)
    CHECK(std::abs(spectrum(complete_minus_edge(n)).max() - double(n + 1) / double(n - 1)) <= 1e-9);
  CHECK(std::abs(spectrum(figure1()).max() - 4.0) <= 1e-9);
}

TEST_CASE("spectrum agrees with an independent solver") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const Hypergraph g = random_chemical(9, 8, 0.4, 0.5, 0.15, seed);
    const auto mine = spectrum(g).values;
    const auto ref = oracle::symmetric_spectrum(strip_catalysts(g));
    for (std::size_t i = 0; i < mine.size(); ++i) CHECK(std::abs(mine[i] - ref(i)) <= 1e-9);
  }
}

TEST_CASE("zero-degree vertices are rejected") {
  try {
    spectrum(Hypergraph(3, {{{0}, {1}}}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::zero_degree_vertex);
  }
}

TEST_CASE("rayleigh_vertex") {
  const std::vector<double> f{1.0, -1.0};
  CHECK(rayleigh_vertex(single_edge(), f) == 2.0);

  // Partition signs on a bipartite constant-cardinality hypergraph: the
  // quotient is the constant cardinality.
  const std::vector<double> signs{1, 1, 1, -1, -1, -1};
  CHECK(rayleigh_vertex(figure1(), signs) == Approx(4.0));

  std::mt19937_64 rng(21);
  const Hypergraph g = random_oriented(9, 10, 0.35, 0.5, 5);
  const double top = spectrum(g).max();
  for (int trial = 0; trial < 100; ++trial)
    CHECK(rayleigh_vertex(g, random_vector(9, rng)) <= top + 1e-9);

  CHECK(std::abs(rayleigh_vertex(g, top_eigenfunction(g)) - top) <= 1e-9);

  const std::vector<double> zero(2, 0.0);
  CHECK_THROWS_AS(rayleigh_vertex(single_edge(), zero), Error);
}

TEST_CASE("rayleigh_hyperedge") {
  const std::vector<double> one{1.0};
  CHECK(rayleigh_hyperedge(single_edge(), one) == 2.0);

  std::mt19937_64 rng(22);
  const Hypergraph g = random_oriented(9, 10, 0.35, 0.5, 6);
  const double top = spectrum(g).max();
  for (int trial = 0; trial < 100; ++trial)
    CHECK(rayleigh_hyperedge(g, random_vector(10, rng)) <= top + 1e-9);

  // Quotient of the hyperedge Laplacian matrix at gamma.
  const Matrix e = hyperedge_laplacian(g);
  const auto gamma = random_vector(10, rng);
  const auto eg = e * std::span<const double>(gamma);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    num += gamma[i] * eg[i];
    den += gamma[i] * gamma[i];
  }
  CHECK(rayleigh_hyperedge(g, gamma) == Approx(num / den).epsilon(1e-12));

  const std::vector<double> zero(1, 0.0);
  CHECK_THROWS_AS(rayleigh_hyperedge(single_edge(), zero), Error);
}

TEST_CASE("nonzero_eigenvalues") {
  const std::vector<double> v{-1e-10, 5e-9, 0.5, 2.0};
  CHECK(nonzero_eigenvalues(v) == std::vector<double>{0.5, 2.0});
  CHECK(nonzero_eigenvalues(v, 1e-12) == std::vector<double>{-1e-10, 5e-9, 0.5, 2.0});
}
