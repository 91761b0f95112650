// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.
#include <boost/rational.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperlap/bounds.hpp"
#include "hyperlap/cheeger.hpp"
#include "hyperlap/generators.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/spectra.hpp"
#include "hyperlap/verify.hpp"
#include "oracles.hpp"

using namespace hyperlap;

namespace {

constexpr double kSpectral = 1e-9;
constexpr double kBound = 1e-8;
constexpr double kExactQ = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure reasons of a criterion.
struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& why) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

bool touches(const Hyperedge& h, VertexId v) {
  return oracle::in(h.inputs, v) || oracle::in(h.outputs, v);
}

Outcome complete_graphs() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const double lambda = spectrum(complete_graph(n)).max();
    const double want = double(n) / double(n - 1);
    worst = std::max(worst, std::abs(lambda - want));
    o.require(std::abs(lambda - want) <= kSpectral, fmt("K_%g: lambda %.17g", double(n), lambda));
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, fmt("runtime %.3f s", t));
  o.detail = fmt("N=2..8, max |lambda - N/(N-1)| = %.2e, %.3f s", worst, t);
  return o;
}

Outcome complete_minus_edge_graphs() {
  Outcome o;
  double worst = 0.0;
  for (std::size_t n = 3; n <= 8; ++n) {
    const Hypergraph g = complete_minus_edge(n);
    const double lambda = spectrum(g).max();
    const double want = double(n + 1) / double(n - 1);
    const BipartiteSub best = best_bipartite_sub_exact(g);
    worst = std::max({worst, std::abs(lambda - want), std::abs(best.eta.value - lambda)});
    o.require(std::abs(lambda - want) <= kSpectral, fmt("N=%g: lambda %.17g", double(n), lambda));
    o.require(std::abs(best.eta.value - lambda) <= kSpectral,
              fmt("N=%g: eta* %.17g vs lambda %.17g", double(n), best.eta.value, lambda));
    for (const SubEdge& e : best.sub.edges)
      o.require(touches(g.edge(e.source), 0) || touches(g.edge(e.source), 1),
                fmt("N=%g: witness edge %g avoids v0 and v1", double(n), double(e.source)));
  }
  o.detail = fmt("N=3..8, max deviation %.2e", worst);
  return o;
}

Outcome upper_equality() {
  Outcome o;
  std::size_t built = 0;
  for (std::size_t k = 0; k < 50; ++k) {
    const std::size_t c = 2 + k % 4;
    const std::size_t p1 = 3 + k % 3, p2 = 3 + (k / 3) % 3;
    const Hypergraph g = bipartite_constant(p1, p2, 14, c, 500 + k);
    ++built;
    const double lambda = spectrum(g).max();
    const UpperEquality eq = check_upper_equality(g);
    o.require(std::abs(lambda - double(c)) <= kBound,
              fmt("bipartite seed %g: lambda %.17g, c %g", double(500 + k), lambda, double(c)));
    o.require(eq.is_equality && eq.bipartite && eq.constant_cardinality,
              fmt("bipartite seed %g: characterization not (true,true,true)", double(500 + k)));
  }

  std::size_t unequal = 0;
  double min_gap = 1e300;
  for (std::uint64_t seed = 0; unequal < 200 && seed < 10000; ++seed) {
    const Hypergraph g = random_oriented(4 + seed % 9, 4 + seed % 9 + seed % 6, 0.35, 0.5, seed);
    const UpperEquality eq = check_upper_equality(g);
    if (eq.is_equality) continue;
    ++unequal;
    const double gap = double(max_cardinality(g)) - spectrum(g).max();
    min_gap = std::min(min_gap, gap);
    o.require(gap >= -kBound, fmt("oriented seed %g: lambda exceeds max|h| by %.3e", double(seed), -gap));
    o.require(gap > kBound, fmt("oriented seed %g: no strict gap (%.3e)", double(seed), gap));
  }
  o.require(unequal == 200, "fewer than 200 non-equality instances");
  o.detail = fmt("%g bipartite constant-cardinality at lambda=c; %g others, min gap %.3e",
                 double(built), double(unequal), min_gap);
  return o;
}

Outcome lower_bound() {
  Outcome o;
  double worst_excess = -1e300;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 10;  // up to 12
    const Hypergraph g = random_oriented(n, n + seed % 5, 0.35, 0.5, 10000 + seed);
    const double lambda = spectrum(g).max();
    const BipartiteSub exact = best_bipartite_sub_exact(g);
    GreedyOptions go;
    go.seed = seed;
    const BipartiteSub greedy = best_bipartite_sub_greedy(g, go);
    worst_excess = std::max(worst_excess, exact.eta.value - lambda);
    o.require(exact.eta.value <= lambda + kBound,
              fmt("seed %g: eta* %.17g > lambda %.17g", double(10000 + seed), exact.eta.value, lambda));
    o.require(greedy.eta.value <= exact.eta.value,
              fmt("seed %g: greedy %.17g > exact %.17g", double(10000 + seed), greedy.eta.value,
                  exact.eta.value));
  }
  o.detail = fmt("200 instances N<=12, max(eta* - lambda) = %.3e", worst_excess);
  return o;
}

Outcome cheeger_constant() {
  Outcome o;
  std::size_t instances = 0;
  double worst_sample = -1e300;
  // Q <= lambda on every generated family; the sampling check on 20 of them.
  std::vector<Hypergraph> all;
  for (std::size_t n = 2; n <= 8; ++n) all.push_back(complete_graph(n));
  for (std::size_t n = 3; n <= 8; ++n) all.push_back(complete_minus_edge(n));
  all.push_back(figure1());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 4 + seed % 9;
    all.push_back(random_oriented(n, n + seed % 7, 0.35, 0.5, 20000 + seed));
    all.push_back(random_chemical(n, n + seed % 7, 0.4, 0.5, 0.2, 30000 + seed));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    all.push_back(bipartite_constant(4, 4, 10, 2 + seed % 4, 40000 + seed));

  for (std::size_t i = 0; i < all.size(); ++i) {
    const Hypergraph& g = all[i];
    const QValue q = q_constant(g);
    const double lambda = spectrum(g).max();
    o.require(q.value <= lambda + kBound, fmt("instance %g: Q %.17g > lambda %.17g", double(i), q.value, lambda));
    std::vector<double> indicator(g.edge_count(), 0.0);
    indicator[q.argmax] = 1.0;
    const double attained = l1_quotient(g, indicator);
    o.require(std::abs(attained - q.value) <= kExactQ,
              fmt("instance %g: indicator gives %.17g, Q %.17g", double(i), attained, q.value));
  }
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Hypergraph g = random_oriented(5 + k % 8, 5 + k % 8 + k % 5, 0.35, 0.5, 50000 + k);
    const QCharacterization qc = verify_q_characterization(g, 1000, 50000 + k);
    worst_sample = std::max(worst_sample, qc.worst_quotient - qc.q);
    o.require(qc.dominated, fmt("sampled instance %g: quotient exceeds Q by %.3e", double(k),
                                qc.worst_quotient - qc.q));
    ++instances;
  }
  o.detail = fmt("Q <= lambda on %g instances; %g x 1000 samples, max(quotient - Q) = %.3e",
                 double(all.size()), double(instances), worst_sample);
  return o;
}

Outcome isospectrality() {
  Outcome o;
  double worst = 0.0;
  std::size_t with_catalysts = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hypergraph g = random_chemical(4 + seed % 9, 4 + seed % 9 + seed % 5, 0.45, 0.5, 0.25, 60000 + seed);
    with_catalysts += !is_catalyst_free(g);
    const auto raw = spectrum_by_definition(g).values;
    const auto stripped = spectrum(strip_catalysts(g)).values;
    for (std::size_t i = 0; i < raw.size(); ++i) worst = std::max(worst, std::abs(raw[i] - stripped[i]));
  }
  o.require(worst <= kSpectral, fmt("max elementwise difference %.3e", worst));
  o.detail = fmt("100 instances (%g with catalysts), max difference %.2e", double(with_catalysts), worst);
  return o;
}

Outcome spectral_invariants() {
  Outcome o;
  const auto t0 = Clock::now();
  double trace_worst = 0.0, dual_worst = 0.0, flip_worst = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 4 + seed % 13;
    const std::size_t m = n + seed % 7;
    const Hypergraph g = seed % 2 ? random_chemical(n, m, 0.35, 0.5, 0.15, 70000 + seed)
                                  : random_oriented(n, m, 0.35, 0.5, 70000 + seed);
    const Hypergraph s = strip_catalysts(g);
    const auto values = spectrum(s).values;
    double trace = 0.0;
    for (double x : values) trace += x;
    trace_worst = std::max(trace_worst, std::abs(trace - double(n)));

    const auto a = nonzero_eigenvalues(values);
    const auto b = nonzero_eigenvalues(eig_symmetric(hyperedge_laplacian(s)).values);
    if (a.size() != b.size()) {
      o.require(false, fmt("seed %g: nonzero counts %g vs %g", double(70000 + seed), double(a.size()),
                           double(b.size())));
    } else {
      for (std::size_t i = 0; i < a.size(); ++i) dual_worst = std::max(dual_worst, std::abs(a[i] - b[i]));
    }

    CounterRng rng = CounterRng(seed).split(0xF11F);
    Hypergraph f = g;
    for (int k = 0; k < 10; ++k) {
      f = flip_orientation(f, rng.below(g.edge_count()));
      const auto fv = spectrum(f).values;
      for (std::size_t i = 0; i < fv.size(); ++i) flip_worst = std::max(flip_worst, std::abs(fv[i] - values[i]));
    }
  }
  const double t = seconds_since(t0);
  o.require(trace_worst <= kSpectral, fmt("trace residual %.3e", trace_worst));
  o.require(dual_worst <= kSpectral, fmt("duality residual %.3e", dual_worst));
  o.require(flip_worst <= kSpectral, fmt("flip residual %.3e", flip_worst));
  o.require(t < 60.0, fmt("runtime %.1f s", t));
  o.detail = fmt("500 instances: trace %.1e, duality %.1e, flips %.1e", trace_worst, dual_worst, flip_worst) +
             fmt(", %.2f s", t);
  return o;
}

Outcome figure1_fixture() {
  Outcome o;
  const Hypergraph g = figure1();
  const auto b = find_bipartition(g);
  o.require(b && b->part(1) == std::vector<VertexId>{0, 1, 2} &&
                b->part(2) == std::vector<VertexId>{3, 4, 5},
            "bipartition is not {v0,v1,v2}/{v3,v4,v5}");
  const double lambda = spectrum(g).max();
  o.require(std::abs(lambda - 4.0) <= kSpectral, fmt("lambda %.17g", lambda));

  using Rational = boost::rational<long long>;
  const auto deg = degrees(g);
  Rational q(0);
  for (const Hyperedge& h : g.edges()) {
    Rational s(0);
    for (VertexId v : members(h)) s += Rational(1, static_cast<long long>(deg[v]));
    q = std::max(q, s);
  }
  o.require(q == Rational(3), "rational Q is not 3");
  o.require(q_constant(g).value == 3.0, "floating Q is not exactly 3");
  o.detail = fmt("lambda = %.17g, Q = %g/%g", lambda, double(q.numerator()), double(q.denominator()));
  return o;
}

Outcome graph_specialization() {
  Outcome o;
  std::mt19937_64 rng(80000);
  double min_margin = 1e300;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 3 + rng() % 14;
    const Hypergraph g = oracle::random_connected_graph(n, 0.05 + 0.1 * (k % 8), rng);
    const double lambda = spectrum(g).max();
    const double floor = double(n) / double(n - 1);
    o.require(lambda <= 2.0 + kSpectral, fmt("graph %g: lambda %.17g > 2", double(k), lambda));
    o.require(lambda >= floor - kSpectral, fmt("graph %g: lambda %.17g < N/(N-1)", double(k), lambda));
    const auto deg = degrees(g);
    for (VertexId v = 0; v < n; ++v) {
      std::vector<HyperedgeId> star;
      double expected = 1.0;
      for (HyperedgeId h = 0; h < g.edge_count(); ++h)
        if (touches(g.edge(h), v)) {
          star.push_back(h);
          const VertexId w = g.edge(h).inputs[0] == v ? g.edge(h).outputs[0] : g.edge(h).inputs[0];
          expected += 1.0 / (double(deg[w]) * double(deg[v]));
        }
      const double e = eta(g, edge_sub(g, star)).value;
      o.require(std::abs(e - expected) <= 1e-12, fmt("graph %g: star eta %.17g vs %.17g", double(k), e, expected));
      o.require(e >= floor - 1e-12, fmt("graph %g: star eta %.17g < N/(N-1)", double(k), e));
      o.require(e <= lambda + kSpectral, fmt("graph %g: star eta %.17g > lambda", double(k), e));
      min_margin = std::min(min_margin, lambda - floor);
    }
  }
  o.detail = fmt("50 graphs, every star eta in [N/(N-1), lambda]; min(lambda - N/(N-1)) = %.3e", min_margin);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"complete graphs", complete_graphs},
      {"complete graph minus an edge", complete_minus_edge_graphs},
      {"upper bound equality", upper_equality},
      {"lower bound", lower_bound},
      {"cheeger-like constant", cheeger_constant},
      {"isospectral stripping", isospectrality},
      {"spectral invariants", spectral_invariants},
      {"figure1 fixture", figure1_fixture},
      {"graph specialization", graph_specialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    failed += !o.pass;
  }
  std::fflush(stdout);
  return failed;
}
