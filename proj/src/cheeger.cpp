#include "hyperlap/cheeger.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlap/error.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

QValue q_constant(const Hypergraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::bad_parameter, "Q needs a hyperedge");
  const auto deg = degrees(g);
  QValue q;
  q.per_edge.reserve(g.edge_count());
  for (const Hyperedge& h : g.edges()) {
    double s = 0.0;
    for (VertexId v : members(h)) s += 1.0 / static_cast<double>(deg[v]);
    q.per_edge.push_back(s);
  }
  const auto it = std::max_element(q.per_edge.begin(), q.per_edge.end());
  q.argmax = static_cast<HyperedgeId>(it - q.per_edge.begin());
  q.value = *it;
  return q;
}

double l1_quotient(const Hypergraph& g, std::span<const double> gamma) {
  if (gamma.size() != g.edge_count())
    throw Error(ErrorKind::bad_parameter, "hyperedge function has wrong length");
  double den = 0.0;
  for (double x : gamma) den += std::abs(x);
  if (den == 0.0) throw Error(ErrorKind::zero_function, "L1 quotient of the zero function");

  std::vector<double> net(g.vertex_count(), 0.0);
  for (HyperedgeId h = 0; h < g.edge_count(); ++h) {
    for (VertexId v : g.edge(h).inputs) net[v] += gamma[h];
    for (VertexId v : g.edge(h).outputs) net[v] -= gamma[h];
  }
  const auto deg = degrees(g);
  double num = 0.0;
  for (VertexId v = 0; v < net.size(); ++v)
    if (deg[v] > 0) num += std::abs(net[v]) / static_cast<double>(deg[v]);
  return num / den;
}

QCharacterization verify_q_characterization(const Hypergraph& g, std::size_t samples,
                                            std::uint64_t seed) {
  QCharacterization r;
  const QValue q = q_constant(g);
  r.q = q.value;
  r.lambda_max = spectrum(g).max();

  std::vector<double> gamma(g.edge_count(), 0.0);
  gamma[q.argmax] = 1.0;
  r.indicator_value = l1_quotient(g, gamma);
  r.indicator_attains = std::abs(r.indicator_value - r.q) <= 1e-12;

  // Each sample draws from its own sub-stream so the verdict does not depend
  // on evaluation order.
  const CounterRng root(seed);
  r.worst_quotient = -1.0;
  for (std::size_t s = 0; s < samples; ++s) {
    CounterRng rng = root.split(s);
    do {
      for (double& x : gamma) x = rng.uniform(-1.0, 1.0);
    } while (std::all_of(gamma.begin(), gamma.end(), [](double x) { return x == 0.0; }));
    const double value = l1_quotient(g, gamma);
    if (value > r.worst_quotient) {
      r.worst_quotient = value;
      r.worst_sample = s;
    }
  }
  r.dominated = samples == 0 || r.worst_quotient <= r.q + 1e-12;
  r.below_lambda = r.q <= r.lambda_max + 1e-8;
  r.pass = r.indicator_attains && r.dominated && r.below_lambda;
  return r;
}

}  // namespace hyperlap
