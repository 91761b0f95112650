#include "hyperlap/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperlap/error.hpp"
#include "hyperlap/rng.hpp"

namespace hyperlap {

namespace {

constexpr std::uint64_t kCatalystStream = 0xCA7A1;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::bad_parameter, what);
}

bool all_positive(const Hypergraph& g) {
  const auto deg = degrees(g);
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d > 0; });
}

// k distinct values from [lo, lo + count), ascending.
std::vector<VertexId> sample(CounterRng& rng, VertexId lo, std::size_t count,
                             std::size_t k) {
  std::vector<VertexId> pool(count);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(count - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

VertexId other_than(CounterRng& rng, VertexId u, std::size_t n) {
  return (u + 1 + rng.below(n - 1)) % n;
}

std::vector<Hyperedge> oriented_edges(CounterRng& rng, std::size_t n, std::size_t m,
                                      double p_member, double p_input) {
  std::vector<Hyperedge> edges(m);
  for (Hyperedge& h : edges) {
    for (VertexId v = 0; v < n; ++v) {
      if (!rng.bernoulli(p_member)) continue;
      (rng.bernoulli(p_input) ? h.inputs : h.outputs).push_back(v);
    }
    const std::size_t total = h.inputs.size() + h.outputs.size();
    if (total == 0) {
      const VertexId v = rng.below(n);
      h.inputs.push_back(v);
      h.outputs.push_back(other_than(rng, v, n));
    } else if (total == 1) {
      if (h.inputs.empty())
        h.inputs.push_back(other_than(rng, h.outputs.front(), n));
      else
        h.outputs.push_back(other_than(rng, h.inputs.front(), n));
    } else if (h.inputs.empty() || h.outputs.empty()) {
      auto& full = h.inputs.empty() ? h.outputs : h.inputs;
      auto& empty = h.inputs.empty() ? h.inputs : h.outputs;
      const std::size_t i = rng.below(full.size());
      empty.push_back(full[i]);
      full.erase(full.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return edges;
}

void check_random_params(std::size_t n, std::size_t m, double p_member, double p_input) {
  require(n >= 2, "random hypergraphs need n >= 2");
  require(m >= 1, "random hypergraphs need m >= 1");
  require(p_member > 0.0 && p_member <= 1.0, "p_member must lie in (0, 1]");
  require(p_input >= 0.0 && p_input <= 1.0, "p_input must lie in [0, 1]");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::complete_graph: return "complete";
    case Family::complete_minus_edge: return "complete-minus-edge";
    case Family::bipartite_constant: return "bipartite-constant";
    case Family::random_oriented: return "random-oriented";
    case Family::random_chemical: return "random-chemical";
    case Family::figure1: return "figure1";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::complete_graph, Family::complete_minus_edge,
                   Family::bipartite_constant, Family::random_oriented,
                   Family::random_chemical, Family::figure1})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::bad_parameter, "unknown family '" + std::string(name) + "'");
}

Hypergraph complete_graph(std::size_t n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Hyperedge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({{i}, {j}});
  return Hypergraph(n, std::move(edges));
}

Hypergraph complete_minus_edge(std::size_t n) {
  require(n >= 3, "complete graph minus an edge needs n >= 3");
  std::vector<Hyperedge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) edges.push_back({{i}, {j}});
  return Hypergraph(n, std::move(edges));
}

Hypergraph bipartite_constant(std::size_t part1, std::size_t part2, std::size_t m,
                              std::size_t c, std::uint64_t seed) {
  require(part1 >= 1 && part2 >= 1, "both parts need at least one vertex");
  require(c >= 2 && c <= part1 + part2, "cardinality must lie in [2, part1 + part2]");
  require(m >= 1, "need at least one hyperedge");
  const std::size_t lo = c > part2 ? c - part2 : 1;
  const std::size_t hi = std::min(part1, c - 1);
  const CounterRng root(seed);
  for (int attempt = 0; attempt < kBipartiteRetries; ++attempt) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(attempt));
    std::vector<Hyperedge> edges(m);
    for (Hyperedge& h : edges) {
      const std::size_t k = lo + rng.below(hi - lo + 1);
      h.inputs = sample(rng, 0, part1, k);
      h.outputs = sample(rng, part1, part2, c - k);
    }
    Hypergraph g(part1 + part2, std::move(edges));
    if (all_positive(g) && is_connected(g)) return g;
  }
  throw Error(ErrorKind::connectivity_retry_exhausted,
              "bipartite_constant: no connected covering instance in " +
                  std::to_string(kBipartiteRetries) + " attempts");
}

Hypergraph random_oriented(std::size_t n, std::size_t m, double p_member,
                           double p_input, std::uint64_t seed) {
  return random_chemical(n, m, p_member, p_input, 0.0, seed);
}

Hypergraph random_chemical(std::size_t n, std::size_t m, double p_member,
                           double p_input, double p_catalyst, std::uint64_t seed) {
  check_random_params(n, m, p_member, p_input);
  require(p_catalyst >= 0.0 && p_catalyst < 1.0, "p_catalyst must lie in [0, 1)");
  const CounterRng root(seed);
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(attempt));
    std::vector<Hyperedge> edges = oriented_edges(rng, n, m, p_member, p_input);
    if (p_catalyst > 0.0) {
      CounterRng cat = rng.split(kCatalystStream);
      for (Hyperedge& h : edges) {
        const std::vector<VertexId> in = h.inputs;
        const std::vector<VertexId> out = h.outputs;
        for (VertexId v : in)
          if (cat.bernoulli(p_catalyst)) h.outputs.push_back(v);
        for (VertexId v : out)
          if (cat.bernoulli(p_catalyst)) h.inputs.push_back(v);
      }
    }
    Hypergraph g(n, std::move(edges));
    // A vertex that is only ever a catalyst has degree 0 and triggers a re-roll.
    if (all_positive(g) && is_connected(strip_catalysts(g))) return g;
  }
  throw Error(ErrorKind::connectivity_retry_exhausted,
              "random hypergraph: no connected instance with positive degrees in " +
                  std::to_string(kGeneratorRetries) + " attempts");
}

Hypergraph figure1() {
  return Hypergraph(6, {{{0, 1}, {3, 4}}, {{4, 5}, {1, 2}}});
}

Hypergraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::complete_graph: return complete_graph(spec.n);
    case Family::complete_minus_edge: return complete_minus_edge(spec.n);
    case Family::bipartite_constant:
      return bipartite_constant(spec.part1, spec.part2, spec.m, spec.c, spec.seed);
    case Family::random_oriented:
      return random_oriented(spec.n, spec.m, spec.p_member, spec.p_input, spec.seed);
    case Family::random_chemical:
      return random_chemical(spec.n, spec.m, spec.p_member, spec.p_input,
                             spec.p_catalyst, spec.seed);
    case Family::figure1: return figure1();
  }
  throw Error(ErrorKind::bad_parameter, "unknown generator family");
}

}  // namespace hyperlap
