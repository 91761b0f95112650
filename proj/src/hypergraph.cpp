#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperlap/error.hpp"

namespace hyperlap {

namespace {

void normalize(std::vector<VertexId>& side) {
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
}

bool has(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<VertexId> difference(const std::vector<VertexId>& a,
                                 const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<VertexId> intersect(const std::vector<VertexId>& a,
                                std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Union-find where each node stores its parity relative to its parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, std::uint8_t> find(std::size_t x) {
    std::uint8_t p = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, re-deriving parities on the way.
    std::uint8_t acc = p;
    while (parent_[x] != root && parent_[x] != x) {
      const std::size_t next = parent_[x];
      const std::uint8_t px = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {root, p};
  }

  /// Requires parity(a) ^ parity(b) == rel. Returns false on conflict.
  bool relate(std::size_t a, std::size_t b, std::uint8_t rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> parity_;
};

std::optional<Bipartition> colour(std::size_t vertex_count,
                                  std::span<const VertexId> vertices,
                                  std::span<const SubEdge> edges) {
  ParityUnionFind uf(vertex_count);
  for (const SubEdge& e : edges) {
    // Catalysts impose "v opposite v"; analyse the stripped edge.
    const auto in = difference(e.inputs, e.outputs);
    const auto out = difference(e.outputs, e.inputs);
    for (std::size_t i = 1; i < in.size(); ++i)
      if (!uf.relate(in[0], in[i], 0)) return std::nullopt;
    for (std::size_t i = 1; i < out.size(); ++i)
      if (!uf.relate(out[0], out[i], 0)) return std::nullopt;
    if (!in.empty() && !out.empty())
      if (!uf.relate(in[0], out[0], 1)) return std::nullopt;
  }

  Bipartition b;
  b.side.assign(vertex_count, 0);
  std::vector<std::int8_t> root_parity(vertex_count, -1);
  for (VertexId v : vertices) {  // ascending, so the first seen is lowest
    auto [root, p] = uf.find(v);
    if (root_parity[root] < 0) root_parity[root] = static_cast<std::int8_t>(p);
    b.side[v] = (p == root_parity[root]) ? 1 : 2;
  }
  return b;
}

bool edge_ok(const SubEdge& e, const Bipartition& b) {
  const auto in = difference(e.inputs, e.outputs);
  const auto out = difference(e.outputs, e.inputs);
  auto mono = [&](const std::vector<VertexId>& side) -> std::uint8_t {
    if (side.empty()) return 0;
    const std::uint8_t s = b.side.at(side.front());
    for (VertexId v : side)
      if (b.side.at(v) != s || s == 0) return 255;
    return s;
  };
  const std::uint8_t si = mono(in);
  const std::uint8_t so = mono(out);
  if (si == 255 || so == 255) return false;
  if (si != 0 && so != 0) return si != so;
  return true;
}

}  // namespace

Role role(const Hyperedge& h, VertexId v) {
  const bool in = has(h.inputs, v);
  const bool out = has(h.outputs, v);
  if (in && out) return Role::catalyst;
  if (in) return Role::input;
  if (out) return Role::output;
  return Role::none;
}

int sign(const Hyperedge& h, VertexId v) {
  switch (role(h, v)) {
    case Role::input: return 1;
    case Role::output: return -1;
    default: return 0;
  }
}

std::vector<VertexId> members(const Hyperedge& h) {
  std::vector<VertexId> out;
  std::set_symmetric_difference(h.inputs.begin(), h.inputs.end(),
                                h.outputs.begin(), h.outputs.end(),
                                std::back_inserter(out));
  return out;
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (Hyperedge& h : edges_) {
    normalize(h.inputs);
    normalize(h.outputs);
  }
}

Hypergraph validate(Hypergraph raw, bool require_chemical_form) {
  const std::size_t n = raw.vertex_count();
  if (n == 0) throw Error(ErrorKind::bad_parameter, "hypergraph has no vertices");
  for (HyperedgeId id = 0; id < raw.edge_count(); ++id) {
    const Hyperedge& h = raw.edge(id);
    for (const auto* side : {&h.inputs, &h.outputs})
      for (VertexId v : *side)
        if (v >= n)
          throw Error(ErrorKind::out_of_range_vertex,
                      "hyperedge " + std::to_string(id) + " references vertex " +
                          std::to_string(v) + " but N = " + std::to_string(n));
    if (h.inputs.empty() && h.outputs.empty())
      throw Error(ErrorKind::empty_hyperedge,
                  "hyperedge " + std::to_string(id) + " has no vertices");
    if (require_chemical_form && (h.inputs.empty() || h.outputs.empty()))
      throw Error(ErrorKind::non_chemical_form,
                  "hyperedge " + std::to_string(id) +
                      " needs nonempty inputs and outputs");
  }
  const auto deg = degrees(raw);
  for (VertexId v = 0; v < n; ++v)
    if (deg[v] == 0)
      throw Error(ErrorKind::zero_degree_vertex,
                  "vertex " + std::to_string(v) + " has degree 0");
  return raw;
}

std::size_t degree(const Hypergraph& g, VertexId v) {
  std::size_t d = 0;
  for (const Hyperedge& h : g.edges()) {
    const Role r = role(h, v);
    if (r == Role::input || r == Role::output) ++d;
  }
  return d;
}

std::vector<std::size_t> degrees(const Hypergraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Hyperedge& h : g.edges())
    for (VertexId v : members(h))
      if (v < deg.size()) ++deg[v];
  return deg;
}

std::size_t cardinality(const Hyperedge& h) { return members(h).size(); }

std::size_t cardinality(const Hypergraph& g, HyperedgeId h) {
  return cardinality(g.edge(h));
}

bool is_catalyst_free(const Hypergraph& g) {
  for (const Hyperedge& h : g.edges()) {
    std::vector<VertexId> common;
    std::set_intersection(h.inputs.begin(), h.inputs.end(), h.outputs.begin(),
                          h.outputs.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

Hypergraph strip_catalysts(const Hypergraph& g) {
  std::vector<Hyperedge> out;
  out.reserve(g.edge_count());
  for (const Hyperedge& h : g.edges()) {
    Hyperedge s{difference(h.inputs, h.outputs), difference(h.outputs, h.inputs)};
    if (!s.inputs.empty() || !s.outputs.empty()) out.push_back(std::move(s));
  }
  return Hypergraph(g.vertex_count(), std::move(out));
}

bool is_connected(const Hypergraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  DisjointSets ds(n);
  for (const Hyperedge& h : g.edges()) {
    std::vector<VertexId> all;
    std::set_union(h.inputs.begin(), h.inputs.end(), h.outputs.begin(),
                   h.outputs.end(), std::back_inserter(all));
    for (std::size_t i = 1; i < all.size(); ++i) ds.unite(all[0], all[i]);
  }
  const std::size_t root = ds.find(0);
  for (VertexId v = 1; v < n; ++v)
    if (ds.find(v) != root) return false;
  return true;
}

Hypergraph flip_orientation(const Hypergraph& g, HyperedgeId h) {
  if (h >= g.edge_count())
    throw Error(ErrorKind::bad_parameter,
                "no hyperedge " + std::to_string(h) + " to flip");
  std::vector<Hyperedge> edges = g.edges();
  std::swap(edges[h].inputs, edges[h].outputs);
  return Hypergraph(g.vertex_count(), std::move(edges));
}

bool SubHypergraph::contains(VertexId v) const { return has(vertices, v); }

std::size_t SubHypergraph::degree(VertexId v) const {
  std::size_t d = 0;
  for (const SubEdge& e : edges) d += (has(e.inputs, v) != has(e.outputs, v));
  return d;
}

std::vector<std::size_t> SubHypergraph::degrees() const {
  std::vector<std::size_t> deg(parent_vertex_count, 0);
  for (const SubEdge& e : edges) {
    std::vector<VertexId> m;
    std::set_symmetric_difference(e.inputs.begin(), e.inputs.end(),
                                  e.outputs.begin(), e.outputs.end(),
                                  std::back_inserter(m));
    for (VertexId v : m) ++deg[v];
  }
  return deg;
}

SubHypergraph induced_sub(const Hypergraph& g, std::span<const VertexId> subset) {
  if (subset.empty())
    throw Error(ErrorKind::empty_subset, "induced sub-hypergraph needs vertices");
  std::vector<VertexId> sorted(subset.begin(), subset.end());
  normalize(sorted);
  if (sorted.back() >= g.vertex_count())
    throw Error(ErrorKind::out_of_range_vertex,
                "subset vertex " + std::to_string(sorted.back()) + " out of range");

  SubHypergraph sub;
  sub.parent_vertex_count = g.vertex_count();
  sub.vertices = sorted;
  for (HyperedgeId id = 0; id < g.edge_count(); ++id) {
    const Hyperedge& h = g.edge(id);
    SubEdge e{id, intersect(h.inputs, sorted), intersect(h.outputs, sorted)};
    if (!e.inputs.empty() || !e.outputs.empty()) sub.edges.push_back(std::move(e));
  }
  return sub;
}

SubHypergraph edge_sub(const Hypergraph& g, std::span<const HyperedgeId> ids) {
  SubHypergraph sub;
  sub.parent_vertex_count = g.vertex_count();
  std::vector<HyperedgeId> chosen(ids.begin(), ids.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (HyperedgeId id : chosen) {
    const Hyperedge& h = g.edge(id);
    SubEdge e{id, difference(h.inputs, h.outputs), difference(h.outputs, h.inputs)};
    if (e.inputs.empty() && e.outputs.empty()) continue;
    sub.vertices.insert(sub.vertices.end(), e.inputs.begin(), e.inputs.end());
    sub.vertices.insert(sub.vertices.end(), e.outputs.begin(), e.outputs.end());
    sub.edges.push_back(std::move(e));
  }
  if (sub.edges.empty())
    throw Error(ErrorKind::empty_subset, "edge sub-hypergraph needs a nonempty hyperedge");
  normalize(sub.vertices);
  return sub;
}

SubHypergraph as_sub(const Hypergraph& g) {
  SubHypergraph sub;
  sub.parent_vertex_count = g.vertex_count();
  sub.vertices.resize(g.vertex_count());
  std::iota(sub.vertices.begin(), sub.vertices.end(), VertexId{0});
  for (HyperedgeId id = 0; id < g.edge_count(); ++id) {
    const Hyperedge& h = g.edge(id);
    SubEdge e{id, difference(h.inputs, h.outputs), difference(h.outputs, h.inputs)};
    if (!e.inputs.empty() || !e.outputs.empty()) sub.edges.push_back(std::move(e));
  }
  return sub;
}

std::vector<VertexId> Bipartition::part(std::uint8_t s) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < side.size(); ++v)
    if (side[v] == s) out.push_back(v);
  return out;
}

std::optional<Bipartition> find_bipartition(const Hypergraph& g) {
  return find_bipartition(as_sub(g));
}

std::optional<Bipartition> find_bipartition(const SubHypergraph& sub) {
  return colour(sub.parent_vertex_count, sub.vertices, sub.edges);
}

bool is_bipartition(const SubHypergraph& sub, const Bipartition& b) {
  if (b.side.size() != sub.parent_vertex_count) return false;
  for (VertexId v : sub.vertices)
    if (b.side[v] != 1 && b.side[v] != 2) return false;
  return std::all_of(sub.edges.begin(), sub.edges.end(),
                     [&](const SubEdge& e) { return edge_ok(e, b); });
}

bool is_bipartition(const Hypergraph& g, const Bipartition& b) {
  return is_bipartition(as_sub(g), b);
}

}  // namespace hyperlap
