#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperlap {

using VertexId = std::size_t;
using HyperedgeId = std::size_t;

/// Oriented (possibly chemical) hyperedge. Both sides are kept sorted and
/// duplicate-free; a vertex present on both sides is a catalyst.
struct Hyperedge {
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;

  bool operator==(const Hyperedge&) const = default;
};

enum class Role { none, input, output, catalyst };

Role role(const Hyperedge& h, VertexId v);

/// +1 for input-only, -1 for output-only, 0 for catalysts and non-members.
int sign(const Hyperedge& h, VertexId v);

/// Vertices of h that are input-only or output-only, ascending.
std::vector<VertexId> members(const Hyperedge& h);

/// Chemical hypergraph on vertices 0..N-1 with an ordered multiset of
/// hyperedges. Construction only normalizes each side; call validate() to
/// enforce the structural assumptions.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  const Hyperedge& edge(HyperedgeId h) const { return edges_.at(h); }

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Hyperedge> edges_;
};

/// Returns raw unchanged if every vertex reference is in range, no hyperedge
/// is empty, (optionally) every hyperedge has both sides nonempty, and every
/// vertex has positive degree. Throws Error otherwise.
Hypergraph validate(Hypergraph raw, bool require_chemical_form = false);

/// Number of hyperedges containing v only as an input or only as an output.
std::size_t degree(const Hypergraph& g, VertexId v);
std::vector<std::size_t> degrees(const Hypergraph& g);

/// Number of non-catalyst vertices of h.
std::size_t cardinality(const Hyperedge& h);
std::size_t cardinality(const Hypergraph& g, HyperedgeId h);

bool is_catalyst_free(const Hypergraph& g);

/// Replaces each (V_h, W_h) by (V_h \ W_h, W_h \ V_h) and drops hyperedges
/// that become empty.
Hypergraph strip_catalysts(const Hypergraph& g);

/// Co-membership connectivity; input/output roles are ignored.
bool is_connected(const Hypergraph& g);

Hypergraph flip_orientation(const Hypergraph& g, HyperedgeId h);

/// Hyperedge restricted to a vertex subset, remembering where it came from.
struct SubEdge {
  HyperedgeId source = 0;
  std::vector<VertexId> inputs;
  std::vector<VertexId> outputs;

  bool operator==(const SubEdge&) const = default;
};

/// Sub-hypergraph of a parent on parent_vertex_count vertices. Restricted
/// hyperedges with both sides empty are never stored.
struct SubHypergraph {
  std::size_t parent_vertex_count = 0;
  std::vector<VertexId> vertices;  // ascending
  std::vector<SubEdge> edges;

  bool contains(VertexId v) const;
  /// Degree of v counted in this sub-hypergraph.
  std::size_t degree(VertexId v) const;
  std::vector<std::size_t> degrees() const;

  bool operator==(const SubHypergraph&) const = default;
};

/// All hyperedges of g restricted to subset. Throws empty_subset.
SubHypergraph induced_sub(const Hypergraph& g, std::span<const VertexId> subset);

/// Sub-hypergraph generated by the chosen hyperedges (vertex set = their
/// non-catalyst members).
SubHypergraph edge_sub(const Hypergraph& g, std::span<const HyperedgeId> ids);

/// Side assignment over a vertex subset: 0 = outside, 1 or 2 otherwise.
struct Bipartition {
  std::vector<std::uint8_t> side;

  std::vector<VertexId> part(std::uint8_t s) const;
  bool operator==(const Bipartition&) const = default;
};

/// Parity union-find 2-colouring. Catalysts are stripped first. The lowest
/// vertex of every component is placed on side 1.
std::optional<Bipartition> find_bipartition(const Hypergraph& g);
std::optional<Bipartition> find_bipartition(const SubHypergraph& sub);

/// Per-hyperedge check: inputs monochromatic, outputs monochromatic and of
/// the other colour when both sides are present.
bool is_bipartition(const SubHypergraph& sub, const Bipartition& b);
bool is_bipartition(const Hypergraph& g, const Bipartition& b);

/// The whole (stripped) hypergraph viewed as a sub-hypergraph of itself.
SubHypergraph as_sub(const Hypergraph& g);

}  // namespace hyperlap
