#include "hyperlap/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <string>
#include <thread>

#include "hyperlap/error.hpp"
#include "hyperlap/rng.hpp"
#include "hyperlap/spectra.hpp"

namespace hyperlap {

namespace {

using Mask = std::uint64_t;

std::vector<VertexId> stripped_side(const std::vector<VertexId>& a,
                                    const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Shared by eta() and the exhaustive fast path so both produce identical bits.
double eta_numerator(std::span<const VertexId> vertices,
                     std::span<const std::size_t> sub_deg,
                     std::span<const std::size_t> deg) {
  double num = 0.0;
  for (VertexId v : vertices) {
    const auto d = static_cast<double>(sub_deg[v]);
    num += d * d / static_cast<double>(deg[v]);
  }
  return num;
}

Bipartition partition_of(const Selection& sel) {
  Bipartition b;
  b.side.resize(sel.size());
  for (std::size_t v = 0; v < sel.size(); ++v)
    b.side[v] = sel[v] > 0 ? 1 : (sel[v] < 0 ? 2 : 0);
  return b;
}

// Total order used for tie-breaking: smaller subset list first, then the
// smaller side vector.
bool key_less(const SubHypergraph& a, const Bipartition& pa, const SubHypergraph& b,
              const Bipartition& pb) {
  if (a.vertices != b.vertices)
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(),
                                        b.vertices.begin(), b.vertices.end());
  return pa.side < pb.side;
}

bool better(const BipartiteSub& cand, const std::optional<BipartiteSub>& best) {
  if (!best) return true;
  if (cand.eta.value != best->eta.value) return cand.eta.value > best->eta.value;
  return key_less(cand.sub, cand.partition, best->sub, best->partition);
}

std::optional<BipartiteSub> evaluate_signed(const Hypergraph& g, const Selection& sel) {
  SubHypergraph sub = signed_sub(g, sel);
  if (sub.edges.empty()) return std::nullopt;
  BipartiteSub out{eta(g, sub), std::move(sub), partition_of(sel)};
  return out;
}

std::optional<BipartiteSub> evaluate_induced(const Hypergraph& g,
                                             std::span<const VertexId> subset) {
  SubHypergraph sub = induced_sub(g, subset);
  if (sub.edges.empty()) return std::nullopt;
  auto part = find_bipartition(sub);
  if (!part) return std::nullopt;
  BipartiteSub out{eta(g, sub), std::move(sub), std::move(*part)};
  return out;
}

std::vector<VertexId> mask_vertices(Mask s) {
  std::vector<VertexId> out;
  while (s) {
    out.push_back(static_cast<VertexId>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

struct EdgeMasks {
  Mask in;
  Mask out;
};

std::vector<EdgeMasks> edge_masks(const Hypergraph& g) {
  std::vector<EdgeMasks> masks;
  for (const Hyperedge& h : g.edges()) {
    EdgeMasks m{0, 0};
    for (VertexId v : stripped_side(h.inputs, h.outputs)) m.in |= Mask{1} << v;
    for (VertexId v : stripped_side(h.outputs, h.inputs)) m.out |= Mask{1} << v;
    masks.push_back(m);
  }
  return masks;
}

// Candidate found by a worker: raw masks plus value, materialised at the end.
struct Candidate {
  double value;
  Mask subset;
  Mask plus;
};

bool mask_key_less(Mask sa, Mask pa, Mask sb, Mask pb, std::size_t n) {
  if (sa != sb) {
    const auto a = mask_vertices(sa);
    const auto b = mask_vertices(sb);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    if (!(sa & bit)) continue;
    const int ka = (pa & bit) ? 1 : 2;
    const int kb = (pb & bit) ? 1 : 2;
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool candidate_better(const Candidate& c, const std::optional<Candidate>& best,
                      std::size_t n) {
  if (!best) return true;
  if (c.value != best->value) return c.value > best->value;
  return mask_key_less(c.subset, c.plus, best->subset, best->plus, n);
}

// Scans subsets in [first, last) of the signed domain. The lowest selected
// vertex is always on the plus side; the other colouring is its mirror.
std::optional<Candidate> scan_signed(const std::vector<EdgeMasks>& masks,
                                     const std::vector<std::size_t>& deg, std::size_t n,
                                     Mask first, Mask last) {
  std::optional<Candidate> best;
  std::vector<std::size_t> sub_deg(n, 0);
  std::vector<VertexId> verts;
  for (Mask s = first; s < last; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    verts = mask_vertices(s);
    Mask sub = rest;
    for (;;) {
      const Mask plus = sub | low;
      const Mask minus = s & ~plus;
      std::fill(sub_deg.begin(), sub_deg.end(), 0);
      std::size_t kept = 0;
      for (const EdgeMasks& e : masks) {
        const Mask ri = e.in & s;
        const Mask ro = e.out & s;
        if ((ri | ro) == 0) continue;
        const bool forward = (ri & minus) == 0 && (ro & plus) == 0;
        const bool backward = (ri & plus) == 0 && (ro & minus) == 0;
        if (!forward && !backward) continue;
        ++kept;
        for (Mask b = ri | ro; b; b &= b - 1) ++sub_deg[std::countr_zero(b)];
      }
      if (kept > 0) {
        Candidate c{eta_numerator(verts, sub_deg, deg) / static_cast<double>(kept), s,
                    plus};
        if (candidate_better(c, best, n)) best = c;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  return best;
}

std::optional<BipartiteSub> scan_induced(const Hypergraph& g, Mask first, Mask last) {
  std::optional<BipartiteSub> best;
  for (Mask s = first; s < last; ++s) {
    const auto verts = mask_vertices(s);
    auto cand = evaluate_induced(g, verts);
    if (cand && better(*cand, best)) best = std::move(cand);
  }
  return best;
}

template <class Result, class Scan>
std::vector<std::optional<Result>> run_chunks(Mask total, unsigned threads, Scan scan) {
  threads = std::max(1u, threads);
  std::vector<std::optional<Result>> results(threads);
  if (threads == 1) {
    results[0] = scan(Mask{1}, total);
    return results;
  }
  std::vector<std::thread> pool;
  const Mask span = (total - 1 + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const Mask first = 1 + span * t;
    const Mask last = std::min(total, first + span);
    if (first >= last) continue;
    pool.emplace_back([&, t, first, last] { results[t] = scan(first, last); });
  }
  for (auto& th : pool) th.join();
  return results;
}

Selection selection_of(const Bipartition& b) {
  Selection sel(b.side.size(), 0);
  for (std::size_t v = 0; v < b.side.size(); ++v)
    sel[v] = b.side[v] == 1 ? 1 : (b.side[v] == 2 ? -1 : 0);
  return sel;
}

std::optional<BipartiteSub> evaluate(const Hypergraph& g, const Selection& sel,
                                     SearchDomain domain) {
  if (domain == SearchDomain::signed_selection) return evaluate_signed(g, sel);
  std::vector<VertexId> subset;
  for (VertexId v = 0; v < sel.size(); ++v)
    if (sel[v] != 0) subset.push_back(v);
  if (subset.empty()) return std::nullopt;
  return evaluate_induced(g, subset);
}

// Sub-hypergraph generated by each single hyperedge, coloured inputs/outputs.
std::vector<BipartiteSub> single_edge_candidates(const Hypergraph& g) {
  std::vector<BipartiteSub> out;
  for (HyperedgeId id = 0; id < g.edge_count(); ++id) {
    const Hyperedge& h = g.edge(id);
    const auto in = stripped_side(h.inputs, h.outputs);
    const auto outs = stripped_side(h.outputs, h.inputs);
    if (in.empty() && outs.empty()) continue;
    const HyperedgeId ids[] = {id};
    SubHypergraph sub = edge_sub(g, ids);
    Bipartition b;
    b.side.assign(g.vertex_count(), 0);
    for (VertexId v : in) b.side[v] = 1;
    for (VertexId v : outs) b.side[v] = in.empty() ? 1 : 2;
    const EtaValue e = eta(g, sub);
    out.push_back(BipartiteSub{e, std::move(sub), std::move(b)});
  }
  return out;
}

}  // namespace

EtaValue eta(const Hypergraph& g, const SubHypergraph& sub) {
  if (sub.edges.empty())
    throw Error(ErrorKind::no_induced_edges, "sub-hypergraph has no hyperedges");
  const auto deg = degrees(g);
  const auto sub_deg = sub.degrees();
  EtaValue e;
  e.numerator = eta_numerator(sub.vertices, sub_deg, deg);
  e.denominator = sub.edges.size();
  e.value = e.numerator / static_cast<double>(e.denominator);
  return e;
}

std::size_t max_cardinality(const Hypergraph& g) {
  std::size_t m = 0;
  for (const Hyperedge& h : g.edges()) m = std::max(m, cardinality(h));
  return m;
}

UpperEquality check_upper_equality(const Hypergraph& g_in) {
  const Hypergraph g = strip_catalysts(g_in);
  if (!is_connected(g))
    throw Error(ErrorKind::disconnected_input,
                "upper-bound equality needs a connected hypergraph");
  UpperEquality r;
  r.bipartite = find_bipartition(g).has_value();
  const std::size_t c = g.edge_count() ? cardinality(g.edge(0)) : 0;
  r.constant_cardinality = std::all_of(g.edges().begin(), g.edges().end(),
                                       [c](const Hyperedge& h) { return cardinality(h) == c; });
  r.is_equality = r.bipartite && r.constant_cardinality;
  return r;
}

SubHypergraph signed_sub(const Hypergraph& g, const Selection& sel) {
  if (sel.size() != g.vertex_count())
    throw Error(ErrorKind::bad_parameter, "selection has wrong length");
  SubHypergraph sub;
  sub.parent_vertex_count = g.vertex_count();
  for (VertexId v = 0; v < sel.size(); ++v)
    if (sel[v] != 0) sub.vertices.push_back(v);
  for (HyperedgeId id = 0; id < g.edge_count(); ++id) {
    const Hyperedge& h = g.edge(id);
    SubEdge e{id, {}, {}};
    for (VertexId v : stripped_side(h.inputs, h.outputs))
      if (sel[v] != 0) e.inputs.push_back(v);
    for (VertexId v : stripped_side(h.outputs, h.inputs))
      if (sel[v] != 0) e.outputs.push_back(v);
    if (e.inputs.empty() && e.outputs.empty()) continue;
    const int s = e.inputs.empty() ? -sel[e.outputs.front()] : sel[e.inputs.front()];
    const bool consistent =
        std::all_of(e.inputs.begin(), e.inputs.end(), [&](VertexId v) { return sel[v] == s; }) &&
        std::all_of(e.outputs.begin(), e.outputs.end(), [&](VertexId v) { return sel[v] == -s; });
    if (consistent) sub.edges.push_back(std::move(e));
  }
  return sub;
}

BipartiteSub best_bipartite_sub_exact(const Hypergraph& g, const ExactOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n > opts.n_limit || n >= 63)
    throw Error(ErrorKind::too_large,
                "exhaustive search limited to " + std::to_string(opts.n_limit) +
                    " vertices (got " + std::to_string(n) + "); use the greedy search");
  const Mask total = Mask{1} << n;

  if (opts.domain == SearchDomain::induced) {
    auto parts = run_chunks<BipartiteSub>(
        total, opts.threads, [&](Mask a, Mask b) { return scan_induced(g, a, b); });
    std::optional<BipartiteSub> best;
    for (auto& p : parts)
      if (p && better(*p, best)) best = std::move(p);
    if (!best)
      throw Error(ErrorKind::no_induced_edges, "no bipartite sub-hypergraph with hyperedges");
    return *best;
  }

  const auto masks = edge_masks(g);
  const auto deg = degrees(g);
  auto parts = run_chunks<Candidate>(total, opts.threads, [&](Mask a, Mask b) {
    return scan_signed(masks, deg, n, a, b);
  });
  std::optional<Candidate> best;
  for (auto& p : parts)
    if (p && candidate_better(*p, best, n)) best = p;
  if (!best)
    throw Error(ErrorKind::no_induced_edges, "no bipartite sub-hypergraph with hyperedges");

  Selection sel(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    if (best->subset & bit) sel[v] = (best->plus & bit) ? 1 : -1;
  }
  std::optional<BipartiteSub> result = evaluate_signed(g, sel);
  for (auto& c : single_edge_candidates(g))
    if (better(c, result)) result = std::move(c);
  return *result;
}

BipartiteSub best_bipartite_sub_greedy(const Hypergraph& g, const GreedyOptions& opts) {
  const std::size_t n = g.vertex_count();
  std::vector<Selection> starts;
  for (const Hyperedge& h : g.edges()) {
    Selection sel(n, 0);
    for (VertexId v : stripped_side(h.inputs, h.outputs)) sel[v] = 1;
    for (VertexId v : stripped_side(h.outputs, h.inputs)) sel[v] = -1;
    starts.push_back(std::move(sel));
  }
  const CounterRng root(opts.seed);
  for (std::size_t r = 0; r < opts.restarts; ++r) {
    CounterRng rng = root.split(r);
    Selection sel(n, 0);
    for (auto& s : sel) s = static_cast<std::int8_t>(static_cast<int>(rng.below(3)) - 1);
    starts.push_back(std::move(sel));
  }

  std::optional<BipartiteSub> overall;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    Selection sel = starts[k];
    std::optional<BipartiteSub> cur = evaluate(g, sel, opts.domain);
    if (k >= g.edge_count()) {
      // Random start: drop random vertices until the selection is feasible.
      CounterRng trim = root.split(k - g.edge_count()).split(1);
      while (!cur) {
        std::vector<VertexId> chosen;
        for (VertexId v = 0; v < n; ++v)
          if (sel[v] != 0) chosen.push_back(v);
        if (chosen.empty()) break;
        sel[chosen[trim.below(chosen.size())]] = 0;
        cur = evaluate(g, sel, opts.domain);
      }
    }
    if (!cur) continue;
    sel = selection_of(cur->partition);
    if (opts.on_visit) opts.on_visit(*cur);

    for (;;) {
      std::optional<BipartiteSub> best_move;
      Selection best_sel;
      for (VertexId v = 0; v < n; ++v) {
        std::int8_t options[2];
        int count = 0;
        if (sel[v] == 0) {
          options[count++] = 1;
          if (opts.domain == SearchDomain::signed_selection) options[count++] = -1;
        } else {
          options[count++] = 0;
          if (opts.domain == SearchDomain::signed_selection)
            options[count++] = static_cast<std::int8_t>(-sel[v]);
        }
        for (int i = 0; i < count; ++i) {
          Selection next = sel;
          next[v] = options[i];
          auto cand = evaluate(g, next, opts.domain);
          if (!cand) continue;
          const bool take =
              !best_move || cand->eta.value > best_move->eta.value ||
              (cand->eta.value == best_move->eta.value &&
               cand->sub.vertices.size() < best_move->sub.vertices.size());
          if (take) {
            best_move = std::move(cand);
            best_sel = std::move(next);
          }
        }
      }
      if (!best_move || !(best_move->eta.value > cur->eta.value)) break;
      cur = std::move(best_move);
      sel = selection_of(cur->partition);
      if (opts.on_visit) opts.on_visit(*cur);
    }
    if (better(*cur, overall)) overall = std::move(cur);
  }
  if (opts.domain == SearchDomain::signed_selection)
    for (auto& c : single_edge_candidates(g)) {
      if (opts.on_visit) opts.on_visit(c);
      if (better(c, overall)) overall = std::move(c);
    }
  if (!overall)
    throw Error(ErrorKind::no_induced_edges, "greedy search found no bipartite sub-hypergraph");
  return *overall;
}

BoundsReport bounds_report(const Hypergraph& g, const BoundsOptions& opts) {
  BoundsReport r;
  r.upper_equality = check_upper_equality(g);  // throws when disconnected
  r.lambda_max = spectrum(g).max();
  r.upper = max_cardinality(g);
  r.spectral_equality = std::abs(r.lambda_max - static_cast<double>(r.upper)) <= opts.tolerance;

  if (g.vertex_count() <= opts.n_limit) {
    r.lower = best_bipartite_sub_exact(g, {opts.n_limit, opts.domain, opts.threads});
    r.lower_is_exact = true;
  } else {
    GreedyOptions go;
    go.seed = opts.seed;
    go.restarts = opts.restarts;
    go.domain = opts.domain;
    r.lower = best_bipartite_sub_greedy(g, go);
  }
  r.upper_gap = static_cast<double>(r.upper) - r.lambda_max;
  r.lower_gap = r.lambda_max - r.lower.eta.value;
  if (r.lower_gap < -opts.tolerance || r.upper_gap < -opts.tolerance)
    throw Error(ErrorKind::bound_violation,
                "bound sandwich violated: eta* = " + std::to_string(r.lower.eta.value) +
                    ", lambda_N = " + std::to_string(r.lambda_max) +
                    ", max|h| = " + std::to_string(r.upper));
  return r;
}

ReorientedIndicator reoriented_indicator(const Hypergraph& g, const SubHypergraph& sub,
                                         const Bipartition& partition) {
  ReorientedIndicator out{g, std::vector<double>(g.edge_count(), 0.0)};
  for (const SubEdge& e : sub.edges) {
    const auto in = stripped_side(e.inputs, e.outputs);
    const auto out_side = stripped_side(e.outputs, e.inputs);
    const bool keep = !in.empty() ? partition.side.at(in.front()) == 1
                                  : partition.side.at(out_side.front()) == 2;
    if (!keep) out.reoriented = flip_orientation(out.reoriented, e.source);
    out.gamma[e.source] = 1.0;
  }
  return out;
}

}  // namespace hyperlap
