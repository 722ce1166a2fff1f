#pragma once

// Shared fixtures for the test suites: tiny named instances and brute-force
// reference oracles written directly from the definitions, independent of
// the library code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsr/graph.hpp"
#include "tsr/interval_graph.hpp"
#include "tsr/ts_oracle.hpp"

namespace tsr::test {

inline Graph path_graph(int n) {
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph cycle_graph(int n) {
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph edgeless_graph(int n) {
  GraphBuilder b;
  for (int i = 1; i <= n; ++i) b.add_vertex("v" + std::to_string(i));
  return std::move(b).build();
}

inline Graph k2_graph() {
  GraphBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  b.add_edge(0, 1);
  return std::move(b).build();
}

// Three intervals a(0,2) b(1,4) c(3,5): a-b and b-c intersect.
inline IntervalGraph p3i() {
  return IntervalGraph::from_intervals(
      {{"a", 0, 2}, {"b", 1, 4}, {"c", 3, 5}});
}

// Two disjoint intervals.
inline IntervalGraph disj2() {
  return IntervalGraph::from_intervals({{"a", 0, 1}, {"b", 2, 3}});
}

// u(0,4) nests m(1,2) and overlaps x(3,6); x-y and y-z overlap further right.
inline IntervalGraph nest() {
  return IntervalGraph::from_intervals(
      {{"u", 0, 4}, {"m", 1, 2}, {"x", 3, 6}, {"y", 5, 8}, {"z", 7, 9}});
}

// One edge as intervals.
inline IntervalGraph k2i() {
  return IntervalGraph::from_intervals({{"a", 0, 3}, {"b", 2, 5}});
}

inline VertexSet named_set(const Graph& g, std::vector<std::string> labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(g.require_vertex(l));
  return VertexSet(std::move(ids));
}

inline std::vector<VertexId> named_ids(const IntervalGraph& g,
                                       std::vector<std::string> labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(g.require_vertex(l));
  std::sort(ids.begin(), ids.end());
  return ids;
}

// ---- brute-force reference oracles (bitmask enumeration, n <= 20) ----

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(v)) masks[v] |= std::uint32_t{1} << w;
  return masks;
}

inline bool mask_independent(const std::vector<std::uint32_t>& masks,
                             std::uint32_t mask) {
  for (int v = 0; mask >> v; ++v)
    if ((mask >> v & 1) && (masks[v] & mask)) return false;
  return true;
}

inline std::vector<std::vector<VertexId>> bf_independent_sets(const Graph& g,
                                                              int k) {
  const auto masks = adjacency_masks(g);
  std::vector<std::vector<VertexId>> out;
  const std::uint32_t full = g.vertex_count() >= 32
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << g.vertex_count()) - 1;
  for (std::uint32_t mask = 0;; ++mask) {
    if (__builtin_popcount(mask) == k && mask_independent(masks, mask)) {
      std::vector<VertexId> set;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (mask >> v & 1) set.push_back(v);
      out.push_back(std::move(set));
    }
    if (mask == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int bf_alpha(const Graph& g) {
  const auto masks = adjacency_masks(g);
  int best = 0;
  const std::uint32_t full = (std::uint32_t{1} << g.vertex_count()) - 1;
  for (std::uint32_t mask = 0;; ++mask) {
    if (mask_independent(masks, mask))
      best = std::max(best, __builtin_popcount(mask));
    if (mask == full) break;
  }
  return best;
}

// Frozen straight from the definition: no single slide along an edge keeps
// the set independent.
inline bool bf_frozen_by_slides(const Graph& g,
                                const std::vector<VertexId>& members) {
  for (VertexId u : members) {
    for (VertexId v : g.neighbors(u)) {
      if (std::find(members.begin(), members.end(), v) != members.end())
        continue;
      bool independent = true;
      for (VertexId w : members) {
        if (w == u) continue;
        if (g.adjacent(w, v)) {
          independent = false;
          break;
        }
      }
      if (independent) return false;
    }
  }
  return true;
}

// Blocking straight from the definition, one private-neighbor scan per member.
inline bool bf_is_blocking(const Graph& g, const std::vector<VertexId>& members) {
  for (VertexId x : members) {
    for (VertexId cand : g.neighbors(x)) {
      bool private_neighbor = true;
      for (VertexId y : members) {
        if (y == x) continue;
        if (cand == y || g.adjacent(cand, y)) {
          private_neighbor = false;
          break;
        }
      }
      if (private_neighbor) return false;
    }
  }
  return true;
}

// ---- oracle-side extreme leftmost positions over an interval view ----

// Exhaustive reconfiguration graph of the subgraph induced by `members`
// (host ids), with per-component extremes of the leftmost vertices of its
// nodes: comp_low under the right order, comp_high under the left order.
struct OracleExtremes {
  ReconfigGraph rg;
  std::vector<VertexId> to_host;
  std::vector<int> to_sub;            // host id -> sub id, -1 outside
  std::vector<VertexId> node_lm;      // host id of each node's leftmost vertex
  std::vector<VertexId> comp_low;
  std::vector<VertexId> comp_high;

  std::optional<std::int32_t> find_host_node(std::vector<VertexId> host_ids) const {
    std::vector<VertexId> sub_ids;
    for (VertexId v : host_ids) {
      if (to_sub[v] < 0) return std::nullopt;
      sub_ids.push_back(to_sub[v]);
    }
    std::sort(sub_ids.begin(), sub_ids.end());
    return rg.find_node(sub_ids);
  }
};

inline OracleExtremes oracle_extremes(const IntervalGraph& g,
                                      const std::vector<VertexId>& members,
                                      int k) {
  OracleExtremes out;
  out.to_host = members;
  out.to_sub.assign(g.vertex_count(), -1);
  GraphBuilder builder;
  for (std::size_t i = 0; i < members.size(); ++i) {
    builder.add_vertex(g.label(members[i]));
    out.to_sub[members[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j]))
        builder.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  out.rg = build_ts_graph(std::move(builder).build(), k);

  out.node_lm.resize(out.rg.node_count());
  for (std::size_t node = 0; node < out.rg.node_count(); ++node) {
    VertexId lm = -1;
    for (VertexId sub : out.rg.nodes[node]) {
      const VertexId host = out.to_host[sub];
      if (lm == -1 || g.right(host) < g.right(lm)) lm = host;
    }
    out.node_lm[node] = lm;
  }
  out.comp_low.assign(out.rg.component_count, -1);
  out.comp_high.assign(out.rg.component_count, -1);
  for (std::size_t node = 0; node < out.rg.node_count(); ++node) {
    const auto comp = out.rg.component[node];
    const VertexId lm = out.node_lm[node];
    if (out.comp_low[comp] == -1 || g.right(lm) < g.right(out.comp_low[comp]))
      out.comp_low[comp] = lm;
    if (out.comp_high[comp] == -1 || g.left(lm) > g.left(out.comp_high[comp]))
      out.comp_high[comp] = lm;
  }
  return out;
}

// Per host vertex u: the definitional worst pair over all k-sets of the view
// whose leftmost vertex is u, or nullopt when no such set exists.
inline std::vector<std::optional<std::pair<VertexId, VertexId>>>
oracle_worst_indices(const IntervalGraph& g, const OracleExtremes& ext) {
  std::vector<std::optional<std::pair<VertexId, VertexId>>> result(
      g.vertex_count());
  for (std::size_t node = 0; node < ext.rg.node_count(); ++node) {
    const VertexId u = ext.node_lm[node];
    if (u < 0) continue;  // the k = 0 node has no leftmost vertex
    const auto comp = ext.rg.component[node];
    const VertexId low = ext.comp_low[comp];
    const VertexId high = ext.comp_high[comp];
    if (!result[u]) {
      result[u] = std::pair{low, high};
      continue;
    }
    auto& [worst_low, worst_high] = *result[u];
    if (g.right(low) > g.right(worst_low)) worst_low = low;    // max under right order
    if (g.left(high) < g.left(worst_high)) worst_high = high;  // min under left order
  }
  return result;
}

}  // namespace tsr::test
