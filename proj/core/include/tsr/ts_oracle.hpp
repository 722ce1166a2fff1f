#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tsr/graph.hpp"

namespace tsr {

struct OracleLimits {
  // The exhaustive search is meant for desk-scale instances; it fails loudly
  // instead of thrashing when the state space outgrows this cap.
  std::size_t max_nodes = 5'000'000;
};

/// Explicit token-sliding reconfiguration graph for k tokens: one node per
/// k-independent set (canonical sorted id tuples, listed lexicographically),
/// one edge per single slide. Components are labeled deterministically in
/// node order. Results are identical for any thread count.
class ReconfigGraph {
 public:
  int k = 0;
  std::vector<std::vector<VertexId>> nodes;
  std::vector<std::vector<std::int32_t>> adjacency;  // sorted node indices
  std::vector<std::int32_t> component;
  std::int32_t component_count = 0;
  std::size_t edge_count = 0;

  std::size_t node_count() const { return nodes.size(); }
  bool frozen(std::int32_t node) const { return adjacency[node].empty(); }
  std::optional<std::int32_t> find_node(const std::vector<VertexId>& key) const;

 private:
  friend ReconfigGraph build_ts_graph(const Graph&, int, const OracleLimits&,
                                      int);
  struct KeyHash {
    std::size_t operator()(const std::vector<VertexId>& key) const;
  };
  std::unordered_map<std::vector<VertexId>, std::int32_t, KeyHash> index_;
};

/// All k-independent sets as canonical sorted id tuples, in lexicographic
/// order. k = 0 yields the single empty set.
std::vector<std::vector<VertexId>> enumerate_independent_sets(const Graph& g,
                                                              int k);

ReconfigGraph build_ts_graph(const Graph& g, int k,
                             const OracleLimits& limits = {}, int threads = 1);

/// Ground-truth connectivity of the reconfiguration graph: `empty` when no
/// k-independent set exists, otherwise whether all nodes form one component.
Connectivity oracle_is_connected(const Graph& g, int k,
                                 const OracleLimits& limits = {},
                                 int threads = 1);

struct SlideMove {
  VertexId from = -1;
  VertexId to = -1;
  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

/// A replayable transformation: starting set plus one slide per step.
struct SlideSequence {
  std::vector<VertexId> start;
  std::vector<SlideMove> moves;
};

struct ReachResult {
  bool reachable = false;
  std::optional<SlideSequence> witness;  // BFS-shortest when reachable
};

ReachResult oracle_same_component(const Graph& g, int k,
                                  const IndependentSet& from,
                                  const IndependentSet& to,
                                  const OracleLimits& limits = {},
                                  int threads = 1);

/// Isolated nodes of the reconfiguration graph.
std::vector<std::vector<VertexId>> frozen_sets(const Graph& g, int k,
                                               const OracleLimits& limits = {},
                                               int threads = 1);

/// Positions of every token over the course of a slide sequence. Token
/// identities are the start vertices (the "origins"); at each step only the
/// slid token changes its vertex.
struct TokenTrace {
  std::vector<VertexId> origins;
  // positions[t][i] is the vertex holding the token of origin origins[i]
  // after t moves; positions[0] == origins.
  std::vector<std::vector<VertexId>> positions;
};

/// Replays and validates a slide sequence, reporting the offending 1-based
/// step index on failure.
TokenTrace trace_tokens(const Graph& g, const SlideSequence& seq);

/// DOT rendering of a reconfiguration graph. Node labels are the `+`-joined
/// member ids; frozen nodes carry shape=box.
void write_reconfig_dot(std::ostream& out, const Graph& g,
                        const ReconfigGraph& rg);

/// Witness file: a `start:` header line, then one `(<from> -> <to>)` per move.
void write_witness(std::ostream& out, const Graph& g, const SlideSequence& seq);

}  // namespace tsr
