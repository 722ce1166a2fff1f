#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tsr/interval_graph.hpp"

namespace tsr {

/// A vertex id extended with an infinity sentinel that compares strictly
/// above every vertex under both interval orders. Infinity marks "no
/// independent set of the requested shape exists here".
class ExtendedVertex {
 public:
  constexpr ExtendedVertex() = default;
  constexpr explicit ExtendedVertex(VertexId v) : id_(v) {}
  static constexpr ExtendedVertex infinity() { return ExtendedVertex(); }

  constexpr bool is_infinity() const { return id_ < 0; }
  constexpr VertexId id() const { return id_; }

  friend constexpr bool operator==(ExtendedVertex, ExtendedVertex) = default;

 private:
  VertexId id_ = -1;
};

/// The pair of extreme leftmost-vertex positions for one table entry:
/// `lowest` is the furthest left (smallest right endpoint) and `highest`
/// the furthest right (largest left endpoint) leftmost vertex guaranteed
/// reachable. Both infinite when no set of the requested shape exists.
struct IndexPair {
  ExtendedVertex lowest;   // w_l: min under the right order
  ExtendedVertex highest;  // w_r: max under the left order

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Extremes of the connected component of u inside the view: the member
/// with the smallest right endpoint and the member with the largest left
/// endpoint. u must belong to the view.
std::pair<VertexId, VertexId> component_extremes(const SubgraphView& view,
                                                 VertexId u);

/// Memoized table of worst indices w_l(u, k, G_b) / w_r(u, k, G_b): over all
/// k-token configurations in the part of the graph right of b whose leftmost
/// token starts on u, the guaranteed extreme positions the leftmost token can
/// be pushed to. Filled level by level in k; level k entries read only
/// frozen level k-1 entries, so levels may be built with several threads
/// without affecting results.
class WorstIndexTable {
 public:
  WorstIndexTable(const IntervalGraph& g, int max_k, int threads = 1);

  int max_level() const { return max_k_; }
  const IntervalGraph& graph() const { return *g_; }

  /// Looks up (w_l, w_r) for vertex u, size k and lower bound b (unset b
  /// means the whole graph). Levels beyond max_level were never built and
  /// raise std::logic_error.
  IndexPair worst_indices(VertexId u, int k, std::optional<VertexId> b) const;

 private:
  IndexPair& entry(int k, int b_index, VertexId u);
  const IndexPair& entry(int k, int b_index, VertexId u) const;
  void build_level_one();
  void build_level(int k,
                   const std::vector<std::vector<ExtendedVertex>>& suffix_min,
                   int threads);
  IndexPair compute_entry(
      int b_index, VertexId u,
      const std::vector<std::vector<ExtendedVertex>>& suffix_min) const;

  const IntervalGraph* g_ = nullptr;
  int n_ = 0;
  int max_k_ = 0;
  // levels_[k-1] holds (n+1) * n entries indexed by (b_index, u) where
  // b_index 0 encodes "no lower bound" and v+1 encodes vertex v.
  std::vector<std::vector<IndexPair>> levels_;
};

/// Decides connectivity of the k-token sliding graph of an interval graph in
/// polynomial time: every configuration must be pushable onto the prefix of
/// the leftmost independent set, which reduces to one worst-index check per
/// vertex and level.
Connectivity is_ts_connected(const IntervalGraph& g, int k, int threads = 1);

/// Memoized extreme leftmost positions LM/RM for the right subsets (suffixes
/// in interval order) of one fixed independent set, keyed by suffix start
/// and lower bound. Entries for a suffix read only entries of shorter
/// suffixes.
class ExtremeTable {
 public:
  ExtremeTable(const IntervalGraph& g, OrderedIndependentSet host);

  const OrderedIndependentSet& host() const { return host_; }

  /// (LM, RM) of the suffix host[start..] inside the part of the graph right
  /// of b. Returns the infinite pair when the suffix does not fit the view.
  IndexPair extremes(int start, std::optional<VertexId> b);

 private:
  IndexPair compute(int start, int b_index);

  const IntervalGraph* g_;
  OrderedIndependentSet host_;
  std::vector<std::optional<IndexPair>> memo_;
};

/// Decides in polynomial time whether two k-independent sets lie in the same
/// connected component of the k-token sliding graph: their extreme leftmost
/// positions must agree, and the remainders must be reachable from each
/// other to the right of that common extreme, recursively.
bool same_component(const IntervalGraph& g, int k,
                    const std::vector<VertexId>& first,
                    const std::vector<VertexId>& second);

}  // namespace tsr
