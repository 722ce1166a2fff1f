#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsr/errors.hpp"
#include "tsr/graph.hpp"

namespace tsr {

struct IntervalSpec {
  std::string label;
  long long left = 0;
  long long right = 0;
};

/// Intersection graph of closed intervals on the line. All 2n endpoint
/// values are pairwise distinct, so the two vertex orders by left and by
/// right endpoint are total and the usual sweep arguments apply.
/// Immutable after construction.
class IntervalGraph {
 public:
  IntervalGraph() = default;

  /// Builds the graph from (label, left, right) triples. Without
  /// canonicalization, duplicate endpoint values and empty intervals
  /// (left >= right) are rejected. With `canonicalize`, ties are broken
  /// deterministically by (endpoint value, input order, left-before-right)
  /// and all endpoints are reindexed to 1..2n; an interval given as a
  /// single point becomes a unit interval under that rule, but left > right
  /// stays an error.
  static IntervalGraph from_intervals(std::vector<IntervalSpec> specs,
                                      bool canonicalize = false);

  int vertex_count() const { return static_cast<int>(lefts_.size()); }
  long long left(VertexId v) const;
  long long right(VertexId v) const;
  const std::string& label(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view label) const;
  VertexId require_vertex(std::string_view label) const;
  void check_vertex(VertexId v) const;

  /// Intervals intersect: max of lefts <= min of rights.
  bool adjacent(VertexId a, VertexId b) const;

  /// Vertex ids sorted by ascending left / right endpoint.
  const std::vector<VertexId>& order_by_left() const { return by_left_; }
  const std::vector<VertexId>& order_by_right() const { return by_right_; }

  /// Position in order_by_left of the first vertex v with left(v) > right(u),
  /// i.e. the start of the suffix of intervals lying strictly right of u.
  int first_index_right_of(VertexId u) const;

  bool canonicalized() const { return canonicalized_; }

  /// Materializes the abstract graph with the same vertex ids and labels.
  Graph to_graph() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<long long> lefts_;
  std::vector<long long> rights_;
  std::vector<VertexId> by_left_;
  std::vector<VertexId> by_right_;
  std::vector<int> first_right_index_;
  bool canonicalized_ = false;
};

/// Non-materializing induced subgraph of an IntervalGraph: the vertices v
/// with left(v) > right(lower) when a lower bound is set, and
/// right(v) < left(upper) when an upper bound is set. Unset bounds mean the
/// whole graph on that side. Views are value objects over a host reference.
class SubgraphView {
 public:
  explicit SubgraphView(const IntervalGraph& g)
      : SubgraphView(g, std::nullopt, std::nullopt) {}
  SubgraphView(const IntervalGraph& g, std::optional<VertexId> lower,
               std::optional<VertexId> upper);

  const IntervalGraph& host() const { return *host_; }
  std::optional<VertexId> lower_bound() const { return lower_; }
  std::optional<VertexId> upper_bound() const { return upper_; }

  bool contains(VertexId v) const;
  std::vector<VertexId> members_by_left() const;
  int member_count() const;
  bool empty() const;

 private:
  const IntervalGraph* host_;
  std::optional<VertexId> lower_;
  std::optional<VertexId> upper_;
};

/// Intervals strictly right of b; b unset yields the whole graph.
SubgraphView view_right_of(const IntervalGraph& g, std::optional<VertexId> b);
/// Intervals strictly left of w; w unset yields the whole graph.
SubgraphView view_left_of(const IntervalGraph& g, std::optional<VertexId> w);
/// Intervals strictly between b and w; equals the intersection of the two
/// one-sided views.
SubgraphView view_between(const IntervalGraph& g, std::optional<VertexId> b,
                          std::optional<VertexId> w);

/// Independent set of an interval graph listed in interval order:
/// right(m[i]) < left(m[i+1]) for consecutive members.
class OrderedIndependentSet {
 public:
  OrderedIndependentSet() = default;

  /// Sorts `members` into interval order and validates independence.
  static OrderedIndependentSet from_members(const IntervalGraph& g,
                                            std::vector<VertexId> members);

  const std::vector<VertexId>& members() const& { return members_; }
  std::vector<VertexId> members() && { return std::move(members_); }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  VertexId operator[](int i) const { return members_[i]; }

  friend bool operator==(const OrderedIndependentSet&,
                         const OrderedIndependentSet&) = default;

 private:
  explicit OrderedIndependentSet(std::vector<VertexId> members)
      : members_(std::move(members)) {}

  friend OrderedIndependentSet leftmost_independent_set(const SubgraphView&);
  friend OrderedIndependentSet rightmost_independent_set(const SubgraphView&);

  std::vector<VertexId> members_;
};

/// Greedy maximum independent set of the view: repeatedly take the member
/// with the smallest right endpoint, then recurse on the part of the view
/// strictly right of it.
OrderedIndependentSet leftmost_independent_set(const SubgraphView& view);

/// Mirror construction under reversal of the line: repeatedly take the
/// member with the largest left endpoint, then recurse strictly left of it.
OrderedIndependentSet rightmost_independent_set(const SubgraphView& view);

/// Size of the leftmost independent set, which is maximum.
int independence_number(const SubgraphView& view);

}  // namespace tsr
