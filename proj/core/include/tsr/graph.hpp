#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsr/errors.hpp"

namespace tsr {

using VertexId = std::int32_t;

/// Tri-state connectivity answer for a token-sliding reconfiguration graph.
/// `empty` means there is no independent set of the requested size at all;
/// it is reported separately and never folded into `connected`.
enum class Connectivity { connected, disconnected, empty };

std::string_view to_string(Connectivity c);

/// Simple undirected graph over dense vertex ids 0..n-1 with stable
/// user-facing string labels. Immutable once built (see GraphBuilder);
/// all queries are const and safe to call concurrently.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;

  const std::string& label(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Like find_vertex but throws InputError for unknown labels.
  VertexId require_vertex(std::string_view label) const;
  /// Throws InputError when v is not a vertex of this graph.
  void check_vertex(VertexId v) const;

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
  std::size_t edge_count_ = 0;

  // Adjacency bitset rows, kept for small graphs so independence tests in
  // the state-space search run in O(1) per probe.
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Accumulates vertices and edges, then produces an immutable Graph.
/// Rejects self-loops on insertion and parallel edges at build time;
/// the graphs handled here are always simple.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string label);
  void add_edge(VertexId a, VertexId b);
  void add_edge(std::string_view a, std::string_view b);
  int vertex_count() const { return g_.vertex_count(); }
  Graph build() &&;

 private:
  Graph g_;
};

/// Sorted duplicate-free set of vertex ids. Construction normalizes the
/// member list; membership tests are binary searches.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  static VertexSet of(std::initializer_list<VertexId> members);

  bool contains(VertexId v) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<VertexId>& members() const& { return members_; }
  std::vector<VertexId> members() && { return std::move(members_); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

/// A VertexSet validated to be pairwise non-adjacent in its host graph.
class IndependentSet {
 public:
  IndependentSet() = default;
  /// Throws InputError when `members` contains adjacent vertices or ids
  /// outside the graph.
  IndependentSet(const Graph& g, VertexSet members);

  const VertexSet& set() const { return set_; }
  int size() const { return set_.size(); }

 private:
  VertexSet set_;
};

/// N[v] = N(v) together with v itself.
VertexSet closed_neighborhood(const Graph& g, VertexId v);

/// True when no edge of g joins two members of s.
bool is_independent(const Graph& g, const VertexSet& s);

/// Neighbors of x that lie in no closed neighborhood of another member of s.
/// Requires x to be a member of s.
VertexSet private_neighbors(const Graph& g, const VertexSet& s, VertexId x);

/// True when no member of s has a private neighbor with respect to s.
bool is_blocking(const Graph& g, const VertexSet& s);

/// True when the closed neighborhoods of s cover every vertex of g.
bool is_dominating(const Graph& g, const VertexSet& s);

/// True when no single token slide from i yields another independent set.
/// For independent sets this coincides with is_blocking.
bool is_frozen(const Graph& g, const IndependentSet& i);

}  // namespace tsr
