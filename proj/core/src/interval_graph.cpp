#include "tsr/interval_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tsr {

namespace {

struct Endpoint {
  long long value;
  int vertex;
  bool is_right;
};

}  // namespace

IntervalGraph IntervalGraph::from_intervals(std::vector<IntervalSpec> specs,
                                            bool canonicalize) {
  IntervalGraph g;
  g.canonicalized_ = canonicalize;
  const int n = static_cast<int>(specs.size());
  g.lefts_.resize(n);
  g.rights_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& s = specs[i];
    if (g.index_.count(s.label))
      throw InputError("duplicate interval '" + s.label + "'");
    g.index_.emplace(s.label, i);
    g.labels_.push_back(std::move(s.label));
    g.lefts_[i] = s.left;
    g.rights_[i] = s.right;
  }

  if (canonicalize) {
    std::vector<Endpoint> endpoints;
    endpoints.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      if (g.lefts_[i] > g.rights_[i])
        throw InputError("interval '" + g.labels_[i] +
                         "' has left endpoint greater than right endpoint");
      endpoints.push_back({g.lefts_[i], i, false});
      endpoints.push_back({g.rights_[i], i, true});
    }
    std::sort(endpoints.begin(), endpoints.end(),
              [](const Endpoint& a, const Endpoint& b) {
                if (a.value != b.value) return a.value < b.value;
                if (a.vertex != b.vertex) return a.vertex < b.vertex;
                return a.is_right < b.is_right;
              });
    long long next = 1;
    for (const Endpoint& e : endpoints) {
      (e.is_right ? g.rights_ : g.lefts_)[e.vertex] = next++;
    }
  } else {
    std::vector<long long> values;
    values.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      if (g.lefts_[i] >= g.rights_[i])
        throw InputError("interval '" + g.labels_[i] +
                         "' must have left endpoint strictly below right "
                         "endpoint (got " +
                         std::to_string(g.lefts_[i]) + " >= " +
                         std::to_string(g.rights_[i]) + ")");
      values.push_back(g.lefts_[i]);
      values.push_back(g.rights_[i]);
    }
    std::sort(values.begin(), values.end());
    std::string collisions;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] == values[i - 1] &&
          (i < 2 || values[i] != values[i - 2])) {
        if (!collisions.empty()) collisions += ", ";
        collisions += std::to_string(values[i]);
      }
    }
    if (!collisions.empty())
      throw InputError("endpoint values must be pairwise distinct; repeated: " +
                       collisions + " (use canonicalization to break ties)");
  }

  g.by_left_.resize(n);
  g.by_right_.resize(n);
  for (int i = 0; i < n; ++i) g.by_left_[i] = g.by_right_[i] = i;
  std::sort(g.by_left_.begin(), g.by_left_.end(),
            [&](VertexId a, VertexId b) { return g.lefts_[a] < g.lefts_[b]; });
  std::sort(g.by_right_.begin(), g.by_right_.end(),
            [&](VertexId a, VertexId b) { return g.rights_[a] < g.rights_[b]; });

  std::vector<long long> sorted_lefts(n);
  for (int i = 0; i < n; ++i) sorted_lefts[i] = g.lefts_[g.by_left_[i]];
  g.first_right_index_.resize(n);
  for (int v = 0; v < n; ++v) {
    auto it = std::upper_bound(sorted_lefts.begin(), sorted_lefts.end(),
                               g.rights_[v]);
    g.first_right_index_[v] = static_cast<int>(it - sorted_lefts.begin());
  }
  return g;
}

long long IntervalGraph::left(VertexId v) const {
  check_vertex(v);
  return lefts_[v];
}

long long IntervalGraph::right(VertexId v) const {
  check_vertex(v);
  return rights_[v];
}

const std::string& IntervalGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> IntervalGraph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId IntervalGraph::require_vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw InputError("unknown interval '" + std::string(label) + "'");
  return *v;
}

void IntervalGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex id " + std::to_string(v) + " is out of range");
}

bool IntervalGraph::adjacent(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  return std::max(lefts_[a], lefts_[b]) <= std::min(rights_[a], rights_[b]);
}

int IntervalGraph::first_index_right_of(VertexId u) const {
  check_vertex(u);
  return first_right_index_[u];
}

Graph IntervalGraph::to_graph() const {
  GraphBuilder b;
  for (VertexId v = 0; v < vertex_count(); ++v) b.add_vertex(labels_[v]);
  // In left order, u intersects exactly the following intervals that start
  // before u ends, a contiguous range.
  for (int i = 0; i < vertex_count(); ++i) {
    const VertexId u = by_left_[i];
    for (int j = i + 1; j < vertex_count(); ++j) {
      const VertexId v = by_left_[j];
      if (lefts_[v] > rights_[u]) break;
      b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

SubgraphView::SubgraphView(const IntervalGraph& g, std::optional<VertexId> lower,
                           std::optional<VertexId> upper)
    : host_(&g), lower_(lower), upper_(upper) {
  if (lower_) g.check_vertex(*lower_);
  if (upper_) g.check_vertex(*upper_);
}

bool SubgraphView::contains(VertexId v) const {
  host_->check_vertex(v);
  if (lower_ && host_->left(v) <= host_->right(*lower_)) return false;
  if (upper_ && host_->right(v) >= host_->left(*upper_)) return false;
  return true;
}

std::vector<VertexId> SubgraphView::members_by_left() const {
  std::vector<VertexId> out;
  const auto& order = host_->order_by_left();
  const int start = lower_ ? host_->first_index_right_of(*lower_) : 0;
  const long long limit =
      upper_ ? host_->left(*upper_) : std::numeric_limits<long long>::max();
  for (int i = start; i < host_->vertex_count(); ++i) {
    const VertexId v = order[i];
    if (host_->right(v) < limit) out.push_back(v);
  }
  return out;
}

int SubgraphView::member_count() const {
  return static_cast<int>(members_by_left().size());
}

bool SubgraphView::empty() const {
  const auto& order = host_->order_by_left();
  const int start = lower_ ? host_->first_index_right_of(*lower_) : 0;
  const long long limit =
      upper_ ? host_->left(*upper_) : std::numeric_limits<long long>::max();
  for (int i = start; i < host_->vertex_count(); ++i)
    if (host_->right(order[i]) < limit) return false;
  return true;
}

SubgraphView view_right_of(const IntervalGraph& g, std::optional<VertexId> b) {
  return SubgraphView(g, b, std::nullopt);
}

SubgraphView view_left_of(const IntervalGraph& g, std::optional<VertexId> w) {
  return SubgraphView(g, std::nullopt, w);
}

SubgraphView view_between(const IntervalGraph& g, std::optional<VertexId> b,
                          std::optional<VertexId> w) {
  return SubgraphView(g, b, w);
}

OrderedIndependentSet OrderedIndependentSet::from_members(
    const IntervalGraph& g, std::vector<VertexId> members) {
  for (VertexId v : members) g.check_vertex(v);
  std::sort(members.begin(), members.end(),
            [&](VertexId a, VertexId b) { return g.left(a) < g.left(b); });
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    if (members[i] == members[i + 1])
      throw InputError("independent set lists vertex '" +
                       g.label(members[i]) + "' twice");
    if (g.right(members[i]) >= g.left(members[i + 1]))
      throw InputError("vertices '" + g.label(members[i]) + "' and '" +
                       g.label(members[i + 1]) +
                       "' intersect; the set is not independent");
  }
  return OrderedIndependentSet(std::move(members));
}

OrderedIndependentSet leftmost_independent_set(const SubgraphView& view) {
  const IntervalGraph& g = view.host();
  std::vector<VertexId> members;
  long long lower_limit = std::numeric_limits<long long>::min();
  if (view.lower_bound()) lower_limit = g.right(*view.lower_bound());
  const long long upper_limit = view.upper_bound()
                                    ? g.left(*view.upper_bound())
                                    : std::numeric_limits<long long>::max();
  // Right order makes the greedy choice the first admissible vertex.
  for (VertexId v : g.order_by_right()) {
    if (g.left(v) <= lower_limit || g.right(v) >= upper_limit) continue;
    members.push_back(v);
    lower_limit = g.right(v);
  }
  return OrderedIndependentSet(std::move(members));
}

OrderedIndependentSet rightmost_independent_set(const SubgraphView& view) {
  const IntervalGraph& g = view.host();
  std::vector<VertexId> members;
  long long upper_limit = std::numeric_limits<long long>::max();
  if (view.upper_bound()) upper_limit = g.left(*view.upper_bound());
  const long long lower_limit = view.lower_bound()
                                    ? g.right(*view.lower_bound())
                                    : std::numeric_limits<long long>::min();
  const auto& order = g.order_by_left();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (g.right(v) >= upper_limit || g.left(v) <= lower_limit) continue;
    members.push_back(v);
    upper_limit = g.left(v);
  }
  std::reverse(members.begin(), members.end());
  return OrderedIndependentSet(std::move(members));
}

int independence_number(const SubgraphView& view) {
  return leftmost_independent_set(view).size();
}

}  // namespace tsr
