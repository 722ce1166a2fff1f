#include "tsr/graph.hpp"

#include <algorithm>

namespace tsr {

namespace {

// Above this size the quadratic bitset rows stop paying for themselves.
constexpr int kBitsetVertexLimit = 64 * 1024;

}  // namespace

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::connected:
      return "connected";
    case Connectivity::disconnected:
      return "disconnected";
    case Connectivity::empty:
      return "empty";
  }
  return "unknown";
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  if (words_per_row_ != 0) {
    const std::uint64_t word = bits_[a * words_per_row_ + b / 64];
    return (word >> (b % 64)) & 1u;
  }
  const auto& smaller = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const VertexId other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(smaller.begin(), smaller.end(), other);
}

const std::string& Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::require_vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) throw InputError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex id " + std::to_string(v) + " is out of range");
}

VertexId GraphBuilder::add_vertex(std::string label) {
  if (g_.index_.count(label))
    throw InputError("duplicate vertex '" + label + "'");
  const VertexId id = g_.vertex_count();
  g_.index_.emplace(label, id);
  g_.labels_.push_back(std::move(label));
  g_.adj_.emplace_back();
  return id;
}

void GraphBuilder::add_edge(VertexId a, VertexId b) {
  g_.check_vertex(a);
  g_.check_vertex(b);
  if (a == b)
    throw InputError("self-loop at vertex '" + g_.labels_[a] + "' is not allowed");
  g_.adj_[a].push_back(b);
  g_.adj_[b].push_back(a);
  ++g_.edge_count_;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  add_edge(g_.require_vertex(a), g_.require_vertex(b));
}

Graph GraphBuilder::build() && {
  const int n = g_.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    auto& row = g_.adj_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end())
      throw InputError("parallel edge between '" + g_.labels_[v] + "' and '" +
                       g_.labels_[*dup] + "'");
  }
  if (n > 0 && n <= kBitsetVertexLimit) {
    g_.words_per_row_ = static_cast<std::size_t>((n + 63) / 64);
    g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_per_row_, 0);
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w : g_.adj_[v])
        g_.bits_[v * g_.words_per_row_ + w / 64] |= std::uint64_t{1} << (w % 64);
  }
  return std::move(g_);
}

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::of(std::initializer_list<VertexId> members) {
  return VertexSet(std::vector<VertexId>(members));
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (VertexId v : s) g.check_vertex(v);
}

}  // namespace

IndependentSet::IndependentSet(const Graph& g, VertexSet members)
    : set_(std::move(members)) {
  check_members(g, set_);
  if (!is_independent(g, set_))
    throw InputError("vertex set is not independent");
}

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<VertexId> out = g.neighbors(v);
  out.push_back(v);
  return VertexSet(std::move(out));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.adjacent(m[i], m[j])) return false;
  return true;
}

VertexSet private_neighbors(const Graph& g, const VertexSet& s, VertexId x) {
  check_members(g, s);
  g.check_vertex(x);
  if (!s.contains(x))
    throw InputError("private_neighbors: vertex '" + g.label(x) +
                     "' is not a member of the set");
  std::vector<bool> covered(g.vertex_count(), false);
  for (VertexId y : s) {
    if (y == x) continue;
    covered[y] = true;
    for (VertexId w : g.neighbors(y)) covered[w] = true;
  }
  std::vector<VertexId> out;
  for (VertexId w : g.neighbors(x))
    if (!covered[w]) out.push_back(w);
  return VertexSet(std::move(out));
}

bool is_blocking(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  // cover[v] counts the members whose closed neighborhood contains v; a
  // neighbor v of x is private to x exactly when cover[v] == 1.
  std::vector<int> cover(g.vertex_count(), 0);
  for (VertexId y : s) {
    ++cover[y];
    for (VertexId w : g.neighbors(y)) ++cover[w];
  }
  for (VertexId x : s)
    for (VertexId w : g.neighbors(x))
      if (cover[w] == 1) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<bool> covered(g.vertex_count(), false);
  for (VertexId y : s) {
    covered[y] = true;
    for (VertexId w : g.neighbors(y)) covered[w] = true;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) return false;
  return true;
}

bool is_frozen(const Graph& g, const IndependentSet& i) {
  return is_blocking(g, i.set());
}

}  // namespace tsr
