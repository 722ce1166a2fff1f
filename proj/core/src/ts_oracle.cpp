#include "tsr/ts_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <ostream>
#include <string>
#include <thread>

namespace tsr {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void enumerate_rec(const Graph& g, int k, const std::size_t* cap,
                   std::vector<VertexId>& current, VertexId next,
                   std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(current.size()) == k) {
    if (cap && out.size() >= *cap)
      throw ResourceLimitError(
          "reconfiguration graph exceeds the node cap of " +
          std::to_string(*cap) + " independent sets; raise the cap to proceed");
    out.push_back(current);
    return;
  }
  const int missing = k - static_cast<int>(current.size());
  for (VertexId v = next; v <= g.vertex_count() - missing; ++v) {
    bool compatible = true;
    for (VertexId u : current) {
      if (g.adjacent(u, v)) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    current.push_back(v);
    enumerate_rec(g, k, cap, current, v + 1, out);
    current.pop_back();
  }
}

std::vector<std::vector<VertexId>> enumerate_with_cap(const Graph& g, int k,
                                                      const std::size_t* cap) {
  std::vector<std::vector<VertexId>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<VertexId> current;
  current.reserve(k);
  enumerate_rec(g, k, cap, current, 0, out);
  return out;
}

std::string join_labels(const Graph& g, const std::vector<VertexId>& ids) {
  if (ids.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += '+';
    out += g.label(ids[i]);
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::size_t ReconfigGraph::KeyHash::operator()(
    const std::vector<VertexId>& key) const {
  std::uint64_t h = kFnvOffset;
  for (VertexId v : key) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= kFnvPrime;
  }
  return static_cast<std::size_t>(h);
}

std::optional<std::int32_t> ReconfigGraph::find_node(
    const std::vector<VertexId>& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<VertexId>> enumerate_independent_sets(const Graph& g,
                                                              int k) {
  if (k < 0) throw InputError("independent-set size must be non-negative");
  return enumerate_with_cap(g, k, nullptr);
}

ReconfigGraph build_ts_graph(const Graph& g, int k, const OracleLimits& limits,
                             int threads) {
  if (k < 0) throw InputError("independent-set size must be non-negative");
  ReconfigGraph rg;
  rg.k = k;
  rg.nodes = enumerate_with_cap(g, k, &limits.max_nodes);
  const std::int32_t n_nodes = static_cast<std::int32_t>(rg.nodes.size());
  rg.index_.reserve(rg.nodes.size());
  for (std::int32_t i = 0; i < n_nodes; ++i) rg.index_.emplace(rg.nodes[i], i);
  rg.adjacency.resize(rg.nodes.size());

  // Each row depends only on the node list, so rows can be filled in
  // parallel without changing the result.
  auto fill_rows = [&](std::int32_t begin, std::int32_t end) {
    std::vector<VertexId> candidate;
    for (std::int32_t i = begin; i < end; ++i) {
      const auto& node = rg.nodes[i];
      auto& row = rg.adjacency[i];
      for (VertexId u : node) {
        for (VertexId v : g.neighbors(u)) {
          if (std::binary_search(node.begin(), node.end(), v)) continue;
          bool ok = true;
          for (VertexId w : node) {
            if (w != u && g.adjacent(w, v)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          candidate.clear();
          for (VertexId w : node)
            if (w != u) candidate.push_back(w);
          candidate.insert(
              std::lower_bound(candidate.begin(), candidate.end(), v), v);
          auto it = rg.index_.find(candidate);
          assert(it != rg.index_.end());
          row.push_back(it->second);
        }
      }
      std::sort(row.begin(), row.end());
    }
  };

  if (threads <= 1 || n_nodes < 64) {
    fill_rows(0, n_nodes);
  } else {
    const int workers = std::min<std::int32_t>(threads, n_nodes);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int32_t chunk = (n_nodes + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int32_t begin = w * chunk;
      const std::int32_t end = std::min(n_nodes, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  std::size_t half_edges = 0;
  for (const auto& row : rg.adjacency) half_edges += row.size();
  rg.edge_count = half_edges / 2;

  // Component labels in order of first appearance.
  rg.component.assign(rg.nodes.size(), -1);
  std::vector<std::int32_t> stack;
  for (std::int32_t i = 0; i < n_nodes; ++i) {
    if (rg.component[i] != -1) continue;
    const std::int32_t label = rg.component_count++;
    rg.component[i] = label;
    stack.assign(1, i);
    while (!stack.empty()) {
      const std::int32_t cur = stack.back();
      stack.pop_back();
      for (std::int32_t nb : rg.adjacency[cur]) {
        if (rg.component[nb] == -1) {
          rg.component[nb] = label;
          stack.push_back(nb);
        }
      }
    }
  }
  return rg;
}

Connectivity oracle_is_connected(const Graph& g, int k,
                                 const OracleLimits& limits, int threads) {
  if (k < 0) return Connectivity::empty;
  auto rg = build_ts_graph(g, k, limits, threads);
  if (rg.node_count() == 0) return Connectivity::empty;
  return rg.component_count == 1 ? Connectivity::connected
                                 : Connectivity::disconnected;
}

ReachResult oracle_same_component(const Graph& g, int k,
                                  const IndependentSet& from,
                                  const IndependentSet& to,
                                  const OracleLimits& limits, int threads) {
  if (from.size() != k || to.size() != k)
    throw InputError("both independent sets must have exactly " +
                     std::to_string(k) + " vertices");
  auto rg = build_ts_graph(g, k, limits, threads);
  auto source = rg.find_node(from.set().members());
  auto target = rg.find_node(to.set().members());
  if (!source || !target)
    throw std::logic_error("independent set missing from its reconfiguration graph");
  if (rg.component[*source] != rg.component[*target]) return {false, std::nullopt};

  // BFS shortest slide path.
  std::vector<std::int32_t> parent(rg.node_count(), -1);
  std::deque<std::int32_t> queue{*source};
  parent[*source] = *source;
  while (!queue.empty() && parent[*target] == -1) {
    const std::int32_t cur = queue.front();
    queue.pop_front();
    for (std::int32_t nb : rg.adjacency[cur]) {
      if (parent[nb] == -1) {
        parent[nb] = cur;
        queue.push_back(nb);
      }
    }
  }
  assert(parent[*target] != -1);

  std::vector<std::int32_t> path{*target};
  while (path.back() != *source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());

  SlideSequence seq;
  seq.start = from.set().members();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto& a = rg.nodes[path[i]];
    const auto& b = rg.nodes[path[i + 1]];
    SlideMove move;
    for (VertexId v : a)
      if (!std::binary_search(b.begin(), b.end(), v)) move.from = v;
    for (VertexId v : b)
      if (!std::binary_search(a.begin(), a.end(), v)) move.to = v;
    assert(move.from >= 0 && move.to >= 0);
    seq.moves.push_back(move);
  }
  return {true, std::move(seq)};
}

std::vector<std::vector<VertexId>> frozen_sets(const Graph& g, int k,
                                               const OracleLimits& limits,
                                               int threads) {
  auto rg = build_ts_graph(g, k, limits, threads);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t i = 0; i < rg.node_count(); ++i)
    if (rg.frozen(static_cast<std::int32_t>(i))) out.push_back(rg.nodes[i]);
  return out;
}

TokenTrace trace_tokens(const Graph& g, const SlideSequence& seq) {
  for (VertexId v : seq.start) g.check_vertex(v);
  if (!is_independent(g, VertexSet(seq.start)) ||
      VertexSet(seq.start).size() != static_cast<int>(seq.start.size()))
    throw InputError("slide sequence start is not an independent set");

  TokenTrace trace;
  trace.origins = seq.start;
  trace.positions.push_back(seq.start);

  std::vector<int> slot_of(g.vertex_count(), -1);
  std::vector<VertexId> current = seq.start;
  for (std::size_t i = 0; i < current.size(); ++i) slot_of[current[i]] = static_cast<int>(i);

  int step = 0;
  auto bad = [&](const std::string& msg) {
    throw InputError("invalid slide at step " + std::to_string(step) + ": " + msg);
  };
  for (const SlideMove& move : seq.moves) {
    ++step;
    g.check_vertex(move.from);
    g.check_vertex(move.to);
    if (slot_of[move.from] == -1)
      bad("vertex '" + g.label(move.from) + "' does not hold a token");
    if (slot_of[move.to] != -1)
      bad("vertex '" + g.label(move.to) + "' already holds a token");
    if (!g.adjacent(move.from, move.to))
      bad("no edge between '" + g.label(move.from) + "' and '" +
          g.label(move.to) + "'");
    for (VertexId w : current)
      if (w != move.from && g.adjacent(w, move.to))
        bad("token on '" + g.label(move.to) +
            "' would touch the token on '" + g.label(w) + "'");
    const int slot = slot_of[move.from];
    slot_of[move.from] = -1;
    slot_of[move.to] = slot;
    current[slot] = move.to;
    trace.positions.push_back(current);
  }
  return trace;
}

void write_reconfig_dot(std::ostream& out, const Graph& g,
                        const ReconfigGraph& rg) {
  out << "graph ts {\n";
  for (std::size_t i = 0; i < rg.node_count(); ++i) {
    out << "  n" << i << " [label=\""
        << escape_dot(join_labels(g, rg.nodes[i])) << "\"";
    if (rg.frozen(static_cast<std::int32_t>(i))) out << ", shape=box";
    out << "];\n";
  }
  for (std::size_t i = 0; i < rg.node_count(); ++i)
    for (std::int32_t j : rg.adjacency[i])
      if (static_cast<std::int32_t>(i) < j)
        out << "  n" << i << " -- n" << j << ";\n";
  out << "}\n";
}

void write_witness(std::ostream& out, const Graph& g, const SlideSequence& seq) {
  out << "start: " << join_labels(g, seq.start) << "\n";
  for (const SlideMove& move : seq.moves)
    out << "(" << g.label(move.from) << " -> " << g.label(move.to) << ")\n";
}

}  // namespace tsr
