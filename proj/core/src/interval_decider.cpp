#include "tsr/interval_decider.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace tsr {

namespace {

// a strictly before b under the left order, infinity ordered last.
bool left_less(const IntervalGraph& g, ExtendedVertex a, ExtendedVertex b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return g.left(a.id()) < g.left(b.id());
}

struct Run {
  VertexId r_min = -1;  // member with the smallest right endpoint
  VertexId l_max = -1;  // member with the largest left endpoint
};

// Extremes of the connected component of `c` among the intervals with
// left(v) > right(lower) (when set) and right(v) < left(upper) (when set).
// Components of an induced interval subgraph are exactly the maximal runs of
// its left-sorted member list in which each interval starts before the
// furthest right end seen so far, so one sweep suffices.
std::optional<Run> component_run(const IntervalGraph& g,
                                 std::optional<VertexId> lower,
                                 std::optional<VertexId> upper, VertexId c) {
  const auto& order = g.order_by_left();
  const int n = g.vertex_count();
  const long long upper_limit =
      upper ? g.left(*upper) : std::numeric_limits<long long>::max();
  int i = lower ? g.first_index_right_of(*lower) : 0;
  bool in_run = false;
  bool seen_c = false;
  Run run;
  long long reach = 0;
  for (; i < n; ++i) {
    const VertexId v = order[i];
    if (g.right(v) >= upper_limit) continue;
    if (!in_run || g.left(v) > reach) {
      if (seen_c) return run;
      run = Run{v, v};
      reach = g.right(v);
      in_run = true;
    } else {
      if (g.right(v) < g.right(run.r_min)) run.r_min = v;
      run.l_max = v;  // left-sorted, so the latest member has the largest left
      reach = std::max(reach, g.right(v));
    }
    if (v == c) seen_c = true;
  }
  if (seen_c) return run;
  return std::nullopt;
}

// Shared fixpoint of the two table procedures. Starting from leftmost token
// position u, alternately (a) ask how far right the rest of the tokens can be
// guaranteed to move once the leftmost token sits on c (`next_highest`), and
// (b) slide the leftmost token as far left as its component in the freed
// window allows. The leftmost position only ever moves left, so the loop
// settles within |V| rounds; the final window also yields the furthest-right
// reachable leftmost position.
template <typename NextHighest>
IndexPair leftmost_fixpoint(const IntervalGraph& g,
                            std::optional<VertexId> lower, VertexId u,
                            NextHighest&& next_highest) {
  VertexId c = u;
  Run run;
  int rounds = 0;
  for (;;) {
    if (++rounds > g.vertex_count() + 1)
      throw std::logic_error("leftmost fixpoint failed to settle");
    const ExtendedVertex block = next_highest(c);
    if (block.is_infinity()) return IndexPair{};
    auto r = component_run(g, lower, block.id(), c);
    if (!r) throw std::logic_error("leftmost fixpoint left its view");
    run = *r;
    if (run.r_min == c) break;
    if (g.right(run.r_min) > g.right(c))
      throw std::logic_error("leftmost fixpoint is not monotone");
    c = run.r_min;
  }
  return IndexPair{ExtendedVertex(c), ExtendedVertex(run.l_max)};
}

// Whether the two vertices share a connected component of the view.
bool same_view_component(const IntervalGraph& g, std::optional<VertexId> lower,
                         VertexId x, VertexId y) {
  if (x == y) return true;
  const auto& order = g.order_by_left();
  int i = lower ? g.first_index_right_of(*lower) : 0;
  int run_id = -1;
  int run_of_x = -1;
  int run_of_y = -1;
  long long reach = 0;
  bool in_run = false;
  for (; i < g.vertex_count(); ++i) {
    const VertexId v = order[i];
    if (!in_run || g.left(v) > reach) {
      ++run_id;
      reach = g.right(v);
      in_run = true;
    } else {
      reach = std::max(reach, g.right(v));
    }
    if (v == x) run_of_x = run_id;
    if (v == y) run_of_y = run_id;
    if (run_of_x != -1 && run_of_y != -1) break;
  }
  if (run_of_x == -1 || run_of_y == -1)
    throw std::logic_error("component query outside the view");
  return run_of_x == run_of_y;
}

}  // namespace

std::pair<VertexId, VertexId> component_extremes(const SubgraphView& view,
                                                 VertexId u) {
  const IntervalGraph& g = view.host();
  g.check_vertex(u);
  if (!view.contains(u))
    throw InputError("component_extremes: vertex '" + g.label(u) +
                     "' lies outside the view");
  auto run = component_run(g, view.lower_bound(), view.upper_bound(), u);
  assert(run);
  return {run->r_min, run->l_max};
}

WorstIndexTable::WorstIndexTable(const IntervalGraph& g, int max_k, int threads)
    : g_(&g), n_(g.vertex_count()), max_k_(max_k) {
  if (max_k < 1) throw InputError("worst-index table needs max_k >= 1");
  levels_.resize(max_k);
  for (auto& level : levels_)
    level.assign(static_cast<std::size_t>(n_ + 1) * n_, IndexPair{});
  if (n_ == 0) return;
  build_level_one();
  std::vector<std::vector<ExtendedVertex>> suffix_min;
  for (int k = 2; k <= max_k; ++k) {
    // suffix_min[c][i] = smallest (left order) w_r(v, k-1, G_c) over the
    // vertices v at positions i.. of the left-sorted order; the suffix
    // starting at first_index_right_of(u) covers exactly the intervals
    // strictly right of u.
    suffix_min.assign(n_, std::vector<ExtendedVertex>(n_ + 1));
    for (VertexId c = 0; c < n_; ++c) {
      auto& row = suffix_min[c];
      row[n_] = ExtendedVertex::infinity();
      for (int i = n_ - 1; i >= 0; --i) {
        const ExtendedVertex cand =
            entry(k - 1, c + 1, g.order_by_left()[i]).highest;
        row[i] = left_less(g, cand, row[i + 1]) ? cand : row[i + 1];
      }
    }
    build_level(k, suffix_min, threads);
  }
}

IndexPair& WorstIndexTable::entry(int k, int b_index, VertexId u) {
  return levels_[k - 1][static_cast<std::size_t>(b_index) * n_ + u];
}

const IndexPair& WorstIndexTable::entry(int k, int b_index, VertexId u) const {
  return levels_[k - 1][static_cast<std::size_t>(b_index) * n_ + u];
}

void WorstIndexTable::build_level_one() {
  const IntervalGraph& g = *g_;
  const auto& order = g.order_by_left();
  for (int b_index = 0; b_index <= n_; ++b_index) {
    const int start = b_index ? g.first_index_right_of(b_index - 1) : 0;
    std::vector<VertexId> run_members;
    Run run;
    long long reach = 0;
    bool in_run = false;
    auto flush = [&] {
      for (VertexId v : run_members)
        entry(1, b_index, v) =
            IndexPair{ExtendedVertex(run.r_min), ExtendedVertex(run.l_max)};
      run_members.clear();
    };
    for (int i = start; i < n_; ++i) {
      const VertexId v = order[i];
      if (!in_run || g.left(v) > reach) {
        flush();
        run = Run{v, v};
        reach = g.right(v);
        in_run = true;
      } else {
        if (g.right(v) < g.right(run.r_min)) run.r_min = v;
        run.l_max = v;
        reach = std::max(reach, g.right(v));
      }
      run_members.push_back(v);
    }
    flush();
  }
}

IndexPair WorstIndexTable::compute_entry(
    int b_index, VertexId u,
    const std::vector<std::vector<ExtendedVertex>>& suffix_min) const {
  const IntervalGraph& g = *g_;
  const std::optional<VertexId> lower =
      b_index ? std::optional<VertexId>(b_index - 1) : std::nullopt;
  if (lower && g.left(u) <= g.right(*lower)) return IndexPair{};
  const int rest_start = g.first_index_right_of(u);
  return leftmost_fixpoint(g, lower, u, [&](VertexId c) {
    return suffix_min[c][rest_start];
  });
}

void WorstIndexTable::build_level(
    int k, const std::vector<std::vector<ExtendedVertex>>& suffix_min,
    int threads) {
  auto fill = [&](int b_begin, int b_end) {
    for (int b_index = b_begin; b_index < b_end; ++b_index)
      for (VertexId u = 0; u < n_; ++u)
        entry(k, b_index, u) = compute_entry(b_index, u, suffix_min);
  };
  if (threads <= 1 || n_ < 16) {
    fill(0, n_ + 1);
    return;
  }
  const int workers = std::min(threads, n_ + 1);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n_ + 1 + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * chunk;
    const int end = std::min(n_ + 1, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fill, begin, end);
  }
  for (auto& t : pool) t.join();
}

IndexPair WorstIndexTable::worst_indices(VertexId u, int k,
                                         std::optional<VertexId> b) const {
  g_->check_vertex(u);
  if (b) g_->check_vertex(*b);
  if (k < 1 || k > max_k_)
    throw std::logic_error("worst-index level " + std::to_string(k) +
                           " was not built (table holds levels 1.." +
                           std::to_string(max_k_) + ")");
  return entry(k, b ? *b + 1 : 0, u);
}

Connectivity is_ts_connected(const IntervalGraph& g, int k, int threads) {
  if (k < 0) return Connectivity::empty;
  if (k == 0) return Connectivity::connected;
  const auto leftmost = leftmost_independent_set(SubgraphView(g));
  if (k > leftmost.size()) return Connectivity::empty;

  // Every configuration can reach the leftmost set exactly when, for each
  // prefix length i, every possible start position of the (i+1)-st token can
  // be pushed down to the (i+1)-st leftmost vertex; entries with no matching
  // configuration are infinite and impose nothing.
  WorstIndexTable table(g, k, threads);
  for (int i = 0; i < k; ++i) {
    const std::optional<VertexId> bound =
        i == 0 ? std::nullopt : std::optional<VertexId>(leftmost[i - 1]);
    const ExtendedVertex target(leftmost[i]);
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      if (bound && g.left(a) <= g.right(*bound)) continue;
      const ExtendedVertex lowest = table.worst_indices(a, k - i, bound).lowest;
      if (!lowest.is_infinity() && lowest != target)
        return Connectivity::disconnected;
    }
  }
  return Connectivity::connected;
}

ExtremeTable::ExtremeTable(const IntervalGraph& g, OrderedIndependentSet host)
    : g_(&g), host_(std::move(host)) {
  memo_.assign(static_cast<std::size_t>(host_.size()) *
                   (g.vertex_count() + 1),
               std::nullopt);
}

IndexPair ExtremeTable::extremes(int start, std::optional<VertexId> b) {
  if (start < 0 || start >= host_.size())
    throw std::logic_error("right-subset start index out of range");
  if (b) g_->check_vertex(*b);
  return compute(start, b ? *b + 1 : 0);
}

IndexPair ExtremeTable::compute(int start, int b_index) {
  auto& slot =
      memo_[static_cast<std::size_t>(start) * (g_->vertex_count() + 1) +
            b_index];
  if (slot) return *slot;

  const IntervalGraph& g = *g_;
  const std::optional<VertexId> lower =
      b_index ? std::optional<VertexId>(b_index - 1) : std::nullopt;
  const VertexId u = host_[start];
  IndexPair result;
  if (!lower || g.left(u) > g.right(*lower)) {
    if (start + 1 == host_.size()) {
      auto run = component_run(g, lower, std::nullopt, u);
      assert(run);
      result = IndexPair{ExtendedVertex(run->r_min), ExtendedVertex(run->l_max)};
    } else {
      result = leftmost_fixpoint(g, lower, u, [&](VertexId c) {
        return compute(start + 1, c + 1).highest;
      });
    }
  }
  slot = result;
  return result;
}

bool same_component(const IntervalGraph& g, int k,
                    const std::vector<VertexId>& first,
                    const std::vector<VertexId>& second) {
  if (k < 1) throw InputError("same_component requires k >= 1");
  if (static_cast<int>(first.size()) != k ||
      static_cast<int>(second.size()) != k)
    throw InputError("both independent sets must have exactly " +
                     std::to_string(k) + " vertices");
  auto lhs = OrderedIndependentSet::from_members(g, first);
  auto rhs = OrderedIndependentSet::from_members(g, second);

  ExtremeTable lhs_table(g, lhs);
  ExtremeTable rhs_table(g, rhs);
  std::optional<VertexId> bound;
  for (int t = 0; t < k; ++t) {
    if (t == k - 1) return same_view_component(g, bound, lhs[t], rhs[t]);
    const ExtendedVertex a = lhs_table.extremes(t, bound).lowest;
    const ExtendedVertex b = rhs_table.extremes(t, bound).lowest;
    if (a != b) return false;
    if (a.is_infinity())
      throw std::logic_error("reachable extreme missing for a valid set");
    bound = a.id();
  }
  return true;  // unreachable: the loop exits at t == k-1
}

}  // namespace tsr
