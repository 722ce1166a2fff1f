#include "tsr/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

namespace tsr {

namespace {

std::string plus_joined(const Graph& g, const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += '+';
    out += g.label(ids[i]);
  }
  return out;
}

// Visits subsets of {0..n-1} of size exactly k in lexicographic order until
// pred accepts one; every visited subset costs one unit of budget.
template <typename Pred>
std::optional<std::vector<VertexId>> first_subset(int n, int k,
                                                  std::uint64_t& budget,
                                                  Pred&& pred) {
  if (k < 0 || k > n) return std::nullopt;
  std::vector<VertexId> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (budget == 0)
      throw ResourceLimitError("subset search budget exhausted");
    --budget;
    if (pred(idx)) return idx;
    // advance to the next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexId SplitInstance::clique_vertex(int i) const { return i - 1; }

VertexId SplitInstance::stable_vertex(int j) const {
  return source_n + source_k + 1 + j - 1;
}

SplitInstance build_split_instance(const Graph& g, int k) {
  if (k < 1) throw InputError("build_split_instance requires k >= 1");
  const int n = g.vertex_count();
  const int clique_size = n + k + 1;
  const int stable_size = n + k + 2;

  GraphBuilder builder;
  for (int i = 1; i <= clique_size; ++i)
    builder.add_vertex("u" + std::to_string(i));
  for (int j = 1; j <= stable_size; ++j)
    builder.add_vertex("w" + std::to_string(j));

  SplitInstance inst;
  inst.source_n = n;
  inst.source_k = k;

  for (int i = 1; i <= clique_size; ++i)
    for (int j = i + 1; j <= clique_size; ++j)
      builder.add_edge(i - 1, j - 1);

  // The block between u_1..u_n and w_1..w_n mirrors closed neighborhoods of
  // the source graph.
  const auto stable_id = [&](int j) { return clique_size + j - 1; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i == j || g.adjacent(i - 1, j - 1))
        builder.add_edge(i - 1, stable_id(j));
  for (int j = n + 1; j <= n + k + 1; ++j) builder.add_edge(j - 1, stable_id(j));
  for (int i = 1; i <= n; ++i) builder.add_edge(i - 1, stable_id(stable_size));

  inst.graph = std::move(builder).build();
  std::vector<VertexId> clique(clique_size), stable(stable_size);
  std::iota(clique.begin(), clique.end(), 0);
  std::iota(stable.begin(), stable.end(), clique_size);
  inst.clique_part = VertexSet(std::move(clique));
  inst.stable_part = VertexSet(std::move(stable));
  return inst;
}

void write_parts(std::ostream& out, const SplitInstance& inst) {
  out << "K:";
  for (VertexId v : inst.clique_part) out << " " << inst.graph.label(v);
  out << "\nS:";
  for (VertexId v : inst.stable_part) out << " " << inst.graph.label(v);
  out << "\n";
}

VertexId NonBlockingInstance::copy_vertex(int ell, int i) const {
  return (i - 1) * source_n + (ell - 1);
}

VertexId NonBlockingInstance::path_vertex(int i, int j, int ell, int pos) const {
  const int k = source_k;
  const int block = (i - 1) * (k - 1) + (j < i ? j - 1 : j - 2);
  return k * source_n + block * source_n * path_length() +
         (ell - 1) * path_length() + (pos - 1);
}

NonBlockingInstance build_nonblocking_instance(const Graph& g, int k,
                                               bool force) {
  const int n = g.vertex_count();
  if (n < 1 || k < 1)
    throw InputError("build_nonblocking_instance needs a non-empty source "
                     "graph and k >= 1");
  if (!force && (k < 4 || n <= k))
    throw InputError("the construction assumes k >= 4 and n > k; pass force "
                     "to build it anyway for structural testing");

  NonBlockingInstance inst;
  inst.source_n = n;
  inst.source_k = k;
  const int plen = inst.path_length();

  GraphBuilder builder;
  for (int i = 1; i <= k; ++i)
    for (int ell = 1; ell <= n; ++ell)
      builder.add_vertex("v" + std::to_string(ell) + "@G" + std::to_string(i));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (int ell = 1; ell <= n; ++ell)
        for (int pos = 1; pos <= plen; ++pos)
          builder.add_vertex("w" + std::to_string(ell) + "@U{" +
                             std::to_string(i) + "," + std::to_string(j) +
                             "}#" + std::to_string(pos));
    }

  // Copies carry the source edges; across two copies, copies of one vertex
  // and copies of adjacent vertices are joined.
  for (int i = 1; i <= k; ++i)
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b : g.neighbors(a))
        if (a < b)
          builder.add_edge(inst.copy_vertex(a + 1, i),
                           inst.copy_vertex(b + 1, i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      for (int ell = 1; ell <= n; ++ell)
        builder.add_edge(inst.copy_vertex(ell, i), inst.copy_vertex(ell, j));
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b : g.neighbors(a)) {
          if (a >= b) continue;
          builder.add_edge(inst.copy_vertex(a + 1, i),
                           inst.copy_vertex(b + 1, j));
          builder.add_edge(inst.copy_vertex(b + 1, i),
                           inst.copy_vertex(a + 1, j));
        }
    }

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      for (int ell = 1; ell <= n; ++ell) {
        for (int pos = 1; pos < plen; ++pos)
          builder.add_edge(inst.path_vertex(i, j, ell, pos),
                           inst.path_vertex(i, j, ell, pos + 1));
        // every vertex of copy i sees the whole path
        for (int cg = 1; cg <= n; ++cg)
          for (int pos = 1; pos <= plen; ++pos)
            builder.add_edge(inst.copy_vertex(cg, i),
                             inst.path_vertex(i, j, ell, pos));
        // the marked endpoint additionally sees its vertex in copy j
        builder.add_edge(inst.path_vertex(i, j, ell, 1),
                         inst.copy_vertex(ell, j));
      }
    }

  inst.graph = std::move(builder).build();
  return inst;
}

bool has_dominating_set(const Graph& g, int k, const SearchBudget& budget) {
  return find_dominating_set(g, k, budget).has_value();
}

std::optional<std::vector<VertexId>> find_dominating_set(
    const Graph& g, int k, const SearchBudget& budget) {
  std::uint64_t remaining = budget.max_subsets;
  return first_subset(g.vertex_count(), k, remaining,
                      [&](const std::vector<VertexId>& subset) {
                        return is_dominating(g, VertexSet(subset));
                      });
}

bool has_blocking_set(const Graph& g, int k, const SearchBudget& budget) {
  std::uint64_t remaining = budget.max_subsets;
  for (int size = 1; size <= k; ++size) {
    auto found = first_subset(g.vertex_count(), size, remaining,
                              [&](const std::vector<VertexId>& subset) {
                                return is_blocking(g, VertexSet(subset));
                              });
    if (found) return true;
  }
  return false;
}

bool Report::all_passed() const {
  for (const auto& check : checks)
    if (check.status == CheckStatus::fail) return false;
  return true;
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name),
                    ok ? CheckStatus::pass : CheckStatus::fail,
                    std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
}

void write_report(std::ostream& out, const Report& report) {
  out << "== " << report.title << " ==\n";
  for (const auto& check : report.checks) {
    const char* status = check.status == CheckStatus::pass   ? "PASS"
                         : check.status == CheckStatus::fail ? "FAIL"
                                                             : "SKIP";
    out << "CHECK " << check.name << " " << status;
    if (!check.detail.empty()) out << " " << check.detail;
    out << "\n";
  }
}

Report verify_split_reduction(const Graph& g, int k,
                              const ReductionBudget& budget) {
  const int n = g.vertex_count();
  Report report;
  report.title = "split reduction report (n=" + std::to_string(n) +
                 ", k=" + std::to_string(k) + ")";

  const SplitInstance inst = build_split_instance(g, k);

  bool split_ok = true;
  for (VertexId a : inst.clique_part)
    for (VertexId b : inst.clique_part)
      if (a < b && !inst.graph.adjacent(a, b)) split_ok = false;
  for (VertexId a : inst.stable_part)
    for (VertexId b : inst.stable_part)
      if (a < b && inst.graph.adjacent(a, b)) split_ok = false;
  split_ok = split_ok && (inst.clique_part.size() + inst.stable_part.size() ==
                          inst.graph.vertex_count());
  report.add("split-structure", split_ok,
             "clique " + std::to_string(inst.clique_part.size()) +
                 ", stable " + std::to_string(inst.stable_part.size()));

  report.add("gadget-size",
             inst.graph.vertex_count() == 2 * n + 2 * k + 3 &&
                 inst.clique_part.size() == n + k + 1 &&
                 inst.stable_part.size() == n + k + 2,
             std::to_string(inst.graph.vertex_count()) + " vertices");

  std::optional<std::vector<VertexId>> dominating;
  bool dominating_known = true;
  try {
    dominating = find_dominating_set(g, k, budget.search);
  } catch (const ResourceLimitError&) {
    dominating_known = false;
  }

  std::optional<bool> blocking;
  try {
    blocking = has_blocking_set(g, k, budget.search);
  } catch (const ResourceLimitError&) {
  }

  std::optional<Connectivity> ts;
  try {
    ts = oracle_is_connected(inst.graph, k + 1, budget.oracle);
  } catch (const ResourceLimitError&) {
  }

  if (!dominating_known) {
    report.skip("dominating-case", "dominating-set search over budget");
  } else if (!dominating) {
    report.add("dominating-case", true, "not applicable (no " +
                                            std::to_string(k) +
                                            "-dominating set)");
  } else if (!ts) {
    report.skip("dominating-case", "oracle over budget");
  } else {
    std::vector<VertexId> witness;
    for (VertexId v : *dominating)
      witness.push_back(inst.stable_vertex(v + 1));
    witness.push_back(inst.stable_vertex(n + k + 2));
    bool frozen = false;
    bool valid = true;
    try {
      frozen = is_frozen(inst.graph, IndependentSet(inst.graph, VertexSet(witness)));
    } catch (const InputError&) {
      valid = false;
    }
    const bool ok = *ts == Connectivity::disconnected && valid && frozen;
    report.add("dominating-case", ok,
               "witness " + plus_joined(inst.graph, witness) +
                   (ok ? " frozen, sliding graph disconnected"
                       : " check failed"));
  }

  if (!blocking.has_value() || !dominating_known) {
    report.skip("nonblocking-case", "blocking or dominating search over budget");
  } else if (*blocking || dominating) {
    report.add("nonblocking-case", true,
               std::string("not applicable (") +
                   (*blocking ? "source is k-blocking" : "k-dominating set exists") +
                   ")");
  } else if (!ts) {
    report.skip("nonblocking-case", "oracle over budget");
  } else {
    report.add("nonblocking-case", *ts == Connectivity::connected,
               "sliding graph with " + std::to_string(k + 1) + " tokens is " +
                   std::string(to_string(*ts)));
  }
  return report;
}

Report audit_nonblocking_instance(const Graph& g, int k, bool force,
                                  const SearchBudget& budget) {
  const int n = g.vertex_count();
  Report report;
  report.title = "non-blocking gadget audit (n=" + std::to_string(n) +
                 ", k=" + std::to_string(k) + ")";

  const NonBlockingInstance inst = build_nonblocking_instance(g, k, force);
  const Graph& h = inst.graph;
  const int plen = inst.path_length();

  const long long expected_vertices =
      static_cast<long long>(k) * n +
      static_cast<long long>(k) * (k - 1) * n * plen;
  report.add("vertex-count", h.vertex_count() == expected_vertices,
             std::to_string(h.vertex_count()) + " vertices (closed form " +
                 std::to_string(expected_vertices) + ")");

  bool degrees_ok = true;
  const long long attach = static_cast<long long>(k - 1) * n * plen;
  for (int i = 1; i <= k && degrees_ok; ++i)
    for (int ell = 1; ell <= n && degrees_ok; ++ell) {
      const long long expected =
          2 * (k - 1) + static_cast<long long>(k) * g.degree(ell - 1) + attach;
      degrees_ok = h.degree(inst.copy_vertex(ell, i)) == expected;
    }
  for (int i = 1; i <= k && degrees_ok; ++i)
    for (int j = 1; j <= k && degrees_ok; ++j) {
      if (i == j) continue;
      for (int ell = 1; ell <= n && degrees_ok; ++ell)
        for (int pos = 1; pos <= plen && degrees_ok; ++pos) {
          const int expected = pos == 1      ? n + 2
                               : pos == plen ? n + 1
                                             : n + 2;
          degrees_ok = h.degree(inst.path_vertex(i, j, ell, pos)) == expected;
        }
    }
  report.add("degree-audit", degrees_ok,
             "copy, endpoint and interior degrees match closed forms");

  bool copies_ok = true;
  for (int i = 1; i <= k && copies_ok; ++i)
    for (int j = i; j <= k && copies_ok; ++j)
      for (int a = 1; a <= n && copies_ok; ++a)
        for (int b = (i == j ? a + 1 : 1); b <= n && copies_ok; ++b) {
          const bool expected = (i != j && a == b) || g.adjacent(a - 1, b - 1);
          copies_ok = h.adjacent(inst.copy_vertex(a, i),
                                 inst.copy_vertex(b, j)) == expected;
        }
  report.add("copy-adjacency", copies_ok,
             "copies replicate the source graph and interconnect as required");

  std::optional<std::vector<VertexId>> dominating;
  bool search_done = true;
  try {
    dominating = find_dominating_set(g, k, budget);
  } catch (const ResourceLimitError&) {
    search_done = false;
  }
  if (!search_done) {
    report.skip("transported-dominating", "dominating-set search over budget");
  } else if (!dominating) {
    report.add("transported-dominating", true,
               "not applicable (no " + std::to_string(k) + "-dominating set)");
  } else {
    std::vector<VertexId> transported;
    for (int t = 0; t < k; ++t)
      transported.push_back(inst.copy_vertex((*dominating)[t] + 1, t + 1));
    report.add("transported-dominating",
               is_dominating(h, VertexSet(transported)),
               plus_joined(h, transported) + " dominates the gadget");
  }

  bool probes_ok = true;
  std::size_t probes = 0;
  for (VertexId v = 0; v < h.vertex_count() && probes_ok; ++v) {
    probes_ok = !is_blocking(h, VertexSet({v}));
    ++probes;
  }
  for (int a = 1; a <= n && probes_ok; ++a)
    for (int b = a + 1; b <= n && probes_ok; ++b) {
      probes_ok = !is_blocking(
          h, VertexSet({inst.copy_vertex(a, 1), inst.copy_vertex(b, 1)}));
      ++probes;
    }
  if (k >= 2)
    for (int p = 1; p <= plen && probes_ok; ++p)
      for (int q = p + 1; q <= plen && probes_ok; ++q) {
        probes_ok = !is_blocking(h, VertexSet({inst.path_vertex(1, 2, 1, p),
                                               inst.path_vertex(1, 2, 1, q)}));
        ++probes;
      }
  report.add("blocking-probes", probes_ok,
             "partial: " + std::to_string(probes) +
                 " targeted subsets non-blocking; exhaustive search over all "
                 "subsets of size <= " +
                 std::to_string(k) + " is outside desk budget");
  return report;
}

}  // namespace tsr
