#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsr/graph.hpp"
#include "tsr/ts_oracle.hpp"

namespace tsr {

/// Split graph produced from a source graph g on n vertices and a target
/// dominating-set size k: a clique u_1..u_{n+k+1} against a stable set
/// w_1..w_{n+k+2}. The block between u_1..u_n and w_1..w_n mirrors the
/// closed-neighborhood structure of g, each u_j with n < j < n+k+2 gets w_j
/// as its only stable neighbor, and w_{n+k+2} attaches to all of u_1..u_n.
/// Its (k+1)-token sliding graph is connected exactly when g has no
/// k-dominating set, provided g is not k-blocking.
struct SplitInstance {
  Graph graph;
  VertexSet clique_part;
  VertexSet stable_part;
  int source_n = 0;
  int source_k = 0;

  VertexId clique_vertex(int i) const;  // u_i, 1-based
  VertexId stable_vertex(int j) const;  // w_j, 1-based
};

SplitInstance build_split_instance(const Graph& g, int k);

/// Companion partition file for a split gadget: a `K:` line and an `S:` line.
void write_parts(std::ostream& out, const SplitInstance& inst);

/// Blow-up of a source graph that preserves k-dominating sets while ruling
/// out blocking sets of size at most k: k interconnected copies of g plus,
/// for every ordered copy pair, n long attached paths. Labels are
/// `v<l>@G<i>` for copy vertices and `w<l>@U{i,j}#<p>` for the p-th vertex
/// of the l-th path (p = 1 is the endpoint with the extra edge).
struct NonBlockingInstance {
  Graph graph;
  int source_n = 0;
  int source_k = 0;

  int path_length() const { return 2 * source_k + 2; }
  VertexId copy_vertex(int ell, int i) const;                 // v_ell in G_i
  VertexId path_vertex(int i, int j, int ell, int pos) const; // U_{i,j}, path ell
};

/// The construction's guarantees assume k >= 4 and n > k; `force` lifts the
/// precondition for structural testing only.
NonBlockingInstance build_nonblocking_instance(const Graph& g, int k,
                                               bool force = false);

struct SearchBudget {
  std::uint64_t max_subsets = 5'000'000;
};

/// Brute force over all subsets of size exactly k.
bool has_dominating_set(const Graph& g, int k, const SearchBudget& = {});
/// First k-subset (lexicographic over dense ids) that dominates, if any.
std::optional<std::vector<VertexId>> find_dominating_set(const Graph& g, int k,
                                                         const SearchBudget& = {});
/// Brute force over all subsets of size 1..k. The empty set is excluded:
/// it is vacuously blocking and would make the notion trivial.
bool has_blocking_set(const Graph& g, int k, const SearchBudget& = {});

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string detail);
};

/// Human-readable report plus one machine-readable
/// `CHECK <name> PASS|FAIL|SKIP` line per check.
void write_report(std::ostream& out, const Report& report);

struct ReductionBudget {
  OracleLimits oracle;
  SearchBudget search;
};

/// Builds the split gadget for (g, k) and verifies the reduction against the
/// exhaustive oracle: structure and size of the gadget; if g has a
/// k-dominating set, disconnection of the (k+1)-token sliding graph and
/// frozenness of the transported witness; if g is neither k-blocking nor
/// k-dominated, connectivity. Checks whose budget runs out are flagged as
/// skipped rather than failed.
Report verify_split_reduction(const Graph& g, int k,
                              const ReductionBudget& = {});

/// Structural audit of the non-blocking gadget: vertex count and degree
/// closed forms, per-copy adjacency, transport of a brute-forced dominating
/// set, and targeted blocking probes (all singletons, pairs inside one copy,
/// pairs inside one path). The blocking probes are explicitly partial: an
/// exhaustive search over all small subsets is far outside desk budgets.
Report audit_nonblocking_instance(const Graph& g, int k, bool force = false,
                                  const SearchBudget& = {});

}  // namespace tsr
