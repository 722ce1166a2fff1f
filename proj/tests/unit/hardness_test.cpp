#include "doctest.h"

#include <set>
#include <sstream>

#include "test_support.hpp"
#include "tsr/hardness.hpp"
#include "tsr/ts_oracle.hpp"

using namespace tsr;
using namespace tsr::test;

namespace {

std::set<std::pair<std::string, std::string>> cross_edges(const SplitInstance& inst) {
  std::set<std::pair<std::string, std::string>> out;
  for (VertexId u : inst.clique_part)
    for (VertexId w : inst.graph.neighbors(u))
      if (inst.stable_part.contains(w))
        out.insert({inst.graph.label(u), inst.graph.label(w)});
  return out;
}

CheckStatus status_of(const Report& report, const std::string& name) {
  for (const auto& check : report.checks)
    if (check.name == name) return check.status;
  FAIL("missing check ", name);
  return CheckStatus::skipped;
}

}  // namespace

TEST_CASE("split gadget for the one-edge graph") {
  const auto inst = build_split_instance(k2_graph(), 1);
  CHECK(inst.graph.vertex_count() == 9);
  CHECK(inst.clique_part.size() == 4);
  CHECK(inst.stable_part.size() == 5);

  const std::set<std::pair<std::string, std::string>> expected{
      {"u1", "w1"}, {"u1", "w2"}, {"u2", "w1"}, {"u2", "w2"},
      {"u3", "w3"}, {"u4", "w4"}, {"u1", "w5"}, {"u2", "w5"}};
  CHECK(cross_edges(inst) == expected);

  for (VertexId a : inst.clique_part)
    for (VertexId b : inst.clique_part)
      if (a != b) CHECK(inst.graph.adjacent(a, b));
  for (VertexId a : inst.stable_part)
    for (VertexId b : inst.stable_part)
      if (a != b) CHECK_FALSE(inst.graph.adjacent(a, b));
}

TEST_CASE("split gadget size follows the closed form") {
  for (int n : {1, 2, 4}) {
    for (int k : {1, 2, 3}) {
      const auto inst = build_split_instance(path_graph(n), k);
      CHECK(inst.graph.vertex_count() == 2 * n + 2 * k + 3);
    }
  }
  CHECK_THROWS_AS((void)build_split_instance(path_graph(2), 0), InputError);
}

TEST_CASE("split gadget mirrors the source adjacency block") {
  const auto inst = build_split_instance(path_graph(3), 1);
  int block_edges = 0;
  for (int i = 1; i <= 3; ++i) {
    const VertexId u = inst.clique_vertex(i);
    for (int j = 1; j <= 3; ++j)
      if (inst.graph.adjacent(u, inst.stable_vertex(j))) ++block_edges;
  }
  CHECK(block_edges == 7);  // three diagonal pairs plus both path edges twice
}

TEST_CASE("parts file") {
  const auto inst = build_split_instance(k2_graph(), 1);
  std::ostringstream out;
  write_parts(out, inst);
  CHECK(out.str() == "K: u1 u2 u3 u4\nS: w1 w2 w3 w4 w5\n");
}

TEST_CASE("gadget edge counts follow their closed forms") {
  for (const auto& g : {cycle_graph(5), path_graph(4), cycle_graph(6)}) {
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    for (int k : {1, 2, 3}) {
      const long long clique = n + k + 1;
      const long long expected =
          clique * (clique - 1) / 2 + (n + 2 * m) + (k + 1) + n;
      CHECK(build_split_instance(g, k).graph.edge_count() ==
            static_cast<std::size_t>(expected));
    }
    for (int k : {2, 4}) {
      const long long plen = 2 * k + 2;
      const long long pairs = static_cast<long long>(k) * (k - 1);
      const long long expected = k * m + pairs / 2 * n + pairs * m +
                                 pairs * n * (plen - 1) + pairs * n * n * plen +
                                 pairs * n;
      CHECK(build_nonblocking_instance(g, k, true).graph.edge_count() ==
            static_cast<std::size_t>(expected));
    }
  }
}

TEST_CASE("non-blocking gadget sizes and degrees") {
  struct Case {
    int n, k;
    long long vertices;
  };
  for (const Case c : {Case{5, 4, 620}, Case{6, 4, 744}, Case{6, 5, 1470}}) {
    const auto source = cycle_graph(c.n);
    const auto inst = build_nonblocking_instance(source, c.k);
    CHECK(inst.graph.vertex_count() == c.vertices);
    // marked endpoint: whole copy, one path neighbor, one vertex of the far copy
    CHECK(inst.graph.degree(inst.path_vertex(1, 2, 1, 1)) == c.n + 2);
    CHECK(inst.graph.degree(inst.path_vertex(1, 2, 1, inst.path_length())) ==
          c.n + 1);
  }
}

TEST_CASE("non-blocking gadget preconditions") {
  CHECK_THROWS_AS((void)build_nonblocking_instance(cycle_graph(5), 3), InputError);
  CHECK_THROWS_AS((void)build_nonblocking_instance(cycle_graph(4), 4), InputError);
  const auto forced = build_nonblocking_instance(path_graph(3), 2, true);
  CHECK(forced.graph.vertex_count() == 2 * 3 + 2 * 3 * (2 * 2 + 2));
}

TEST_CASE("copies inside the gadget are isomorphic to the source") {
  const auto source = path_graph(3);
  const auto inst = build_nonblocking_instance(source, 2, true);
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 3; ++a)
      for (int b = a + 1; b <= 3; ++b)
        CHECK(inst.graph.adjacent(inst.copy_vertex(a, i),
                                  inst.copy_vertex(b, i)) ==
              source.adjacent(a - 1, b - 1));
  // copies of one vertex are joined across copies
  CHECK(inst.graph.adjacent(inst.copy_vertex(1, 1), inst.copy_vertex(1, 2)));
  // the marked path endpoint reaches its vertex in the other copy
  CHECK(inst.graph.adjacent(inst.path_vertex(1, 2, 3, 1), inst.copy_vertex(3, 2)));
  CHECK_FALSE(
      inst.graph.adjacent(inst.path_vertex(1, 2, 3, 2), inst.copy_vertex(3, 2)));
}

TEST_CASE("brute-force dominating sets") {
  CHECK(has_dominating_set(path_graph(3), 1));
  CHECK(find_dominating_set(path_graph(3), 1) == std::vector<VertexId>{1});
  CHECK_FALSE(has_dominating_set(cycle_graph(4), 1));
  CHECK_FALSE(has_dominating_set(edgeless_graph(2), 1));

  SearchBudget tiny{2};  // the first dominating pair of C6 is the third subset
  CHECK_THROWS_AS((void)has_dominating_set(cycle_graph(6), 2, tiny),
                  ResourceLimitError);
}

TEST_CASE("brute-force blocking sets") {
  CHECK(has_blocking_set(path_graph(3), 2));
  CHECK_FALSE(has_blocking_set(path_graph(3), 1));
  CHECK_FALSE(has_blocking_set(cycle_graph(4), 1));
}

TEST_CASE("split reduction verification") {
  const auto report_k2 = verify_split_reduction(k2_graph(), 1);
  CHECK(report_k2.all_passed());
  CHECK(status_of(report_k2, "dominating-case") == CheckStatus::pass);

  // no 1-dominating set and not 1-blocking: the gadget must stay connected
  const auto report_c4 = verify_split_reduction(cycle_graph(4), 1);
  CHECK(report_c4.all_passed());
  CHECK(status_of(report_c4, "nonblocking-case") == CheckStatus::pass);
  CHECK(oracle_is_connected(build_split_instance(cycle_graph(4), 1).graph, 2) ==
        Connectivity::connected);

  const auto report_p3 = verify_split_reduction(path_graph(3), 1);
  CHECK(report_p3.all_passed());
  CHECK(oracle_is_connected(build_split_instance(path_graph(3), 1).graph, 2) ==
        Connectivity::disconnected);

  ReductionBudget tiny;
  tiny.search.max_subsets = 1;
  const auto partial = verify_split_reduction(cycle_graph(5), 2, tiny);
  CHECK(status_of(partial, "dominating-case") == CheckStatus::skipped);
}

TEST_CASE("split reduction reports adjacent-twin counterexamples honestly") {
  // A perfect matching has no 1-dominating set and no blocking singleton,
  // yet each matched pair lands on stable vertices with identical gadget
  // neighborhoods, so those pairs freeze and the sliding graph disconnects.
  GraphBuilder b;
  for (int i = 1; i <= 4; ++i) b.add_vertex("v" + std::to_string(i));
  b.add_edge(0, 3);
  b.add_edge(1, 2);
  const auto g = std::move(b).build();
  CHECK_FALSE(has_blocking_set(g, 1));
  CHECK_FALSE(has_dominating_set(g, 1));

  const auto inst = build_split_instance(g, 1);
  CHECK(oracle_is_connected(inst.graph, 2) == Connectivity::disconnected);
  const auto frozen = frozen_sets(inst.graph, 2);
  const std::vector<VertexId> twins{inst.stable_vertex(1), inst.stable_vertex(4)};
  CHECK(std::find(frozen.begin(), frozen.end(), twins) != frozen.end());

  const auto report = verify_split_reduction(g, 1);
  CHECK_FALSE(report.all_passed());
  CHECK(status_of(report, "nonblocking-case") == CheckStatus::fail);
  CHECK(status_of(report, "split-structure") == CheckStatus::pass);
}

TEST_CASE("report format") {
  Report report;
  report.title = "demo";
  report.add("alpha", true, "fine");
  report.add("beta", false);
  report.skip("gamma", "over budget");
  std::ostringstream out;
  write_report(out, report);
  CHECK(out.str() ==
        "== demo ==\n"
        "CHECK alpha PASS fine\n"
        "CHECK beta FAIL\n"
        "CHECK gamma SKIP over budget\n");
  CHECK_FALSE(report.all_passed());
}

TEST_CASE("non-blocking gadget audit") {
  const auto report = audit_nonblocking_instance(cycle_graph(5), 4);
  CHECK(report.all_passed());
  CHECK(status_of(report, "transported-dominating") == CheckStatus::pass);
  bool partial_noted = false;
  for (const auto& check : report.checks)
    if (check.name == "blocking-probes")
      partial_noted = check.detail.find("partial") != std::string::npos;
  CHECK(partial_noted);
}
