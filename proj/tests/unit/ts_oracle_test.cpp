#include "doctest.h"

#include <sstream>

#include "test_support.hpp"
#include "tsr/hardness.hpp"
#include "tsr/ts_oracle.hpp"

using namespace tsr;
using namespace tsr::test;

TEST_CASE("enumeration of independent sets") {
  const auto p3 = path_graph(3);
  CHECK(enumerate_independent_sets(p3, 2) ==
        std::vector<std::vector<VertexId>>{{0, 2}});

  const auto k2 = k2_graph();
  CHECK(enumerate_independent_sets(k2, 1) ==
        std::vector<std::vector<VertexId>>{{0}, {1}});

  const auto n = nest().to_graph();
  auto sets = enumerate_independent_sets(n, 2);
  CHECK(sets.size() == 6);
  std::sort(sets.begin(), sets.end());
  CHECK(sets == bf_independent_sets(n, 2));

  CHECK(enumerate_independent_sets(p3, 0) ==
        std::vector<std::vector<VertexId>>{{}});
  CHECK_THROWS_AS((void)enumerate_independent_sets(p3, -1), InputError);
}

TEST_CASE("reconfiguration graph construction") {
  const auto p3 = path_graph(3);
  const auto rg = build_ts_graph(p3, 2);
  CHECK(rg.node_count() == 1);
  CHECK(rg.edge_count == 0);
  CHECK(rg.component_count == 1);

  const auto k2 = k2_graph();
  const auto rk = build_ts_graph(k2, 1);
  CHECK(rk.node_count() == 2);
  CHECK(rk.edge_count == 1);
  CHECK(rk.component_count == 1);
  CHECK(rk.find_node({0}).has_value());
  CHECK_FALSE(rk.find_node({0, 1}).has_value());

  const auto gadget = build_split_instance(k2_graph(), 1);
  const auto rg2 = build_ts_graph(gadget.graph, 2);
  CHECK(rg2.component_count >= 2);
}

TEST_CASE("node cap fails loudly") {
  const auto e8 = edgeless_graph(8);
  OracleLimits limits;
  limits.max_nodes = 10;
  CHECK_THROWS_AS((void)build_ts_graph(e8, 3, limits), ResourceLimitError);
}

TEST_CASE("oracle connectivity") {
  CHECK(oracle_is_connected(path_graph(3), 2) == Connectivity::connected);
  CHECK(oracle_is_connected(edgeless_graph(2), 1) == Connectivity::disconnected);
  CHECK(oracle_is_connected(path_graph(3), 3) == Connectivity::empty);
  CHECK(oracle_is_connected(path_graph(3), 0) == Connectivity::connected);
  CHECK(oracle_is_connected(path_graph(3), -2) == Connectivity::empty);
}

TEST_CASE("oracle reachability with witness") {
  const auto k2 = k2_graph();
  auto res = oracle_same_component(k2, 1, IndependentSet(k2, VertexSet::of({0})),
                                   IndependentSet(k2, VertexSet::of({1})));
  REQUIRE(res.reachable);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->moves == std::vector<SlideMove>{{0, 1}});

  const auto e2 = edgeless_graph(2);
  auto none = oracle_same_component(e2, 1, IndependentSet(e2, VertexSet::of({0})),
                                    IndependentSet(e2, VertexSet::of({1})));
  CHECK_FALSE(none.reachable);
  CHECK_FALSE(none.witness.has_value());

  const auto n = nest();
  const auto g = n.to_graph();
  const auto from = IndependentSet(g, named_set(g, {"u", "y"}));
  const auto to = IndependentSet(g, named_set(g, {"x", "z"}));
  auto path = oracle_same_component(g, 2, from, to);
  REQUIRE(path.reachable);
  const auto trace = trace_tokens(g, *path.witness);
  auto final_set = trace.positions.back();
  std::sort(final_set.begin(), final_set.end());
  CHECK(final_set == to.set().members());

  CHECK_THROWS_AS((void)oracle_same_component(
                      g, 1, from, IndependentSet(g, named_set(g, {"x"}))),
                  InputError);
}

TEST_CASE("frozen sets are the isolated nodes") {
  const auto p3 = path_graph(3);
  CHECK(frozen_sets(p3, 2) == std::vector<std::vector<VertexId>>{{0, 2}});
  CHECK(frozen_sets(k2_graph(), 1).empty());

  const auto gadget = build_split_instance(k2_graph(), 1);
  const auto frozen = frozen_sets(gadget.graph, 2);
  const std::vector<VertexId> witness{gadget.stable_vertex(1),
                                      gadget.stable_vertex(5)};
  CHECK(std::find(frozen.begin(), frozen.end(), witness) != frozen.end());
  for (const auto& set : frozen) CHECK(bf_frozen_by_slides(gadget.graph, set));
}

TEST_CASE("token traces") {
  const auto k2 = k2_graph();
  SlideSequence seq{{0}, {{0, 1}}};
  const auto trace = trace_tokens(k2, seq);
  REQUIRE(trace.positions.size() == 2);
  CHECK(trace.origins == std::vector<VertexId>{0});
  CHECK(trace.positions[1] == std::vector<VertexId>{1});

  const SlideSequence constant{{0}, {}};
  CHECK(trace_tokens(k2, constant).positions.size() == 1);

  const auto p3 = path_graph(3);
  SlideSequence bad{{0, 2}, {{0, 1}}};  // v2 touches the token on v3
  CHECK_THROWS_WITH_AS((void)trace_tokens(p3, bad),
                       doctest::Contains("step 1"), InputError);
  SlideSequence bad2{{0}, {{0, 2}}};  // no edge v1-v3
  CHECK_THROWS_WITH_AS((void)trace_tokens(p3, bad2),
                       doctest::Contains("no edge"), InputError);
  SlideSequence bad3{{0, 1}, {}};
  CHECK_THROWS_AS((void)trace_tokens(p3, bad3), InputError);
}

TEST_CASE("dot export marks frozen nodes") {
  const auto p3 = path_graph(3);
  std::ostringstream out;
  write_reconfig_dot(out, p3, build_ts_graph(p3, 2));
  CHECK(out.str() ==
        "graph ts {\n"
        "  n0 [label=\"v1+v3\", shape=box];\n"
        "}\n");

  std::ostringstream out2;
  write_reconfig_dot(out2, k2_graph(), build_ts_graph(k2_graph(), 1));
  CHECK(out2.str() ==
        "graph ts {\n"
        "  n0 [label=\"a\"];\n"
        "  n1 [label=\"b\"];\n"
        "  n0 -- n1;\n"
        "}\n");
}

TEST_CASE("witness file format") {
  const auto p3 = path_graph(3);
  std::ostringstream out;
  write_witness(out, p3, SlideSequence{{0}, {{0, 1}, {1, 2}}});
  CHECK(out.str() ==
        "start: v1\n"
        "(v1 -> v2)\n"
        "(v2 -> v3)\n");
}
