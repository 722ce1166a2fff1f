#include "doctest.h"

#include <sstream>

#include "test_support.hpp"
#include "tsr/io.hpp"

using namespace tsr;
using namespace tsr::test;

TEST_CASE("edge list parsing") {
  std::istringstream in(
      "# tiny path\n"
      "v v1\n"
      "v v2\n"
      "v v3   # trailing comment\n"
      "\n"
      "e v1 v2\n"
      "e v2 v3\n");
  const auto g = read_edge_list(in, "p3.edg");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("edge list errors carry line numbers") {
  auto expect_error = [](const char* text, const char* needle) {
    std::istringstream in(text);
    CHECK_THROWS_WITH_AS((void)read_edge_list(in, "bad.edg"),
                         doctest::Contains(needle), InputError);
  };
  expect_error("v a\ne a b\n", "bad.edg:2");
  expect_error("v a\ne a b\n", "unknown vertex 'b'");
  expect_error("v a\nv a\n", "bad.edg:2");
  expect_error("v a\ne a a\n", "self-loop");
  expect_error("v a\nv b\ne a b\ne b a\n", "more than once");
  expect_error("x a\n", "unknown directive");
  expect_error("v a b\n", "expected 'v <id>'");
}

TEST_CASE("edge list round trip") {
  const auto g = path_graph(4);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  const auto h = read_edge_list(in);
  REQUIRE(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    CHECK(h.label(a) == g.label(a));
    for (VertexId b = 0; b < g.vertex_count(); ++b)
      CHECK(h.adjacent(a, b) == g.adjacent(a, b));
  }
}

TEST_CASE("interval file parsing") {
  std::istringstream in(
      "# three intervals\n"
      "a 0 2\n"
      "b 1 4\n"
      "c 3 5\n");
  const auto g = read_intervals(in, false, "p3i.ivl");
  CHECK(g.vertex_count() == 3);
  CHECK(g.adjacent(0, 1));

  std::istringstream bad("a 0\n");
  CHECK_THROWS_WITH_AS((void)read_intervals(bad, false, "x.ivl"),
                       doctest::Contains("x.ivl:1"), InputError);
  std::istringstream nonint("a 0 zz\n");
  CHECK_THROWS_WITH_AS((void)read_intervals(nonint, false, "x.ivl"),
                       doctest::Contains("integer"), InputError);
}

TEST_CASE("interval writer emits canonicalized endpoints") {
  std::istringstream in("a 0 2\nb 2 4\n");
  const auto g = read_intervals(in, true, "tie.ivl");
  std::ostringstream out;
  write_intervals(out, g);
  CHECK(out.str() == "a 1 2\nb 3 4\n");
}

TEST_CASE("set files and literals") {
  CHECK(parse_set_literal("a,c") == std::vector<std::string>{"a", "c"});
  CHECK(parse_set_literal(" a , c ") == std::vector<std::string>{"a", "c"});
  CHECK_THROWS_AS((void)parse_set_literal("a,,c"), InputError);

  const auto g = path_graph(3);
  CHECK(resolve_labels(g, {"v1", "v3"}) == named_set(g, {"v1", "v3"}));
  CHECK_THROWS_AS((void)resolve_labels(g, {"v1", "v1"}), InputError);
  CHECK_THROWS_AS((void)resolve_labels(g, {"zz"}), InputError);
}
