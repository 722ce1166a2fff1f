#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tsr/graph.hpp"
#include "tsr/interval_graph.hpp"

namespace tsr {

/// Edge-list text format (.edg): `v <id>` lines declare vertices,
/// `e <id1> <id2>` lines declare edges, `#` starts a comment, tokens are
/// whitespace-delimited. Unknown ids, self-loops and repeated edges are
/// reported with their line number.
Graph read_edge_list(std::istream& in, std::string_view source = "<stream>");
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Interval text format (.ivl): `<id> <left> <right>` lines with integer
/// endpoints, `#` comments. The writer emits the stored endpoints, which are
/// the canonicalized ones when canonicalization was applied on input.
IntervalGraph read_intervals(std::istream& in, bool canonicalize,
                             std::string_view source = "<stream>");
IntervalGraph read_intervals_file(const std::string& path, bool canonicalize);
void write_intervals(std::ostream& out, const IntervalGraph& g);

/// Set files (.set): one vertex id per line, `#` comments.
std::vector<std::string> read_set_file(const std::string& path);
/// Comma-separated set literal as passed on the command line: "a,c".
std::vector<std::string> parse_set_literal(std::string_view literal);

/// Resolves labels against a graph, rejecting duplicates and unknown ids.
VertexSet resolve_labels(const Graph& g, const std::vector<std::string>& labels);
std::vector<VertexId> resolve_interval_labels(const IntervalGraph& g,
                                              const std::vector<std::string>& labels);

}  // namespace tsr
