#include "tsr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace tsr {

namespace {

[[noreturn]] void fail(std::string_view source, int line, const std::string& msg) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

// Strips comments and splits on whitespace.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (auto pos = body.find('#'); pos != std::string::npos) body.resize(pos);
  std::istringstream ss(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

long long parse_int(std::string_view source, int line, const std::string& tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(source, line, "expected an integer, got '" + tok + "'");
  return value;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in, std::string_view source) {
  GraphBuilder builder;
  std::unordered_map<std::string, VertexId> ids;
  std::set<std::pair<VertexId, VertexId>> seen_edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "v") {
      if (tokens.size() != 2) fail(source, lineno, "expected 'v <id>'");
      if (ids.count(tokens[1]))
        fail(source, lineno, "duplicate vertex '" + tokens[1] + "'");
      ids.emplace(tokens[1], builder.add_vertex(tokens[1]));
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) fail(source, lineno, "expected 'e <id1> <id2>'");
      auto resolve = [&](const std::string& label) {
        auto it = ids.find(label);
        if (it == ids.end())
          fail(source, lineno, "unknown vertex '" + label + "'");
        return it->second;
      };
      const VertexId a = resolve(tokens[1]);
      const VertexId b = resolve(tokens[2]);
      if (a == b)
        fail(source, lineno, "self-loop at vertex '" + tokens[1] + "'");
      auto key = std::minmax(a, b);
      if (!seen_edges.insert({key.first, key.second}).second)
        fail(source, lineno,
             "edge between '" + tokens[1] + "' and '" + tokens[2] +
                 "' appears more than once");
      builder.add_edge(a, b);
    } else {
      fail(source, lineno, "unknown directive '" + tokens[0] + "'");
    }
  }
  return std::move(builder).build();
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open_file(path);
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "v " << g.label(v) << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.neighbors(v))
      if (v < w) out << "e " << g.label(v) << " " << g.label(w) << "\n";
}

IntervalGraph read_intervals(std::istream& in, bool canonicalize,
                             std::string_view source) {
  std::vector<IntervalSpec> specs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      fail(source, lineno, "expected '<id> <left> <right>'");
    IntervalSpec spec;
    spec.label = tokens[0];
    spec.left = parse_int(source, lineno, tokens[1]);
    spec.right = parse_int(source, lineno, tokens[2]);
    specs.push_back(std::move(spec));
  }
  try {
    return IntervalGraph::from_intervals(std::move(specs), canonicalize);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

IntervalGraph read_intervals_file(const std::string& path, bool canonicalize) {
  auto in = open_file(path);
  return read_intervals(in, canonicalize, path);
}

void write_intervals(std::ostream& out, const IntervalGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << g.label(v) << " " << g.left(v) << " " << g.right(v) << "\n";
}

std::vector<std::string> read_set_file(const std::string& path) {
  auto in = open_file(path);
  std::vector<std::string> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 1)
      fail(path, lineno, "expected one vertex id per line");
    labels.push_back(tokens[0]);
  }
  return labels;
}

std::vector<std::string> parse_set_literal(std::string_view literal) {
  std::vector<std::string> labels;
  std::string current;
  auto flush = [&] {
    // trim surrounding blanks
    std::size_t b = current.find_first_not_of(" \t");
    std::size_t e = current.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw InputError("empty vertex id in set literal '" +
                       std::string(literal) + "'");
    labels.push_back(current.substr(b, e - b + 1));
    current.clear();
  };
  for (char c : literal) {
    if (c == ',')
      flush();
    else
      current += c;
  }
  flush();
  return labels;
}

VertexSet resolve_labels(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) ids.push_back(g.require_vertex(label));
  VertexSet set(ids);
  if (set.size() != static_cast<int>(labels.size()))
    throw InputError("set lists a vertex more than once");
  return set;
}

std::vector<VertexId> resolve_interval_labels(
    const IntervalGraph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) ids.push_back(g.require_vertex(label));
  return ids;
}

}  // namespace tsr
