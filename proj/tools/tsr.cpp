// Command-line front end: polynomial connectivity/reachability deciders for
// interval graphs, the exhaustive sliding oracle for arbitrary graphs, gadget
// generators, DOT export, and randomized decider-vs-oracle cross-checking.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsr/hardness.hpp"
#include "tsr/interval_decider.hpp"
#include "tsr/interval_graph.hpp"
#include "tsr/io.hpp"
#include "tsr/random_instances.hpp"
#include "tsr/ts_oracle.hpp"
#include "tsr/version.hpp"

namespace {

using namespace tsr;

bool has_extension(const std::string& path, std::string_view ext) {
  return std::filesystem::path(path).extension() == ext;
}

Graph load_graph(const std::string& path, bool canonicalize) {
  if (has_extension(path, ".ivl"))
    return read_intervals_file(path, canonicalize).to_graph();
  return read_edge_list_file(path);
}

std::vector<std::string> gather_set(const std::string& literal,
                                    const std::string& file,
                                    const char* which) {
  if (!literal.empty() && !file.empty())
    throw InputError(std::string("give --") + which + " or --" + which +
                     "-file, not both");
  if (!literal.empty()) return parse_set_literal(literal);
  if (!file.empty()) return read_set_file(file);
  throw InputError(std::string("missing --") + which + " (or --" + which +
                   "-file)");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot write '" + path + "'");
  return file;
}

struct ConnectivityCmd {
  std::string input;
  int k = 0;
  bool canonicalize = false;
  bool quiet = false;
  int threads = 1;

  int run() const {
    const auto g = read_intervals_file(input, canonicalize);
    const auto result = is_ts_connected(g, k, threads);
    if (!quiet) std::cout << to_string(result) << "\n";
    if (quiet && result == Connectivity::disconnected) return 1;
    return 0;
  }
};

struct ReachableCmd {
  std::string input;
  int k = -1;
  std::string from, from_file, to, to_file;
  bool canonicalize = false;
  bool quiet = false;

  int run() const {
    const auto g = read_intervals_file(input, canonicalize);
    const auto from_ids =
        resolve_interval_labels(g, gather_set(from, from_file, "from"));
    const auto to_ids =
        resolve_interval_labels(g, gather_set(to, to_file, "to"));
    const int size = static_cast<int>(from_ids.size());
    if (k >= 0 && k != size)
      throw InputError("-k disagrees with the size of the given sets");
    const bool reachable = same_component(g, size, from_ids, to_ids);
    if (!quiet) std::cout << (reachable ? "reachable" : "unreachable") << "\n";
    return quiet && !reachable ? 1 : 0;
  }
};

struct OracleCmd {
  std::string input;
  int k = 0;
  std::string from, from_file, to, to_file;
  std::string witness_path;
  bool canonicalize = false;
  bool quiet = false;
  int threads = 1;
  std::size_t node_cap = OracleLimits{}.max_nodes;

  OracleLimits limits() const { return OracleLimits{node_cap}; }

  int run_connectivity() const {
    const auto g = load_graph(input, canonicalize);
    const auto result = oracle_is_connected(g, k, limits(), threads);
    if (!quiet) std::cout << to_string(result) << "\n";
    if (quiet && result == Connectivity::disconnected) return 1;
    return 0;
  }

  int run_reachable() const {
    const auto g = load_graph(input, canonicalize);
    const auto from_set =
        resolve_labels(g, gather_set(from, from_file, "from"));
    const auto to_set = resolve_labels(g, gather_set(to, to_file, "to"));
    const int size = from_set.size();
    if (k > 0 && k != size)
      throw InputError("-k disagrees with the size of the given sets");
    const auto result =
        oracle_same_component(g, size, IndependentSet(g, from_set),
                              IndependentSet(g, to_set), limits(), threads);
    if (result.reachable && !witness_path.empty()) {
      std::ofstream out(witness_path);
      if (!out) throw InputError("cannot write '" + witness_path + "'");
      write_witness(out, g, *result.witness);
    }
    if (!quiet)
      std::cout << (result.reachable ? "reachable" : "unreachable") << "\n";
    return quiet && !result.reachable ? 1 : 0;
  }

  int run_frozen() const {
    const auto g = load_graph(input, canonicalize);
    const auto sets = frozen_sets(g, k, limits(), threads);
    if (!quiet) {
      for (const auto& set : sets) {
        for (std::size_t i = 0; i < set.size(); ++i)
          std::cout << (i ? "+" : "") << g.label(set[i]);
        std::cout << "\n";
      }
    }
    return quiet && sets.empty() ? 1 : 0;
  }
};

struct GenSplitCmd {
  std::string input;
  int k = 1;
  std::string output;
  std::string parts_path;
  bool verify = false;
  bool quiet = false;

  int run() const {
    const auto g = load_graph(input, false);
    const auto inst = build_split_instance(g, k);
    std::ofstream file;
    write_edge_list(open_output(file, output), inst.graph);
    std::string parts = parts_path;
    if (parts.empty() && !output.empty())
      parts = std::filesystem::path(output).replace_extension(".parts").string();
    if (!parts.empty()) {
      std::ofstream pf(parts);
      if (!pf) throw InputError("cannot write '" + parts + "'");
      write_parts(pf, inst);
    }
    if (!quiet && !output.empty())
      std::cout << "split gadget: " << inst.graph.vertex_count()
                << " vertices, " << inst.graph.edge_count() << " edges -> "
                << output << (parts.empty() ? "" : " and " + parts) << "\n";
    if (verify) {
      const auto report = verify_split_reduction(g, k);
      write_report(std::cout, report);
      return report.all_passed() ? 0 : 1;
    }
    return 0;
  }
};

struct GenNonBlockingCmd {
  std::string input;
  int k = 4;
  std::string output;
  bool force = false;
  bool audit = false;
  bool quiet = false;

  int run() const {
    const auto g = load_graph(input, false);
    const auto inst = build_nonblocking_instance(g, k, force);
    std::ofstream file;
    write_edge_list(open_output(file, output), inst.graph);
    if (!quiet && !output.empty())
      std::cout << "non-blocking gadget: " << inst.graph.vertex_count()
                << " vertices, " << inst.graph.edge_count() << " edges -> "
                << output << "\n";
    if (audit) {
      const auto report = audit_nonblocking_instance(g, k, force);
      write_report(std::cout, report);
      return report.all_passed() ? 0 : 1;
    }
    return 0;
  }
};

struct GenRandomIntervalCmd {
  int n = 8;
  std::uint64_t seed = 1;
  std::string output;

  int run() const {
    std::mt19937_64 rng(seed);
    const auto g = random_interval_graph(n, rng);
    std::ofstream file;
    auto& out = open_output(file, output);
    out << "# rng: random-interval(seed=" << seed << ")\n";
    write_intervals(out, g);
    return 0;
  }
};

struct ExportDotCmd {
  std::string input;
  int k = 0;
  std::string output;
  bool canonicalize = false;
  int threads = 1;
  std::size_t node_cap = OracleLimits{}.max_nodes;

  int run() const {
    const auto g = load_graph(input, canonicalize);
    const auto rg = build_ts_graph(g, k, OracleLimits{node_cap}, threads);
    std::ofstream file;
    write_reconfig_dot(open_output(file, output), g, rg);
    return 0;
  }
};

struct CrosscheckCmd {
  int trials = 100;
  std::uint64_t seed = 1;
  int n_min = 2;
  int n_max = 8;
  int k_max = 3;
  std::string mode = "both";
  bool quiet = false;
  int threads = 1;
  std::size_t node_cap = OracleLimits{}.max_nodes;

  void dump_instance(const IntervalGraph& g) const {
    std::cout << "# instance (.ivl)\n";
    std::ostringstream buffer;
    write_intervals(buffer, g);
    std::cout << buffer.str();
  }

  int run() const {
    if (n_min < 1 || n_max < n_min)
      throw InputError("need 1 <= n-min <= n-max");
    if (trials < 1) throw InputError("need at least one trial");
    const OracleLimits limits{node_cap};
    std::mt19937_64 rng(seed);
    if (!quiet) std::cout << "rng: crosscheck(seed=" << seed << ")\n";
    for (int trial = 1; trial <= trials; ++trial) {
      const int n =
          n_min + static_cast<int>(bounded_random(rng, n_max - n_min + 1));
      const auto g = random_interval_graph(n, rng);
      const auto abstract = g.to_graph();
      const int alpha = independence_number(SubgraphView(g));

      if (mode != "reachable") {
        for (int k = 1; k <= std::min(k_max, alpha + 1); ++k) {
          const auto decided = is_ts_connected(g, k, threads);
          const auto truth = oracle_is_connected(abstract, k, limits, threads);
          if (decided != truth) {
            if (!quiet) {
              std::cout << "mismatch at trial " << trial << ": connectivity k="
                        << k << ": decider=" << to_string(decided)
                        << " oracle=" << to_string(truth) << "\n";
              dump_instance(g);
            }
            return 1;
          }
        }
      }
      if (mode != "connectivity") {
        for (int k = 1; k <= std::min(k_max, alpha); ++k) {
          const auto rg = build_ts_graph(abstract, k, limits, threads);
          for (std::size_t i = 0; i < rg.node_count(); ++i)
            for (std::size_t j = i + 1; j < rg.node_count(); ++j) {
              const bool decided = same_component(g, k, rg.nodes[i], rg.nodes[j]);
              const bool truth = rg.component[i] == rg.component[j];
              if (decided != truth) {
                if (!quiet) {
                  auto label = [&](const std::vector<VertexId>& ids) {
                    std::string out;
                    for (std::size_t t = 0; t < ids.size(); ++t)
                      out += (t ? "+" : "") + g.label(ids[t]);
                    return out;
                  };
                  std::cout << "mismatch at trial " << trial
                            << ": reachable k=" << k << " from="
                            << label(rg.nodes[i]) << " to=" << label(rg.nodes[j])
                            << ": decider=" << (decided ? "reachable" : "unreachable")
                            << " oracle=" << (truth ? "reachable" : "unreachable")
                            << "\n";
                  dump_instance(g);
                }
                return 1;
              }
            }
        }
      }
    }
    if (!quiet) std::cout << trials << "/" << trials << " agree\n";
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"token sliding over independent sets: interval-graph deciders, "
               "exhaustive oracle, and split-graph gadget generators"};
  app.set_version_flag("--version", std::string("tsr ") + kVersion);
  app.require_subcommand(1);

  ConnectivityCmd connectivity;
  auto* conn = app.add_subcommand(
      "connectivity", "Decide connectivity of the k-token sliding graph of an "
                      "interval instance (polynomial decider)");
  conn->add_option("-i,--input", connectivity.input, "interval instance (.ivl)")
      ->required();
  conn->add_option("-k", connectivity.k, "number of tokens")->required();
  conn->add_flag("--canonicalize", connectivity.canonicalize,
                 "break endpoint ties deterministically and reindex to 1..2n");
  conn->add_flag("-q,--quiet", connectivity.quiet,
                 "no output; exit 0 unless disconnected");
  conn->add_option("--threads", connectivity.threads, "worker threads");

  ReachableCmd reachable;
  auto* reach = app.add_subcommand(
      "reachable", "Decide whether two independent sets of an interval "
                   "instance can slide into each other (polynomial decider)");
  reach->add_option("-i,--input", reachable.input, "interval instance (.ivl)")
      ->required();
  reach->add_option("-k", reachable.k, "number of tokens (defaults to set size)");
  reach->add_option("--from", reachable.from, "comma-separated vertex ids");
  reach->add_option("--from-file", reachable.from_file, "set file (.set)");
  reach->add_option("--to", reachable.to, "comma-separated vertex ids");
  reach->add_option("--to-file", reachable.to_file, "set file (.set)");
  reach->add_flag("--canonicalize", reachable.canonicalize,
                  "break endpoint ties deterministically");
  reach->add_flag("-q,--quiet", reachable.quiet,
                  "no output; exit 0 when reachable, 1 otherwise");

  OracleCmd oracle;
  auto* orc = app.add_subcommand(
      "oracle", "Exhaustive state-space search on any graph (.edg or .ivl)");
  orc->require_subcommand(1);
  auto add_oracle_common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("-i,--input", oracle.input, "graph (.edg) or intervals (.ivl)")
        ->required();
    if (with_k) sub->add_option("-k", oracle.k, "number of tokens")->required();
    sub->add_flag("--canonicalize", oracle.canonicalize,
                  "canonicalize .ivl endpoints");
    sub->add_flag("-q,--quiet", oracle.quiet, "exit code carries the answer");
    sub->add_option("--threads", oracle.threads, "worker threads");
    sub->add_option("--node-cap", oracle.node_cap,
                    "abort when the state space exceeds this many nodes");
  };
  auto* orc_conn = orc->add_subcommand("connectivity",
                                       "connected | disconnected | empty");
  add_oracle_common(orc_conn, true);
  auto* orc_reach =
      orc->add_subcommand("reachable", "reachable | unreachable, with witness");
  add_oracle_common(orc_reach, false);
  orc_reach->add_option("--from", oracle.from, "comma-separated vertex ids");
  orc_reach->add_option("--from-file", oracle.from_file, "set file (.set)");
  orc_reach->add_option("--to", oracle.to, "comma-separated vertex ids");
  orc_reach->add_option("--to-file", oracle.to_file, "set file (.set)");
  orc_reach->add_option("--witness", oracle.witness_path,
                        "write the slide sequence to this file");
  auto* orc_frozen =
      orc->add_subcommand("frozen", "list frozen sets, one per line");
  add_oracle_common(orc_frozen, true);

  auto* gen = app.add_subcommand("gen", "Instance and gadget generators");
  gen->require_subcommand(1);

  GenSplitCmd gen_split;
  auto* gsp = gen->add_subcommand(
      "split", "split gadget whose (k+1)-token sliding graph is connected "
               "exactly when the source has no k-dominating set");
  gsp->add_option("-i,--input", gen_split.input, "source graph (.edg or .ivl)")
      ->required();
  gsp->add_option("-k", gen_split.k, "dominating-set size")->required();
  gsp->add_option("-o,--output", gen_split.output, "output gadget (.edg)");
  gsp->add_option("--parts", gen_split.parts_path,
                  "partition file (.parts); derived from -o when omitted");
  gsp->add_flag("--verify", gen_split.verify,
                "verify the reduction against the oracle and print a report");
  gsp->add_flag("-q,--quiet", gen_split.quiet, "suppress the summary line");

  GenNonBlockingCmd gen_nb;
  auto* gnb = gen->add_subcommand(
      "nonblocking", "dominating-set-preserving gadget with no small blocking "
                     "sets");
  gnb->add_option("-i,--input", gen_nb.input, "source graph (.edg or .ivl)")
      ->required();
  gnb->add_option("-k", gen_nb.k, "dominating-set size")->required();
  gnb->add_option("-o,--output", gen_nb.output, "output gadget (.edg)");
  gnb->add_flag("--force", gen_nb.force,
                "build even when k < 4 or n <= k (structural testing)");
  gnb->add_flag("--audit", gen_nb.audit,
                "run the structural audit and print a report");
  gnb->add_flag("-q,--quiet", gen_nb.quiet, "suppress the summary line");

  GenRandomIntervalCmd gen_ri;
  auto* gri = gen->add_subcommand("random-interval",
                                  "seeded random interval instance");
  gri->add_option("-n", gen_ri.n, "number of intervals")->required();
  gri->add_option("--seed", gen_ri.seed, "rng seed");
  gri->add_option("-o,--output", gen_ri.output, "output instance (.ivl)");

  ExportDotCmd export_dot;
  auto* dot = app.add_subcommand(
      "export-dot", "DOT rendering of the k-token sliding graph");
  dot->add_option("-i,--input", export_dot.input, "graph (.edg) or intervals (.ivl)")
      ->required();
  dot->add_option("-k", export_dot.k, "number of tokens")->required();
  dot->add_option("-o,--output", export_dot.output, "output file (stdout when omitted)");
  dot->add_flag("--canonicalize", export_dot.canonicalize,
                "canonicalize .ivl endpoints");
  dot->add_option("--threads", export_dot.threads, "worker threads");
  dot->add_option("--node-cap", export_dot.node_cap, "state-space cap");

  CrosscheckCmd crosscheck;
  auto* cc = app.add_subcommand(
      "crosscheck", "random interval instances: polynomial deciders vs the "
                    "exhaustive oracle; prints the first counterexample");
  cc->add_option("--trials", crosscheck.trials, "number of random instances");
  cc->add_option("--seed", crosscheck.seed, "rng seed");
  cc->add_option("--n-min", crosscheck.n_min, "smallest instance size");
  cc->add_option("--n-max", crosscheck.n_max, "largest instance size");
  cc->add_option("--k-max", crosscheck.k_max, "largest token count");
  cc->add_option("--mode", crosscheck.mode, "connectivity | reachable | both")
      ->check(CLI::IsMember({"connectivity", "reachable", "both"}));
  cc->add_flag("-q,--quiet", crosscheck.quiet, "exit code only");
  cc->add_option("--threads", crosscheck.threads, "worker threads");
  cc->add_option("--node-cap", crosscheck.node_cap, "state-space cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(conn)) return connectivity.run();
    if (app.got_subcommand(reach)) return reachable.run();
    if (app.got_subcommand(orc)) {
      if (orc->got_subcommand(orc_conn)) return oracle.run_connectivity();
      if (orc->got_subcommand(orc_reach)) return oracle.run_reachable();
      return oracle.run_frozen();
    }
    if (app.got_subcommand(gen)) {
      if (gen->got_subcommand(gsp)) return gen_split.run();
      if (gen->got_subcommand(gnb)) return gen_nb.run();
      return gen_ri.run();
    }
    if (app.got_subcommand(dot)) return export_dot.run();
    if (app.got_subcommand(cc)) return crosscheck.run();
  } catch (const tsr::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const tsr::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
