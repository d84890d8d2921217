#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stabminor/action.hpp"
#include "stabminor/errors.hpp"
#include "stabminor/graph.hpp"
#include "stabminor/orbits.hpp"
#include "stabminor/reference_tables.hpp"
#include "stabminor/statecheck.hpp"

namespace {

using namespace stabminor;

// Exit codes: 0 ok, 2 usage/parse error, 3 domain error, 4 verification
// failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

void write_dot_files(const Partition& part, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& o : part.orbits) {
    std::ofstream out(dir + "/orbit_" + std::to_string(o.orbit_id) + ".dot");
    out << to_dot(o.representative);
  }
}

int cmd_orbits(int n, const std::string& format, int threads,
               const std::string& dot_dir) {
  Partition part = partition(n, threads);
  if (format == "json") {
    std::cout << census_json(part);
  } else {
    std::cout << census_text(part);
  }
  if (!dot_dir.empty()) write_dot_files(part, dot_dir);
  return kExitOk;
}

void print_classification(const Partition& part, const Classification& cls) {
  const OrbitReport& rep = part.orbits[cls.orbit_id - 1];
  auto labels = table_labels(part);
  std::cout << "orbit_id: " << cls.orbit_id;
  if (labels.count(cls.orbit_id)) {
    std::cout << " (" << labels.at(cls.orbit_id) << ")";
  }
  std::cout << "\n";
  std::cout << "orbit_size: " << rep.size << "\n";
  std::cout << "canonical_point_graded_lex: "
            << format_point(cls.canonical_point, IndexOrder::graded_lex)
            << "\n";
  std::cout << "canonical_point_bitmask: "
            << format_point(cls.canonical_point, IndexOrder::bitmask) << "\n";
  std::string edges = format_edges(rep.representative);
  std::cout << "representative_graph: " << (edges.empty() ? "(empty)" : edges)
            << "\n";
  std::cout << "witness: " << format_group_element(cls.witness) << "\n";
}

int cmd_classify(int n, const std::string& edges, const std::string& point,
                 const std::string& generators, int threads,
                 const std::string& dot_dir) {
  int given = !edges.empty() + !point.empty() + !generators.empty();
  if (given != 1) {
    std::cerr << "classify: give exactly one of --edges/--point/--generators"
              << std::endl;
    return kExitUsage;
  }
  Partition part = partition(n, threads);
  MinorPoint p;
  Graph g;
  bool have_graph = false;
  if (!point.empty()) {
    p = parse_point(point, n, IndexOrder::graded_lex);
  } else if (!generators.empty()) {
    StabilizerGroup s = parse_group(generators);
    if (s.n != n) {
      throw std::invalid_argument("classify: generator length != n");
    }
    p = minor_point(lagrangian_from_group(s));
  } else {
    g = parse_graph(edges == "-" ? "" : edges, n);
    have_graph = true;
    p = graph_to_point(g);
  }
  Classification cls = classify(part, p);
  print_classification(part, cls);
  if (!dot_dir.empty() && have_graph) {
    std::filesystem::create_directories(dot_dir);
    std::ofstream out(dot_dir + "/input.dot");
    out << to_dot(g);
  }
  return kExitOk;
}

int cmd_map(int n, const std::string& edges, const std::string& convention,
            const std::string& dot_dir) {
  Graph g = parse_graph(edges == "-" ? "" : edges, n);
  GraphConvention conv = convention == "minor-table"
                             ? GraphConvention::minor_table
                             : GraphConvention::standard;
  StabilizerGroup s = graph_generators(g, conv);
  Lagrangian l = lagrangian_from_group(s);
  MinorPoint p = graph_to_point(g);

  std::cout << "theta:\n" << g.theta.to_string() << "\n";
  std::cout << "generators (" << convention << "): " << format_group(s)
            << "\n";
  std::cout << "lagrangian_basis:\n" << l.basis.to_string() << "\n";
  std::cout << "point_graded_lex: " << format_point(p, IndexOrder::graded_lex)
            << "\n";
  std::cout << "point_bitmask: " << format_point(p, IndexOrder::bitmask)
            << "\n";
  std::cout << "lagrangian_point_graded_lex: "
            << format_point(minor_point(l), IndexOrder::graded_lex) << "\n";
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    std::ofstream out(dot_dir + "/graph.dot");
    out << to_dot(g);
  }
  return kExitOk;
}

int cmd_verify(int n) {
  VerifyOutcome outcome = verify_tables(n);
  std::cout << outcome.report;
  return outcome.pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer groups, graph states and the binary principal "
               "minor variety: orbit census and classification"};
  app.require_subcommand(1);

  int n = 4;
  int threads = 1;
  std::string format = "table";
  std::string dot_dir;
  std::string edges, point, generators;
  std::string convention = "standard";
  bool paper_tables = false;

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit census of the variety");
  orbits_cmd->add_option("--n", n, "number of qubits/vertices (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  orbits_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  orbits_cmd->add_option("--threads", threads, "worker bound (output-invariant)")
      ->check(CLI::Range(1, 256));
  orbits_cmd->add_option("--dot", dot_dir, "write representative graphs as DOT files");

  auto* classify_cmd =
      app.add_subcommand("classify", "orbit of a graph, point or stabilizer group");
  classify_cmd->add_option("--n", n, "number of qubits/vertices (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  classify_cmd->add_option("--edges", edges, "edge list, e.g. \"1-2,2-3\" (\"-\" = empty)");
  classify_cmd->add_option("--point", point, "graded-lex point string [1:0:...]");
  classify_cmd->add_option("--generators", generators, "comma-separated Pauli strings");
  classify_cmd->add_option("--threads", threads, "worker bound (output-invariant)")
      ->check(CLI::Range(1, 256));
  classify_cmd->add_option("--dot", dot_dir, "write the input graph as DOT");

  auto* map_cmd = app.add_subcommand(
      "map", "graph -> generators -> Lagrangian -> point, step by step");
  map_cmd->add_option("--n", n, "number of vertices (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  map_cmd->add_option("--edges", edges, "edge list (\"-\" = empty graph)")
      ->required();
  map_cmd->add_option("--convention", convention, "standard or minor-table")
      ->check(CLI::IsMember({"standard", "minor-table"}));
  map_cmd->add_option("--dot", dot_dir, "write the graph as DOT");

  auto* verify_cmd =
      app.add_subcommand("verify", "recompute the bundled n=4/n=5 tables");
  verify_cmd->add_option("--n", n, "4 or 5")->required();
  verify_cmd->add_flag("--paper-tables", paper_tables,
                       "verify against the published tables (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (orbits_cmd->parsed()) {
      return cmd_orbits(n, format, threads, dot_dir);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(n, edges, point, generators, threads, dot_dir);
    }
    if (map_cmd->parsed()) {
      return cmd_map(n, edges, convention, dot_dir);
    }
    if (verify_cmd->parsed()) {
      if (n != 4 && n != 5) {
        std::cerr << "verify: tables exist for --n 4 and --n 5" << std::endl;
        return kExitUsage;
      }
      return cmd_verify(n);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kExitDomain;
  }
  return kExitUsage;
}
