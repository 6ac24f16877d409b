// fitchgraph: command-line driver for Fitch graph computation, recognition,
// tree synthesis and exhaustive verification.
//
// Exit codes: 0 success/accept, 1 clean reject, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "fitch/fitch.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kInputError = 2;

/// Whole file, or stdin for "-".
std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fitch::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fitch::LabeledTree read_tree(const std::string& path) {
  const std::string text = read_input(path);
  if (fitch::detect_kind(text) != fitch::InputKind::Tree) {
    throw fitch::Error(path + ": expected a Newick tree, found an edge list");
  }
  return fitch::parse_newick(text);
}

fitch::SimpleGraph read_graph(const std::string& path) {
  const std::string text = read_input(path);
  if (fitch::detect_kind(text) != fitch::InputKind::Graph) {
    throw fitch::Error(path + ": expected an edge list, found a tree");
  }
  return fitch::parse_edgelist(text);
}

int cmd_compute(const std::string& path, bool directed) {
  const auto tree = read_tree(path);
  if (directed) {
    std::cout << fitch::serialize_arclist(fitch::directed_fitch(tree));
  } else {
    std::cout << fitch::serialize_edgelist(fitch::undirected_fitch(tree));
  }
  return kOk;
}

int cmd_recognize(const std::string& path) {
  const auto verdict = fitch::recognize(read_graph(path));
  if (const auto* w = std::get_if<fitch::ForbiddenWitness>(&verdict)) {
    std::cout << "witness: " << fitch::to_string(*w) << '\n';
    return kReject;
  }
  std::cout << "blocks: " << fitch::to_string(std::get<fitch::Partition>(verdict))
            << '\n';
  return kOk;
}

int cmd_explain(const std::string& path, bool minimal) {
  const auto result = fitch::explain(
      read_graph(path), minimal ? fitch::TreeMode::Minimal : fitch::TreeMode::Canonical);
  if (const auto* w = std::get_if<fitch::ForbiddenWitness>(&result)) {
    std::cout << "witness: " << fitch::to_string(*w) << '\n';
    return kReject;
  }
  std::cout << fitch::serialize_newick(std::get<fitch::LabeledTree>(result)) << '\n';
  return kOk;
}

int cmd_verify(const std::string& tree_path, const std::string& graph_path,
               bool least_resolved) {
  const auto tree = read_tree(tree_path);
  const auto graph = read_graph(graph_path);
  if (!fitch::explains(tree, graph)) {
    std::cout << "explains: no\n";
    return kReject;
  }
  std::cout << "explains: yes\n";
  if (!least_resolved) return kOk;
  const bool lr = fitch::is_least_resolved(tree, graph);
  std::cout << "least-resolved: " << (lr ? "yes" : "no") << '\n';
  return lr ? kOk : kReject;
}

int cmd_enumerate(int n, bool list_graphs) {
  if (n < 2 || n > fitch::oracle::kMaxRealizableLeaves) {
    std::cerr << "n out of supported range (2.."
              << fitch::oracle::kMaxRealizableLeaves << ")\n";
    return kInputError;
  }
  const auto report = fitch::oracle::realizable_graphs(n);
  const auto verdict = fitch::oracle::verify_characterization(n);
  std::cout << fitch::oracle::to_text(report, verdict, list_graphs);
  const bool pass =
      verdict.pass() && report.realizable_graphs.size() == report.expected_count;
  return pass ? kOk : kReject;
}

int cmd_dot(const std::string& path) {
  const std::string text = read_input(path);
  if (fitch::detect_kind(text) == fitch::InputKind::Graph) {
    std::cout << fitch::to_dot(fitch::parse_edgelist(text));
  } else {
    std::cout << fitch::to_dot(fitch::parse_newick(text));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitch graphs of {0,1}-edge-labeled trees", "fitchgraph"};
  app.require_subcommand(1);

  std::string tree_path;
  std::string graph_path;
  std::string input_path;
  bool directed = false;
  bool minimal = false;
  bool least_resolved = false;
  bool report = false;
  int n = 0;

  auto* compute = app.add_subcommand("compute", "Fitch graph of a Newick tree");
  compute->add_option("tree", tree_path, "Newick file, or - for stdin")->required();
  compute->add_flag("--directed", directed, "emit the directed Fitch graph");

  auto* recognize = app.add_subcommand(
      "recognize", "partition of a complete multipartite graph, or a witness");
  recognize->add_option("graph", graph_path, "edge-list file, or -")->required();

  auto* explain = app.add_subcommand("explain", "tree explaining a graph");
  explain->add_option("graph", graph_path, "edge-list file, or -")->required();
  explain->add_flag("--minimal", minimal, "emit a tree with fewest vertices");

  auto* verify = app.add_subcommand("verify", "check that a tree explains a graph");
  verify->add_option("tree", tree_path, "Newick file, or -")->required();
  verify->add_option("graph", graph_path, "edge-list file, or -")->required();
  verify->add_flag("--least-resolved", least_resolved,
                   "also check that no inner edge can be contracted");

  auto* enumerate = app.add_subcommand(
      "enumerate", "exhaustive realizability check on n leaves");
  enumerate->add_option("n", n, "leaf count")->required();
  enumerate->add_flag("--report", report, "list every realizable graph");

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a tree or graph");
  dot->add_option("input", input_path, "Newick or edge-list file, or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*compute) return cmd_compute(tree_path, directed);
    if (*recognize) return cmd_recognize(graph_path);
    if (*explain) return cmd_explain(graph_path, minimal);
    if (*verify) return cmd_verify(tree_path, graph_path, least_resolved);
    if (*enumerate) return cmd_enumerate(n, report);
    if (*dot) return cmd_dot(input_path);
  } catch (const fitch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
