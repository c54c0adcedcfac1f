#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "surfcut/error.hpp"
#include "surfcut/generators.hpp"
#include "surfcut/io.hpp"
#include "surfcut/oracle.hpp"
#include "surfcut/solver.hpp"

using namespace surfcut;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int oracle_command(const EmbeddedGraph& g) {
  validate(g);
  nlohmann::ordered_json doc;
  const auto best = brute_force_multicut(g);
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (int e : best.edges) names.push_back(g.edges[e].name);
  doc["weight"] = best.weight;
  doc["edges"] = names;
  if (g.pairs.size() == 1) doc["max_flow"] = max_flow_min_cut(g, g.pairs[0].first, g.pairs[0].second);
  doc["dual_length"] = dual_of_multicut(g, trace_faces(g), best.edges).length;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum multicut on graphs embedded on surfaces"};
  app.require_subcommand(1);

  std::string file;
  SolverConfig config;
  std::string dp = "pathdec";
  std::string format = "json";
  bool with_time = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("file", file, "Instance file, - for stdin")->required();
  solve->add_option("--c-tree", config.c_tree, "Tree-size multiplier")->check(CLI::PositiveNumber);
  solve->add_option("--c-cross", config.c_cross, "Crossings-per-side multiplier")->check(CLI::PositiveNumber);
  solve->add_option("--c-vert", config.c_vert, "Dual-vertex multiplier")->check(CLI::PositiveNumber);
  solve->add_option("--c-points", config.c_points, "Boundary-point multiplier")->check(CLI::PositiveNumber);
  solve->add_option("--max-partitions", config.max_partitions, "Stop with exit code 3 after this many partitions")
      ->check(CLI::PositiveNumber);
  solve->add_option("--dp", dp, "Placement search")->check(CLI::IsMember({"naive", "pathdec"}));
  solve->add_flag("--oracle", config.oracle, "Compare with the brute-force oracle");
  solve->add_flag("--escalate", config.escalate, "Rerun with doubled multipliers");
  solve->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  solve->add_flag("--time", with_time, "Report wall time");

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum of an instance");
  oracle->add_option("file", file, "Instance file, - for stdin")->required();

  std::string kind = "planar";
  std::uint64_t seed = 1;
  InstanceParams params;
  auto* gen = app.add_subcommand("gen", "Print a random instance");
  gen->add_option("--kind", kind, "Surface")->check(CLI::IsMember({"planar", "torus"}));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--edges", params.max_edges, "Maximum number of edges");
  gen->add_option("--terminals", params.terminals, "Number of terminals");
  gen->add_option("--pairs", params.max_pairs, "Maximum number of pairs");
  gen->add_option("--min-weight", params.min_weight, "Smallest edge weight");
  gen->add_option("--max-weight", params.max_weight, "Largest edge weight");
  gen->add_flag("--all-pairs", params.all_pairs, "Pair every two terminals");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::mt19937_64 rng(seed);
      const EmbeddedGraph g =
          kind == "torus" ? random_torus_instance(rng, params) : random_planar_instance(rng, params);
      std::cout << write_instance(g);
      return 0;
    }
    const EmbeddedGraph g = parse_instance(slurp(file));
    if (oracle->parsed()) return oracle_command(g);
    config.dp = dp == "naive" ? DpMode::kNaive : DpMode::kPathDecomposition;
    const SolveReport report = solve_multicut(g, config);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << render_result(g, report, format == "dot" ? OutputFormat::kDot : OutputFormat::kJson,
                               with_time);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StructureError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    std::cerr << "internal error (bug): " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
