#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfcut/embed.hpp"
#include "surfcut/oracle.hpp"

namespace surfcut {

enum class DpMode { kPathDecomposition, kNaive };

struct SolverConfig {
  int c_tree = 2;
  int c_cross = 12;
  int c_vert = 2;
  int c_points = 2;
  DpMode dp = DpMode::kPathDecomposition;
  bool oracle = false;    // compare with brute force (and max flow when |R| = 1)
  bool escalate = false;  // rerun with doubled multipliers
  int jobs = 1;
  int chunk = 64;         // topologies evaluated between cutoff updates
  std::int64_t max_partitions = 20'000'000;
};

struct SolveStats {
  int genus = 0;
  int terminals = 0;
  int cut_edges = 0;
  int disk_faces = 0;
  int bound_tree = 0;
  int bound_cross = 0;
  int bound_vert = 0;
  int bound_points = 0;
  double topology_cap = 0;
  std::int64_t partitions = 0;   // non-crossing partitions examined
  std::int64_t valid = 0;        // partitions separating every pair
  std::int64_t minimal = 0;      // valid partitions with no removable chain
  std::int64_t enumerated = 0;   // topologies handed to the dynamic program
  std::int64_t solved = 0;
  std::int64_t pruned = 0;
  std::int64_t best_topology = -1;
  int max_width = 0;
  std::int64_t dp_states = 0;
  double seconds = 0;
};

struct SolveReport {
  MulticutResult result;
  SolveStats stats;
  std::optional<Weight> oracle_weight;
  std::vector<std::string> warnings;
};

/// Exact minimum multicut within the configured bounds. Throws InputError or
/// StructureError on bad instances, ResourceError when a guard trips, and
/// InternalError if the extracted edge set is not a multicut.
SolveReport solve_multicut(const EmbeddedGraph& graph, const SolverConfig& config = {});

}  // namespace surfcut
