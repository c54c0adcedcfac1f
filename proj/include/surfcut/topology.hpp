#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "surfcut/cutgraph.hpp"

namespace surfcut {

/// Goodness bounds. `points` caps the total number of boundary points and
/// keeps the enumeration finite at desk scale.
struct Bounds {
  int tree = 0;    // total tree edges
  int cross = 0;   // points per side
  int vert = 0;    // vertices of the abstract dual graph
  int points = 0;  // boundary points over all sides

  static Bounds from_constants(int c_tree, int c_cross, int c_vert, int c_points, int genus,
                               int terminals);
};

/// Candidate dual cut open along K. Nodes 0..N-1 are the boundary points in
/// boundary order (slot by slot, m points per slot where m = count of the
/// slot's K edge); nodes N.. are internal vertices. Every interior edge is a
/// piece of the candidate dual inside the disk.
struct Topology {
  std::vector<int> count;
  int internal_count = 0;
  std::vector<std::pair<int, int>> edges;

  int point_count() const;
  int node_count() const { return point_count() + internal_count; }
};

/// Boundary points of a topology laid out on a schema.
struct BoundaryLayout {
  std::vector<int> slot_first;  // first point of each slot
  std::vector<int> point_slot;
  std::vector<int> point_rank;  // index along the slot in boundary order
  std::vector<int> partner;     // glued point on the other copy

  BoundaryLayout(const DiskSchema& schema, const std::vector<int>& count);
  int size() const { return static_cast<int>(point_slot.size()); }
};

/// Components of a topology's interior: blocks of boundary points joined
/// by a tree or an arc, with each block's internal vertices.
struct TopologyParts {
  std::vector<std::vector<int>> blocks;  // boundary points, increasing
  std::vector<int> point_block;
  std::vector<int> point_neighbour;      // node adjacent to each boundary point
  int tree_edges = 0;
};

/// Returns false if the interior is not a forest of arcs and trees with
/// leaves exactly at the boundary points.
bool split_parts(const Topology& top, TopologyParts& parts);

bool is_good(const Topology& top, const DiskSchema& schema, const Bounds& bounds);

/// True iff the glued candidate dual separates every pair.
/// Throws TopologyError if the topology does not fit the schema.
bool validate_topology(const Topology& top, const DiskSchema& schema,
                       const std::vector<std::pair<int, int>>& pairs);

/// Separation test on a non-crossing partition of the boundary points;
/// points with present[q] == 0 are ignored. Used for validity and for the
/// minimality filter.
class SeparationOracle {
 public:
  SeparationOracle(const DiskSchema& schema, std::vector<std::pair<int, int>> pairs);
  void set_counts(const std::vector<int>& count);
  const BoundaryLayout& layout() const { return layout_; }
  bool separates(const std::vector<int>& point_block, const std::vector<char>& present) const;
  /// C-face class of each terminal corner, for diagnostics and tests.
  std::vector<int> corner_classes(const std::vector<int>& point_block,
                                  const std::vector<char>& present) const;

 private:
  const DiskSchema* schema_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> count_;
  BoundaryLayout layout_;
};

/// Binary plane trees with `leaves` leaves in cyclic order, as edge lists
/// over nodes 0..leaves-1 (leaves) and leaves.. (internal). Catalan(leaves-2) of them.
std::vector<std::vector<std::pair<int, int>>> binary_shapes(int leaves);

struct EnumerationStats {
  std::int64_t partitions = 0;   // non-crossing partitions examined
  std::int64_t enumerated = 0;   // good topologies emitted or counted
  std::int64_t valid = 0;
  std::int64_t minimal = 0;
  std::int64_t partition_budget = 0;  // ResourceError once partitions exceed it; 0 = unlimited
};

/// Every good topology within the bounds, in deterministic order: total
/// points, then count vector, then partition generation order, then shapes.
void enumerate_topologies(const DiskSchema& schema, const Bounds& bounds,
                          const std::function<void(const Topology&)>& emit,
                          EnumerationStats* stats = nullptr);

/// Good topologies that are valid and minimal: removing any chain of the
/// candidate dual that crosses K breaks validity.
void enumerate_valid_topologies(const DiskSchema& schema, const Bounds& bounds,
                                const std::vector<std::pair<int, int>>& pairs,
                                const std::function<void(const Topology&)>& emit,
                                EnumerationStats* stats = nullptr);

/// Upper bound on the number of topologies enumerate_topologies can emit.
double topology_cap(const DiskSchema& schema, const Bounds& bounds);

std::string topology_dot(const Topology& top, const DiskSchema& schema);

}  // namespace surfcut
