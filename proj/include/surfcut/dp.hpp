#pragma once

#include <vector>

#include "surfcut/homotopy.hpp"

namespace surfcut {

/// The candidate dual C of a topology: one vertex per internal tree vertex,
/// then one synthetic base vertex per closed chain. Internal tree edges become
/// edges with an empty sequence.
struct AbstractDualGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int chain = -1;  // index into crossing_sequences, -1 for internal tree edges
    CrossingSequence sequence;
    bool loop() const { return u == v; }
  };
  struct End {
    int edge = 0;
    int side = 0;  // 0 at edge.u, 1 at edge.v
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<End>> rotation;  // cyclic order of edge ends per vertex
  std::vector<int> vertex_node;            // topology node, -1 for synthetic bases
};

AbstractDualGraph abstract_graph(const Topology& top, const DiskSchema& schema);

struct PathDecomposition {
  std::vector<int> order;  // vertex introduction order
  std::vector<std::vector<int>> bags;
  int width = 0;
  bool exact = false;  // width is optimal
};

/// Exact vertex-ordering search up to 32 vertices, greedy beyond.
PathDecomposition path_decomposition(const AbstractDualGraph& c);

bool is_path_decomposition(const AbstractDualGraph& c, const PathDecomposition& pd);

struct TopologySolution {
  Weight weight = kInfinity;            // kInfinity when pruned
  std::vector<int> placement;           // disk face of each vertex of C
  std::vector<HomotopicPath> witnesses; // one per edge of C
  std::vector<int> gedges;              // crossed G edges, sorted, with repeats
  std::int64_t states = 0;              // DP table entries touched
};

struct DpOptions {
  Weight cutoff = kInfinity;  // skip topologies whose lower bound exceeds this
  std::int64_t max_table = std::int64_t{1} << 25;
};

/// Bag-by-bag minimisation over face placements of C's vertices.
/// Throws ResourceError when a table would exceed max_table entries.
TopologySolution solve_topology(const AbstractDualGraph& c, const PathDecomposition& pd,
                                const CutDisk& disk, DiskMetric& metric,
                                const DpOptions& options = {});

/// Every placement tried in turn. Throws ResourceError beyond 4 vertices or
/// 200 faces.
TopologySolution naive_solve_topology(const AbstractDualGraph& c, const CutDisk& disk,
                                      DiskMetric& metric);

}  // namespace surfcut
