#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "surfcut/crossmetric.hpp"
#include "surfcut/embed.hpp"

namespace surfcut {

struct MulticutResult {
  struct Certificate {
    std::int64_t topology = -1;          // index in the enumeration stream
    std::vector<int> crossings;          // per G edge, crossings by the drawn dual
  };
  std::vector<int> edges;  // sorted, distinct
  Weight weight = 0;
  std::optional<Certificate> certificate;
};

/// Throws InputError on an unknown edge id.
bool is_multicut(const EmbeddedGraph& graph, const std::vector<std::pair<int, int>>& pairs,
                 const std::vector<int>& edges);

/// Exact minimum multicut of graph.pairs by subset search; ties go to the
/// lexicographically smallest edge list. Throws ResourceError above max_edges.
MulticutResult brute_force_multicut(const EmbeddedGraph& graph, int max_edges = 22);

/// Minimum s-t cut value.
Weight max_flow_min_cut(const EmbeddedGraph& graph, int s, int t);

/// The dual edges e* of a multicut, drawn as single-crossing curves between
/// the faces on either side of e.
struct MulticutDual {
  std::vector<int> edges;            // e* has the id of e
  std::vector<Curve> curves;
  Weight length = 0;                 // cross-metric length of the curves
  std::vector<int> vertex_region;    // region of the surface minus the dual, per G vertex
};

/// Throws InputError if `edges` is not a multicut of graph.pairs.
MulticutDual dual_of_multicut(const EmbeddedGraph& graph, const FaceStructure& faces,
                              const std::vector<int>& edges);

}  // namespace surfcut
