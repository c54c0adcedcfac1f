#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "surfcut/gmap.hpp"

namespace surfcut {

using Weight = std::int64_t;
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

/// Dart 2e sits at edges[e].u, dart 2e+1 at edges[e].v.
inline int dart_edge(int dart) { return dart >> 1; }
inline int dart_end(int dart) { return dart & 1; }
inline int opposite_dart(int dart) { return dart ^ 1; }

struct Edge {
  int u = 0;
  int v = 0;
  Weight weight = 0;
  /// -1 marks an edge whose two ends disagree on the local orientation.
  int sign = 1;
  std::string name;
};

/// Weighted graph with a signed rotation system (cellular embedding),
/// terminals and terminal pairs.
struct EmbeddedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  /// rotation[v]: darts around v in cyclic order.
  std::vector<std::vector<int>> rotation;
  std::vector<int> terminals;
  std::vector<std::pair<int, int>> pairs;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int dart_vertex(int dart) const {
    const Edge& e = edges[dart_edge(dart)];
    return dart_end(dart) == 0 ? e.u : e.v;
  }
  bool is_terminal(int vertex) const;
};

/// Throws StructureError unless every invariant of EmbeddedGraph holds:
/// each dart once in the rotation of its own vertex, weights >= 0, signs
/// +-1, connected, pairs of distinct terminals.
void validate(const EmbeddedGraph& graph);

/// Flag layout: flag 2*dart + s; s = 1 is the side facing the next dart in
/// the rotation, s = 0 the side facing the previous one.
inline int dart_flag(int dart, int side) { return 2 * dart + side; }
inline int flag_dart(int flag) { return flag >> 1; }
inline int flag_edge(int flag) { return flag >> 2; }

GMap to_gmap(const EmbeddedGraph& graph);

struct FaceStructure {
  /// Facial walks as dart sequences; each dart is listed on the walk of the
  /// face it leaves from on its traversed side.
  std::vector<std::vector<int>> faces;
  /// face id of each flag of to_gmap(graph)
  std::vector<int> flag_face;
  int vertex_count = 0;
  int edge_count = 0;
  int genus = 0;  // Euler genus
  bool orientable = true;

  int face_count() const { return static_cast<int>(faces.size()); }
};

FaceStructure trace_faces(const EmbeddedGraph& graph);

/// Dual graph: vertex i is face i of `faces`, edge e* has the weight and the
/// index of e.
EmbeddedGraph dual_graph(const EmbeddedGraph& graph, const FaceStructure& faces);

/// Reads a signed rotation system back out of a generalized map.
/// flag_edge_id maps live flags to dense edge ids (edge orbits), flag_end to
/// 0/1 for the two ends of that edge. Vertices are numbered by vertex orbit.
EmbeddedGraph rotation_system(const GMap& map, const std::vector<int>& flag_edge_id,
                              const std::vector<int>& flag_end, int edge_count);

/// Convenience for tests and generators: planar map whose rotation comes from
/// sorting neighbours by angle around integer coordinates.
EmbeddedGraph planar_from_coordinates(const std::vector<std::pair<double, double>>& points,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<Weight>& weights);

}  // namespace surfcut
