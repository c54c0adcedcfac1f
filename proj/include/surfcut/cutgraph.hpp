#pragma once

#include <array>
#include <utility>
#include <vector>

#include "surfcut/crossmetric.hpp"
#include "surfcut/embed.hpp"

namespace surfcut {

/// Dual graph of G extended by zero-weight spokes from every terminal to the
/// centres of its incident faces, one spoke per corner. Paths in this graph
/// are exactly the cross-metric curves between anchors that avoid vertices
/// of G. Nodes: faces 0..F-1, then one node per terminal (in terminal order).
/// Edges: e* for each G edge e (id e), then spokes (id E + corner index).
struct ExtendedDual {
  struct Arc {
    int edge;
    int end;  // end of `edge` at the node owning this arc
  };
  struct XEdge {
    std::array<int, 2> node;
    Weight weight = 0;
    int gedge = -1;   // for dual edges
    int corner = -1;  // for spokes: G flag of the corner
  };

  int face_count = 0;
  std::vector<int> terminal_node;  // per G vertex, -1 if not a terminal
  std::vector<int> node_vertex;    // per node, G vertex or -1 for faces
  std::vector<XEdge> edges;
  std::vector<std::vector<Arc>> adjacency;

  int node_count() const { return static_cast<int>(adjacency.size()); }
  bool is_terminal_node(int n) const { return n >= face_count; }
};

ExtendedDual extended_dual(const EmbeddedGraph& graph, const FaceStructure& faces);

struct ShortestPaths {
  std::vector<Weight> dist;     // per extended-dual node
  std::vector<int> pred_edge;   // arriving edge, -1 at sources
  std::vector<int> pred_end;    // end of pred_edge we arrived from
  Weight face_distance(int face) const { return dist[face]; }
};

/// Multi-source Dijkstra on the extended dual. Terminal nodes other than the
/// sources are sinks: curves never pass through a vertex of G.
ShortestPaths extended_dijkstra(const ExtendedDual& x, const std::vector<int>& sources);

/// Distances from an anchor to every face and every terminal.
struct AnchorDistances {
  std::vector<Weight> face;
  std::vector<Weight> vertex;  // kInfinity for non-terminals other than the source
  ShortestPaths paths;
  ExtendedDual dual;
  Anchor source;

  Curve curve_to_face(int face) const;
  Curve curve_to_vertex(int vertex) const;
};

AnchorDistances cross_metric_shortest_paths(const EmbeddedGraph& graph, const FaceStructure& faces,
                                            const Anchor& source);

struct CutGraph {
  struct Vertex {
    bool terminal = false;
    int id = 0;  // G vertex if terminal, G face otherwise
  };
  struct KEdge {
    int from = 0;
    int to = 0;
    Curve curve;
  };
  std::vector<Vertex> vertices;
  std::vector<KEdge> edges;

  Weight length(const EmbeddedGraph& graph, const FaceStructure& faces) const;
};

/// Planar: Steiner tree grown from the lowest terminal by repeatedly joining
/// the nearest unconnected terminal. Otherwise that tree is extended to a
/// spanning tree of the extended dual and completed by g edges left over by a
/// maximum cotree, then non-terminal leaves are pruned.
CutGraph build_cut_graph(const EmbeddedGraph& graph, const FaceStructure& faces);

/// Disk obtained by cutting along K. Boundary slots are copies of K edges in
/// cyclic order; corner_vertex[i] is the K vertex between slot i and i+1.
struct DiskSchema {
  struct Slot {
    int kedge = 0;
    int copy = 0;
    bool forward = true;  // the boundary walk runs along the K edge's own direction
  };
  struct Move {
    int a = 0;
    int b = 0;
    int gedge = 0;
    Weight weight = 0;
  };
  struct Glue {
    int from = 0;  // face on this copy
    int to = 0;    // face across the K edge
    int flag = 0;  // overlay flag of the crossed K piece on this copy's side
  };

  std::vector<Slot> slots;
  std::vector<int> corner_vertex;
  std::vector<std::array<int, 2>> copy_slot;  // per K edge
  std::vector<int> kvertex_terminal;          // G vertex of each K vertex, -1 for Steiner points
  int face_count = 0;
  std::vector<Move> moves;  // one per G piece of the overlay
  /// glue[k][c]: ways to leave the disk through copy c of K edge k
  std::vector<std::array<std::vector<Glue>, 2>> glue;
  std::vector<int> flag_copy;  // overlay flag on a K piece -> copy (0/1), else -1

  int kedge_count() const { return static_cast<int>(copy_slot.size()); }
  int slot_count() const { return static_cast<int>(slots.size()); }
};

struct CutDisk {
  Overlay overlay;
  DiskSchema schema;
};

/// Throws TopologyError if the complement of K is not a single disk.
CutDisk cut_to_disk(const EmbeddedGraph& graph, const FaceStructure& faces, const CutGraph& cut);

/// Face adjacencies rebuilt from the schema (moves plus gluings) equal the
/// face adjacencies of the overlay, as multisets.
bool reglue_matches(const CutDisk& disk);

}  // namespace surfcut
