#include "surfcut/crossmetric.hpp"

#include <algorithm>
#include <string>

#include "surfcut/error.hpp"

namespace surfcut {
namespace {

// local flag layout inside a triangle: (corner, side)
constexpr int kLocalCorner[6] = {0, 0, 1, 1, 2, 2};
constexpr int kLocalSide[6] = {1, 2, 0, 2, 0, 1};
constexpr int kBeta0[6] = {5, 3, 4, 1, 2, 0};
constexpr int kBeta1[6] = {1, 0, 3, 2, 5, 4};

int local_index(int corner, int side) {
  for (int i = 0; i < 6; ++i) {
    if (kLocalCorner[i] == corner && kLocalSide[i] == side) return i;
  }
  return -1;
}

}  // namespace

int Barycentric::node(int bflag) const {
  const int g = gflag[bflag];
  switch (corner[bflag]) {
    case kVertex: {
      // vertex of a G flag: flag -> dart -> vertex, recovered through the
      // vertex orbit numbering stored in gmap-independent form
      return vertex_of[g];
    }
    case kMidpoint:
      return vertex_count + flag_edge(g);
    default:
      return vertex_count + edge_count + face_of[g];
  }
}

int Barycentric::segment_id(int g, int type) const {
  return 3 * std::min(g, gmap.alpha[type][g]) + type;
}

int Barycentric::segment(int bflag) const { return segment_id(gflag[bflag], side[bflag]); }

Barycentric subdivide(const EmbeddedGraph& graph, const FaceStructure& faces) {
  Barycentric b;
  b.gmap = to_gmap(graph);
  b.face_of = faces.flag_face;
  b.vertex_count = graph.vertex_count;
  b.edge_count = graph.edge_count();
  b.face_count = faces.face_count();
  b.vertex_of.resize(b.gmap.flag_count());
  for (int f = 0; f < b.gmap.flag_count(); ++f) b.vertex_of[f] = graph.dart_vertex(flag_dart(f));
  const int n = b.gmap.flag_count();
  b.map = GMap(6 * n);
  b.gflag.resize(6 * n);
  b.corner.resize(6 * n);
  b.side.resize(6 * n);
  for (int g = 0; g < n; ++g) {
    for (int i = 0; i < 6; ++i) {
      const int f = 6 * g + i;
      b.gflag[f] = g;
      b.corner[f] = static_cast<char>(kLocalCorner[i]);
      b.side[f] = static_cast<char>(kLocalSide[i]);
      b.map.alpha[0][f] = 6 * g + kBeta0[i];
      b.map.alpha[1][f] = 6 * g + kBeta1[i];
      const int neighbour = b.gmap.alpha[kLocalSide[i]][g];
      b.map.alpha[2][f] = 6 * neighbour + local_index(kLocalCorner[i], kLocalSide[i]);
    }
  }
  return b;
}

Weight curve_length(const Curve& curve, const EmbeddedGraph& graph, const FaceStructure& faces) {
  const GMap map = to_gmap(graph);
  auto start_face = [&](const Anchor& a) {
    if (a.kind == Anchor::kFace) return a.id;
    if (a.corner < 0 || a.corner >= map.flag_count() || graph.dart_vertex(flag_dart(a.corner)) != a.id) {
      throw CurveError("vertex anchor with a corner not at vertex " + std::to_string(a.id));
    }
    return faces.flag_face[a.corner];
  };
  int face = start_face(curve.start);
  Weight total = 0;
  for (std::size_t i = 0; i < curve.events.size(); ++i) {
    const Crossing& c = curve.events[i];
    if (c.edge < 0 || c.edge >= graph.edge_count() || flag_edge(c.flag) != c.edge) {
      throw CurveError("event " + std::to_string(i) + " names a flag of another edge");
    }
    if (faces.flag_face[c.flag] != face) {
      throw CurveError("event " + std::to_string(i) + " crosses an edge not on the current face");
    }
    total += graph.edges[c.edge].weight;
    face = faces.flag_face[map.alpha[2][c.flag]];
  }
  if (start_face(curve.end) != face) throw CurveError("curve does not end in the face of its end anchor");
  return total;
}

std::vector<int> curve_segments(const Curve& curve, const Barycentric& sub) {
  std::vector<int> out;
  if (curve.start.kind == Anchor::kVertex) out.push_back(sub.segment_id(curve.start.corner, 1));
  for (const Crossing& c : curve.events) {
    out.push_back(sub.segment_id(c.flag, 0));
    out.push_back(sub.segment_id(sub.gmap.alpha[2][c.flag], 0));
  }
  if (curve.end.kind == Anchor::kVertex) out.push_back(sub.segment_id(curve.end.corner, 1));
  return out;
}

Overlay::NodeKind Overlay::node_kind(int flag) const {
  switch (sub.corner[flag]) {
    case Barycentric::kVertex:
      return kGraphVertex;
    case Barycentric::kMidpoint:
      return kCrossing;
    default:
      return kCurveVertex;
  }
}

Overlay build_overlay(const EmbeddedGraph& graph, const FaceStructure& faces,
                      const std::vector<Curve>& curves) {
  Overlay out;
  out.sub = subdivide(graph, faces);
  const Barycentric& sub = out.sub;
  out.segment_curve.assign(3 * sub.gmap.flag_count(), -1);

  // interior points of curves (midpoints and face centres) must be private
  std::vector<int> point_owner(sub.node_count(), -1);
  auto claim_point = [&](int node, int curve_id) {
    if (point_owner[node] >= 0) {
      throw InputError("curves " + std::to_string(point_owner[node]) + " and " +
                       std::to_string(curve_id) + " meet away from their end points");
    }
    point_owner[node] = curve_id;
  };
  std::vector<int> anchor_nodes;
  for (const Curve& c : curves) {
    for (const Anchor* a : {&c.start, &c.end}) {
      anchor_nodes.push_back(a->kind == Anchor::kFace ? sub.vertex_count + sub.edge_count + a->id
                                                      : a->id);
    }
  }
  for (int ci = 0; ci < static_cast<int>(curves.size()); ++ci) {
    const Curve& c = curves[ci];
    curve_length(c, graph, faces);
    for (int s : curve_segments(c, sub)) {
      if (out.segment_curve[s] >= 0) {
        throw InputError("curves " + std::to_string(out.segment_curve[s]) + " and " +
                         std::to_string(ci) + " overlap");
      }
      out.segment_curve[s] = ci;
    }
    // face centres visited strictly between the anchors, and midpoints
    int face = c.start.kind == Anchor::kFace ? c.start.id : faces.flag_face[c.start.corner];
    for (std::size_t i = 0; i < c.events.size(); ++i) {
      if (c.events[i].index != 0) {
        throw InputError("crossing indices other than 0 are not supported by the arrangement");
      }
      if (i > 0 || c.start.kind == Anchor::kVertex) {
        claim_point(sub.vertex_count + sub.edge_count + face, ci);
      }
      claim_point(sub.vertex_count + c.events[i].edge, ci);
      face = faces.flag_face[sub.gmap.alpha[2][c.events[i].flag]];
    }
    if (c.end.kind == Anchor::kVertex && !c.events.empty()) {
      claim_point(sub.vertex_count + sub.edge_count + face, ci);
    }
    if (c.end.kind == Anchor::kVertex && c.events.empty() && c.start.kind == Anchor::kVertex) {
      claim_point(sub.vertex_count + sub.edge_count + face, ci);
    }
  }
  for (int node : anchor_nodes) {
    if (node >= sub.vertex_count && point_owner[node] >= 0) {
      throw InputError("a curve passes through the end point of another curve");
    }
  }

  std::vector<char> keep(sub.map.flag_count(), 0);
  for (int f = 0; f < sub.map.flag_count(); ++f) {
    keep[f] = sub.side[f] == 2 || out.segment_curve[sub.segment(f)] >= 0;
  }
  out.map = remove_edges(sub.map, keep);
  dissolve_degree_two(out.map, [&](int f) { return sub.corner[f] != Barycentric::kVertex; });
  check_gmap(out.map);
  out.faces = face_orbits(out.map);
  out.flag_gedge.assign(out.map.flag_count(), -1);
  out.flag_curve.assign(out.map.flag_count(), -1);
  for (int f = 0; f < out.map.flag_count(); ++f) {
    if (!out.map.alive(f)) continue;
    if (sub.side[f] == 2) {
      out.flag_gedge[f] = flag_edge(sub.gflag[f]);
    } else {
      out.flag_curve[f] = out.segment_curve[sub.segment(f)];
    }
  }
  out.vertex_count = vertex_orbits(out.map).count;
  out.edge_count = edge_orbits(out.map).count;
  out.genus = 2 - out.vertex_count + out.edge_count - out.faces.count;
  return out;
}

}  // namespace surfcut
