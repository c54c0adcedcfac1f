#pragma once

#include <vector>

#include "surfcut/embed.hpp"
#include "surfcut/gmap.hpp"

namespace surfcut {

/// Barycentric subdivision of G. Each flag of to_gmap(G) is a triangle with
/// corners (vertex v, edge midpoint m, face centre c); its three sides are
///   0: [m, c]  half of the dual edge, shared with alpha0(flag)
///   1: [v, c]  spoke, shared with alpha1(flag)
///   2: [v, m]  half of the G edge, shared with alpha2(flag)
/// Every curve we draw runs along sides 0 and 1, so it is automatically in
/// general position with G and crosses each G edge only at its midpoint.
struct Barycentric {
  enum Corner : char { kVertex = 0, kMidpoint = 1, kCentre = 2 };

  GMap map;                 // six flags per triangle
  std::vector<int> gflag;   // triangle (G flag) of each subdivision flag
  std::vector<char> corner; // corner kind of each subdivision flag
  std::vector<char> side;   // side type of each subdivision flag
  GMap gmap;                // to_gmap(G)
  std::vector<int> face_of; // face of each G flag
  std::vector<int> vertex_of; // vertex of each G flag
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;

  /// Dense id of the point a subdivision flag sits on:
  /// G vertices, then midpoints, then face centres.
  int node(int bflag) const;
  /// Dense id of the side a subdivision flag lies on (3 * min G flag + type).
  int segment(int bflag) const;
  int node_count() const { return vertex_count + edge_count + face_count; }
  int segment_id(int gflag_id, int type) const;
};

Barycentric subdivide(const EmbeddedGraph& graph, const FaceStructure& faces);

/// End point of a curve: a vertex of G entered through one of its corners
/// (the corner between G flags `corner` and alpha1(corner)), or the centre of a
/// face of G. Points on G edges are not used as anchors: curves only touch G
/// at crossings.
struct Anchor {
  enum Kind { kVertex, kFace };
  Kind kind = kFace;
  int id = 0;
  int corner = -1;
};

/// Crossing of G edge `edge`; `flag` is a G flag of that edge on the side the
/// curve comes from. `index` orders crossings along the edge.
struct Crossing {
  int edge = 0;
  int flag = 0;
  int index = 0;
};

struct Curve {
  Anchor start;
  Anchor end;
  std::vector<Crossing> events;
};

/// Cross-metric length: sum of crossed edge weights, with multiplicity.
/// Throws CurveError if consecutive events do not share a face.
Weight curve_length(const Curve& curve, const EmbeddedGraph& graph, const FaceStructure& faces);

/// Subdivision sides used by a curve, in order.
std::vector<int> curve_segments(const Curve& curve, const Barycentric& sub);

/// Arrangement of G and a set of curves K.
struct Overlay {
  enum NodeKind { kGraphVertex, kCurveVertex, kCrossing };

  Barycentric sub;
  GMap map;                      // subdivision restricted to G and K, degree-2 points dissolved
  Orbits faces;                  // overlay faces
  std::vector<int> flag_gedge;   // G edge carried by a flag's piece, or -1
  std::vector<int> flag_curve;   // curve carried by a flag's piece, or -1
  std::vector<int> segment_curve;// curve using each subdivision side, or -1
  int vertex_count = 0;
  int edge_count = 0;
  int genus = 0;

  int face_count() const { return faces.count; }
  NodeKind node_kind(int flag) const;
};

/// Builds the arrangement. Curves may share end points but must otherwise be
/// disjoint, and each must be simple; otherwise InputError.
Overlay build_overlay(const EmbeddedGraph& graph, const FaceStructure& faces,
                      const std::vector<Curve>& curves);

}  // namespace surfcut
