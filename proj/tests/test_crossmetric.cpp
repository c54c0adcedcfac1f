#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "surfcut/crossmetric.hpp"
#include "surfcut/error.hpp"

using namespace surfcut;

namespace {

// random walk through faces starting at a face, crossing `steps` edges
Curve random_face_walk(const EmbeddedGraph& g, const FaceStructure& f, std::mt19937_64& rng,
                       int steps) {
  const GMap m = to_gmap(g);
  Curve c;
  int face = std::uniform_int_distribution<int>(0, f.face_count() - 1)(rng);
  c.start = {Anchor::kFace, face, -1};
  for (int i = 0; i < steps; ++i) {
    std::vector<int> options;
    for (int x = 0; x < m.flag_count(); ++x) {
      if (f.flag_face[x] == face) options.push_back(x);
    }
    const int x = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    c.events.push_back({flag_edge(x), x, 0});
    face = f.flag_face[m.alpha[2][x]];
  }
  c.end = {Anchor::kFace, face, -1};
  return c;
}

}  // namespace

TEST(CurveLength, EmptyIsZero) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  Curve c;
  c.start = c.end = {Anchor::kFace, 2, -1};
  EXPECT_EQ(curve_length(c, g, f), 0);
}

TEST(CurveLength, MultiplicityCounts) {
  EmbeddedGraph g = fixtures::cube();
  g.edges[1].weight = 5;
  const FaceStructure f = trace_faces(g);
  const GMap m = to_gmap(g);
  const int x = 4 * 1;
  Curve c;
  c.start = {Anchor::kFace, f.flag_face[x], -1};
  c.events = {{1, x, 0}, {1, m.alpha[2][x], 0}};
  c.end = c.start;
  EXPECT_EQ(curve_length(c, g, f), 10);
}

TEST(CurveLength, RandomWalksMatchResummation) {
  std::mt19937_64 rng(11);
  EmbeddedGraph g = fixtures::cube();
  for (int e = 0; e < g.edge_count(); ++e) g.edges[e].weight = e + 1;
  const FaceStructure f = trace_faces(g);
  for (int i = 0; i < 50; ++i) {
    const Curve c = random_face_walk(g, f, rng, 6);
    Weight expect = 0;
    for (const Crossing& x : c.events) expect += g.edges[x.edge].weight;
    EXPECT_EQ(curve_length(c, g, f), expect);
  }
}

TEST(CurveLength, RejectsInconsistentEvents) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  Curve c;
  c.start = c.end = {Anchor::kFace, 0, -1};
  int x = 0;
  while (f.flag_face[x] == 0) ++x;
  c.events = {{flag_edge(x), x, 0}};
  EXPECT_THROW(curve_length(c, g, f), CurveError);
}

TEST(Overlay, EmptyCurveSetReproducesGraph) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  const Overlay o = build_overlay(g, f, {});
  EXPECT_EQ(o.vertex_count, 8);
  EXPECT_EQ(o.edge_count, 12);
  EXPECT_EQ(o.face_count(), 6);
  EXPECT_TRUE(isomorphic(o.map, to_gmap(g)));
}

TEST(Overlay, SingleCrossingSplitsFaces) {
  const EmbeddedGraph g = fixtures::single_loop();
  const FaceStructure f = trace_faces(g);
  // curve from the inside face centre to the outside face centre
  Curve c;
  c.start = {Anchor::kFace, f.flag_face[0], -1};
  c.events = {{0, 0, 0}};
  c.end = {Anchor::kFace, f.flag_face[to_gmap(g).alpha[2][0]], -1};
  const Overlay o = build_overlay(g, f, {c});
  // nodes: G vertex, crossing, two curve ends
  EXPECT_EQ(o.vertex_count, 4);
  EXPECT_EQ(o.genus, 0);
  EXPECT_EQ(o.face_count(), 2);
  int crossings = 0;
  const Orbits vs = vertex_orbits(o.map);
  std::vector<int> size(vs.count, 0);
  for (int x = 0; x < o.map.flag_count(); ++x) {
    if (o.map.alive(x)) ++size[vs.id[x]];
  }
  for (int x = 0; x < o.map.flag_count(); ++x) {
    if (o.map.alive(x) && o.node_kind(x) == Overlay::kCrossing) {
      EXPECT_EQ(size[vs.id[x]], 8);  // degree 4
      ++crossings;
    }
  }
  EXPECT_EQ(crossings, 8);
}

TEST(Overlay, OverlappingCurvesRejected) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  Curve c;
  c.start = {Anchor::kFace, f.flag_face[0], -1};
  c.events = {{0, 0, 0}};
  c.end = {Anchor::kFace, f.flag_face[to_gmap(g).alpha[2][0]], -1};
  EXPECT_THROW(build_overlay(g, f, {c, c}), InputError);
}

TEST(Overlay, RandomWalkCurvesKeepGenus) {
  std::mt19937_64 rng(5);
  const EmbeddedGraph g = fixtures::torus_two_loops(2, 3);
  const FaceStructure f = trace_faces(g);
  // on a one-face map every single-crossing curve is a closed loop at the face centre
  Curve c;
  c.start = c.end = {Anchor::kFace, 0, -1};
  c.events = {{0, 0, 0}};
  const Overlay o = build_overlay(g, f, {c});
  EXPECT_EQ(o.genus, 2);
}
