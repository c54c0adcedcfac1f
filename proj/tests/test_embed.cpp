#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "surfcut/embed.hpp"
#include "surfcut/error.hpp"
#include "surfcut/gmap.hpp"

using namespace surfcut;

TEST(TraceFaces, CubeIsSphere) {
  const FaceStructure f = trace_faces(fixtures::cube());
  EXPECT_EQ(f.face_count(), 6);
  EXPECT_EQ(f.genus, 0);
  EXPECT_TRUE(f.orientable);
  for (const auto& walk : f.faces) EXPECT_EQ(walk.size(), 4u);
}

TEST(TraceFaces, SingleLoopIsSphere) {
  const FaceStructure f = trace_faces(fixtures::single_loop());
  EXPECT_EQ(f.face_count(), 2);
  EXPECT_EQ(f.genus, 0);
}

TEST(TraceFaces, InterleavedLoopsIsTorus) {
  const FaceStructure f = trace_faces(fixtures::torus_two_loops());
  EXPECT_EQ(f.face_count(), 1);
  EXPECT_EQ(f.genus, 2);
  EXPECT_TRUE(f.orientable);
}

TEST(TraceFaces, TwistedLoopIsProjectivePlane) {
  EmbeddedGraph g = fixtures::single_loop();
  g.edges[0].sign = -1;
  const FaceStructure f = trace_faces(g);
  EXPECT_EQ(f.face_count(), 1);
  EXPECT_EQ(f.genus, 1);
  EXPECT_FALSE(f.orientable);
}

TEST(TraceFaces, DartSideIncidencesCoverEveryEdgeTwice) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const EmbeddedGraph g = fixtures::random_planar_map(rng, 12);
    const FaceStructure f = trace_faces(g);
    std::size_t total = 0;
    for (const auto& walk : f.faces) total += walk.size();
    EXPECT_EQ(total, 2u * g.edge_count());
    EXPECT_EQ(g.vertex_count - g.edge_count() + f.face_count(), 2 - f.genus);
  }
}

TEST(Validate, RejectsDuplicatedDart) {
  EmbeddedGraph g = fixtures::triangle(1, 1, 1);
  g.rotation[0].push_back(g.rotation[0].front());
  EXPECT_THROW(trace_faces(g), StructureError);
}

TEST(Validate, RejectsMissingDart) {
  EmbeddedGraph g = fixtures::triangle(1, 1, 1);
  g.rotation[1].pop_back();
  EXPECT_THROW(trace_faces(g), StructureError);
}

TEST(DualGraph, CubeDualIsOctahedron) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  const EmbeddedGraph d = dual_graph(g, f);
  EXPECT_EQ(d.vertex_count, 6);
  EXPECT_EQ(d.edge_count(), 12);
  const FaceStructure df = trace_faces(d);
  EXPECT_EQ(df.face_count(), 8);
  for (int v = 0; v < d.vertex_count; ++v) EXPECT_EQ(d.rotation[v].size(), 4u);
}

TEST(DualGraph, LoopDualIsSingleEdge) {
  const EmbeddedGraph g = fixtures::single_loop();
  const EmbeddedGraph d = dual_graph(g, trace_faces(g));
  EXPECT_EQ(d.vertex_count, 2);
  EXPECT_EQ(d.edge_count(), 1);
  EXPECT_NE(d.edges[0].u, d.edges[0].v);
}

TEST(DualGraph, DoubleDualIsIsomorphic) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 120; ++i) {
    EmbeddedGraph g = fixtures::random_planar_map(rng, 4 + i % 9);
    // sprinkle chords so faces are not all the same
    const FaceStructure f = trace_faces(g);
    const EmbeddedGraph d = dual_graph(g, f);
    const EmbeddedGraph dd = dual_graph(d, trace_faces(d));
    ASSERT_EQ(dd.vertex_count, g.vertex_count);
    EXPECT_TRUE(isomorphic(to_gmap(g), to_gmap(dd)));
    for (int e = 0; e < g.edge_count(); ++e) EXPECT_EQ(dd.edges[e].weight, g.edges[e].weight);
  }
}

TEST(DualGraph, TorusDualKeepsGenus) {
  const EmbeddedGraph g = fixtures::torus_two_loops();
  const EmbeddedGraph d = dual_graph(g, trace_faces(g));
  EXPECT_EQ(d.vertex_count, 1);
  EXPECT_EQ(trace_faces(d).genus, 2);
}

TEST(GMap, RemoveEdgesKeepsEuler) {
  const EmbeddedGraph g = fixtures::cube();
  GMap m = to_gmap(g);
  std::vector<char> keep(m.flag_count(), 1);
  // delete edge 8 (vertical) merging two faces
  for (int s = 0; s < 4; ++s) keep[4 * 8 + s] = 0;
  const GMap r = remove_edges(m, keep);
  check_gmap(r);
  EXPECT_EQ(face_orbits(r).count, 5);
  EXPECT_EQ(euler_characteristic(r), 2);
}

TEST(GMap, DissolveDegreeTwo) {
  // path 0-1-2 closed to a triangle, dissolve vertex 1
  const EmbeddedGraph g = fixtures::triangle(1, 1, 1);
  GMap m = to_gmap(g);
  dissolve_degree_two(m, [&](int f) { return g.dart_vertex(flag_dart(f)) == 1; });
  check_gmap(m);
  EXPECT_EQ(vertex_orbits(m).count, 2);
  EXPECT_EQ(edge_orbits(m).count, 2);
  EXPECT_EQ(face_orbits(m).count, 2);
}
