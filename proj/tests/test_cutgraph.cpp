#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "surfcut/cutgraph.hpp"
#include "surfcut/error.hpp"
#include "surfcut/generators.hpp"

using namespace surfcut;

namespace {

// all-pairs distances between faces, moving across one edge at a time
std::vector<std::vector<Weight>> face_floyd(const EmbeddedGraph& g, const FaceStructure& f) {
  const int n = f.face_count();
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInfinity));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int a = f.flag_face[4 * e];
    const int b = f.flag_face[4 * e + 1];
    d[a][b] = std::min(d[a][b], g.edges[e].weight);
    d[b][a] = std::min(d[b][a], g.edges[e].weight);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::vector<int> faces_around(const EmbeddedGraph& g, const FaceStructure& f, int v) {
  std::vector<int> out;
  for (int d : g.rotation[v]) out.push_back(f.flag_face[dart_flag(d, 1)]);
  return out;
}

Weight anchor_distance(const EmbeddedGraph& g, const FaceStructure& f, int u, int v) {
  const auto d = face_floyd(g, f);
  Weight best = kInfinity;
  for (int a : faces_around(g, f, u))
    for (int b : faces_around(g, f, v)) best = std::min(best, d[a][b]);
  return best;
}

// minimum spanning tree of the terminal metric by trying every Pruefer code
Weight exhaustive_mst(const std::vector<std::vector<Weight>>& m) {
  const int t = static_cast<int>(m.size());
  if (t <= 1) return 0;
  if (t == 2) return m[0][1];
  Weight best = kInfinity;
  std::vector<int> code(t - 2, 0);
  for (;;) {
    std::vector<int> degree(t, 1);
    for (int c : code) ++degree[c];
    Weight total = 0;
    std::vector<int> deg = degree;
    for (int c : code) {
      for (int leaf = 0; leaf < t; ++leaf) {
        if (deg[leaf] == 1) {
          total += m[leaf][c];
          deg[leaf] = 0;
          --deg[c];
          break;
        }
      }
    }
    int a = -1;
    for (int i = 0; i < t; ++i) {
      if (deg[i] == 1) {
        if (a < 0) {
          a = i;
        } else {
          total += m[a][i];
        }
      }
    }
    best = std::min(best, total);
    int i = 0;
    while (i < t - 2 && ++code[i] == t) code[i++] = 0;
    if (i == t - 2) break;
  }
  return best;
}

void expect_disk(const EmbeddedGraph& g) {
  const FaceStructure f = trace_faces(g);
  const CutGraph k = build_cut_graph(g, f);
  const CutDisk disk = cut_to_disk(g, f, k);
  EXPECT_TRUE(reglue_matches(disk));
  EXPECT_EQ(disk.overlay.genus, f.genus);
  EXPECT_EQ(disk.schema.slot_count(), 2 * static_cast<int>(k.edges.size()));
  const int t = static_cast<int>(g.terminals.size());
  EXPECT_LE(static_cast<int>(k.edges.size()), 3 * (f.genus + t));
  for (const auto& slot : disk.schema.slots) {
    EXPECT_EQ(disk.schema.copy_slot[slot.kedge][slot.copy],
              &slot - disk.schema.slots.data());
  }
  if (f.orientable) {
    for (int e = 0; e < disk.schema.kedge_count(); ++e) {
      const auto& s = disk.schema.slots;
      EXPECT_NE(s[disk.schema.copy_slot[e][0]].forward, s[disk.schema.copy_slot[e][1]].forward);
    }
  }
  // every terminal shows up as a corner
  for (int term : g.terminals) {
    bool found = false;
    for (int c : disk.schema.corner_vertex) found |= disk.schema.kvertex_terminal[c] == term;
    EXPECT_TRUE(found || disk.schema.slots.empty());
  }
}

}  // namespace

TEST(CrossMetricPaths, TerminalSeesIncidentFacesAtZero) {
  const EmbeddedGraph g = fixtures::cube();
  const FaceStructure f = trace_faces(g);
  const AnchorDistances d = cross_metric_shortest_paths(g, f, {Anchor::kVertex, 0, -1});
  for (int face : faces_around(g, f, 0)) EXPECT_EQ(d.face[face], 0);
  int positive = 0;
  for (Weight w : d.face) positive += w > 0;
  EXPECT_EQ(positive, 3);
}

TEST(CrossMetricPaths, CubeAntipodalVerticesAreOneCrossingApart) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {0, 6};
  const FaceStructure f = trace_faces(g);
  const AnchorDistances d = cross_metric_shortest_paths(g, f, {Anchor::kVertex, 0, -1});
  EXPECT_EQ(d.vertex[6], anchor_distance(g, f, 0, 6));
  EXPECT_EQ(d.vertex[6], 1);
  const Curve c = d.curve_to_vertex(6);
  EXPECT_EQ(curve_length(c, g, f), 1);
}

TEST(CrossMetricPaths, PathGraphEndsShareTheOnlyFace) {
  EmbeddedGraph g = planar_from_coordinates({{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                            {{0, 1}, {1, 2}, {2, 3}}, {4, 5, 6});
  g.terminals = {0, 3};
  const FaceStructure f = trace_faces(g);
  EXPECT_EQ(cross_metric_shortest_paths(g, f, {Anchor::kVertex, 0, -1}).vertex[3], 0);
}

TEST(CrossMetricPaths, RandomDistancesMatchFaceFloyd) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const EmbeddedGraph g = random_planar_instance(rng, {});
    const FaceStructure f = trace_faces(g);
    const int a = g.terminals[0];
    const AnchorDistances d = cross_metric_shortest_paths(g, f, {Anchor::kVertex, a, -1});
    for (int b : g.terminals) {
      if (b == a) continue;
      EXPECT_EQ(d.vertex[b], anchor_distance(g, f, a, b));
      EXPECT_EQ(curve_length(d.curve_to_vertex(b), g, f), d.vertex[b]);
    }
  }
}

TEST(CutGraph, EmptyTerminalSetRejected) {
  const EmbeddedGraph g = fixtures::cube();
  EXPECT_THROW(build_cut_graph(g, trace_faces(g)), InputError);
}

TEST(CutGraph, SphereTwoTerminalsGivesOneEdge) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {0, 6};
  const FaceStructure f = trace_faces(g);
  const CutGraph k = build_cut_graph(g, f);
  ASSERT_EQ(k.edges.size(), 1u);
  EXPECT_EQ(k.length(g, f), 1);
  const CutDisk disk = cut_to_disk(g, f, k);
  ASSERT_EQ(disk.schema.slot_count(), 2);
  EXPECT_EQ(disk.schema.slots[0].kedge, 0);
  EXPECT_EQ(disk.schema.slots[1].kedge, 0);
  EXPECT_NE(disk.schema.slots[0].copy, disk.schema.slots[1].copy);
  EXPECT_NE(disk.schema.corner_vertex[0], disk.schema.corner_vertex[1]);
  EXPECT_TRUE(reglue_matches(disk));
}

TEST(CutGraph, SphereThreeTerminalsIsADisk) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {0, 2, 5};
  expect_disk(g);
}

TEST(CutGraph, TorusTwoLoopsCutsThroughTheFaceCentre) {
  EmbeddedGraph g = fixtures::torus_two_loops(3, 5);
  g.terminals = {0};
  const FaceStructure f = trace_faces(g);
  const CutGraph k = build_cut_graph(g, f);
  // both loops pass the centre of the only face, which becomes a branch point
  ASSERT_EQ(k.vertices.size(), 2u);
  EXPECT_TRUE(k.vertices[0].terminal);
  EXPECT_FALSE(k.vertices[1].terminal);
  ASSERT_EQ(k.edges.size(), 3u);
  const CutDisk disk = cut_to_disk(g, f, k);
  ASSERT_EQ(disk.schema.slot_count(), 6);
  const auto& s = disk.schema.slots;
  for (int e = 0; e < 3; ++e) {
    EXPECT_NE(s[disk.schema.copy_slot[e][0]].forward, s[disk.schema.copy_slot[e][1]].forward);
  }
  EXPECT_EQ(k.length(g, f), 0);
  EXPECT_TRUE(reglue_matches(disk));
}

TEST(CutGraph, SingleTerminalOnSphereIsAPoint) {
  EmbeddedGraph g = fixtures::cube();
  g.terminals = {3};
  const FaceStructure f = trace_faces(g);
  const CutGraph k = build_cut_graph(g, f);
  EXPECT_TRUE(k.edges.empty());
  const CutDisk disk = cut_to_disk(g, f, k);
  EXPECT_EQ(disk.schema.slot_count(), 0);
  EXPECT_EQ(disk.schema.face_count, 6);
}

TEST(CutGraph, RandomPlanarInstancesCutToDisks) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    InstanceParams p;
    p.terminals = 1 + i % 5;
    expect_disk(random_planar_instance(rng, p));
  }
}

TEST(CutGraph, RandomTorusInstancesCutToDisks) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    InstanceParams p;
    p.max_edges = 10;
    p.terminals = 1 + i % 3;
    const EmbeddedGraph g = random_torus_instance(rng, p);
    ASSERT_EQ(trace_faces(g).genus, 2);
    expect_disk(g);
  }
}

TEST(CutGraph, PlanarTreeNoLongerThanTerminalMst) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    InstanceParams p;
    p.terminals = 2 + i % 3;
    const EmbeddedGraph g = random_planar_instance(rng, p);
    const FaceStructure f = trace_faces(g);
    const int t = static_cast<int>(g.terminals.size());
    std::vector<std::vector<Weight>> m(t, std::vector<Weight>(t, 0));
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        if (a != b) m[a][b] = anchor_distance(g, f, g.terminals[a], g.terminals[b]);
    EXPECT_LE(build_cut_graph(g, f).length(g, f), exhaustive_mst(m));
  }
}
