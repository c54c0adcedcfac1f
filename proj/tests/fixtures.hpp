#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "surfcut/embed.hpp"

namespace fixtures {

using surfcut::EmbeddedGraph;

// Cube with the standard planar rotation: vertices 0..3 bottom square,
// 4..7 top square, each top vertex above its bottom twin.
inline EmbeddedGraph cube(surfcut::Weight w = 1) {
  std::vector<std::pair<double, double>> pts = {{0, 0}, {3, 0}, {3, 3}, {0, 3},
                                                {1, 1}, {2, 1}, {2, 2}, {1, 2}};
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                                            {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return surfcut::planar_from_coordinates(pts, edges, std::vector<surfcut::Weight>(12, w));
}

inline EmbeddedGraph single_loop() {
  EmbeddedGraph g;
  g.vertex_count = 1;
  g.edges = {{0, 0, 1, 1, "a"}};
  g.rotation = {{0, 1}};
  return g;
}

// One vertex, loops a and b interleaved: a b a' b'.
inline EmbeddedGraph torus_two_loops(surfcut::Weight wa = 1, surfcut::Weight wb = 1) {
  EmbeddedGraph g;
  g.vertex_count = 1;
  g.edges = {{0, 0, wa, 1, "a"}, {0, 0, wb, 1, "b"}};
  g.rotation = {{0, 2, 1, 3}};
  return g;
}

inline EmbeddedGraph triangle(surfcut::Weight ab, surfcut::Weight bc, surfcut::Weight ca) {
  return surfcut::planar_from_coordinates({{0, 0}, {2, 0}, {1, 2}}, {{0, 1}, {1, 2}, {2, 0}},
                                          {ab, bc, ca});
}

// Random one-face-at-a-time planar map: start from a triangle and repeatedly
// either add a pendant vertex in some corner or a chord inside some face.
inline EmbeddedGraph random_planar_map(std::mt19937_64& rng, int edges) {
  EmbeddedGraph g = triangle(1, 1, 1);
  std::uniform_int_distribution<int> weight(1, 10);
  for (auto& e : g.edges) e.weight = weight(rng);
  while (g.edge_count() < edges) {
    const int v = std::uniform_int_distribution<int>(0, g.vertex_count - 1)(rng);
    const int pos = std::uniform_int_distribution<int>(0, static_cast<int>(g.rotation[v].size()))(rng);
    const int e = g.edge_count();
    const int w = g.vertex_count++;
    g.edges.push_back({v, w, weight(rng), 1, "e" + std::to_string(e)});
    g.rotation[v].insert(g.rotation[v].begin() + pos, 2 * e);
    g.rotation.push_back({2 * e + 1});
  }
  return g;
}

}  // namespace fixtures
