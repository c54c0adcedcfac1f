#include "surfcut/generators.hpp"

#include <algorithm>
#include <string>

namespace surfcut {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void randomize_weights(EmbeddedGraph& g, std::mt19937_64& rng, Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> w(lo, hi);
  for (auto& e : g.edges) e.weight = w(rng);
}

void name_edges(EmbeddedGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) g.edges[e].name = "e" + std::to_string(e);
}

// Removes edge e and renumbers the darts of the last edge into its slot.
void erase_edge(EmbeddedGraph& g, int e) {
  for (auto& rot : g.rotation) {
    rot.erase(std::remove_if(rot.begin(), rot.end(), [&](int d) { return dart_edge(d) == e; }),
              rot.end());
  }
  const int last = g.edge_count() - 1;
  if (e != last) {
    g.edges[e] = g.edges[last];
    for (auto& rot : g.rotation) {
      for (int& d : rot) {
        if (dart_edge(d) == last) d = 2 * e + dart_end(d);
      }
    }
  }
  g.edges.pop_back();
}

// An edge whose two sides lie on different faces; deleting it keeps the
// graph connected and the embedding cellular.
std::vector<int> deletable_edges(const EmbeddedGraph& g) {
  const FaceStructure f = trace_faces(g);
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.flag_face[4 * e] != f.flag_face[4 * e + 1]) out.push_back(e);
  }
  return out;
}

void subdivide(EmbeddedGraph& g, int e) {
  const int w = g.vertex_count++;
  const int ne = g.edge_count();
  Edge tail = g.edges[e];
  tail.u = w;
  g.edges[e].v = w;
  g.edges.push_back(tail);
  for (int& d : g.rotation[tail.v]) {
    if (d == 2 * e + 1) {
      d = 2 * ne + 1;
      break;
    }
  }
  g.rotation.push_back({2 * e + 1, 2 * ne});
}

// New edge inside the face of corner flags a and b (corners after darts).
void add_chord(EmbeddedGraph& g, int dart_a, int dart_b) {
  const int ne = g.edge_count();
  const int va = g.dart_vertex(dart_a);
  const int vb = g.dart_vertex(dart_b);
  g.edges.push_back({va, vb, 1, 1, ""});
  auto insert_after = [&](int v, int after, int dart) {
    auto& rot = g.rotation[v];
    rot.insert(std::find(rot.begin(), rot.end(), after) + 1, dart);
  };
  insert_after(va, dart_a, 2 * ne);
  insert_after(vb, dart_b, 2 * ne + 1);
}

}  // namespace

void assign_terminals(EmbeddedGraph& g, std::mt19937_64& rng, int count, int max_pairs,
                      bool all_pairs) {
  std::vector<int> vertices(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) vertices[v] = v;
  std::shuffle(vertices.begin(), vertices.end(), rng);
  count = std::min(count, g.vertex_count);
  g.terminals.assign(vertices.begin(), vertices.begin() + count);
  std::sort(g.terminals.begin(), g.terminals.end());
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) candidates.emplace_back(g.terminals[i], g.terminals[j]);
  }
  g.pairs.clear();
  if (all_pairs || candidates.empty()) {
    g.pairs = candidates;
    return;
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const int k = uniform(rng, 1, std::min<int>(max_pairs, static_cast<int>(candidates.size())));
  g.pairs.assign(candidates.begin(), candidates.begin() + k);
  std::sort(g.pairs.begin(), g.pairs.end());
}

EmbeddedGraph grid_graph(int rows, int cols, std::mt19937_64& rng, Weight min_weight,
                         Weight max_weight) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) pts.emplace_back(c, r);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  EmbeddedGraph g = planar_from_coordinates(pts, edges, {});
  randomize_weights(g, rng, min_weight, max_weight);
  return g;
}

EmbeddedGraph random_planar_instance(std::mt19937_64& rng, const InstanceParams& params) {
  // smallest grids that still reach max_edges, with some variety
  int rows = 2;
  int cols = 2;
  for (;;) {
    rows = uniform(rng, 2, 4);
    cols = uniform(rng, 2, 4);
    if (rows * cols - 1 <= params.max_edges) break;
  }
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) pts.emplace_back(c, r);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
      if (c + 1 < cols && r + 1 < rows && uniform(rng, 0, 2) > 0) {
        if (uniform(rng, 0, 1)) {
          edges.emplace_back(v, v + cols + 1);
        } else {
          edges.emplace_back(v + 1, v + cols);
        }
      }
    }
  }
  EmbeddedGraph g = planar_from_coordinates(pts, edges, {});
  const int target = uniform(rng, std::min(params.max_edges, rows * cols - 1 + 2), params.max_edges);
  while (g.edge_count() > target) {
    const std::vector<int> options = deletable_edges(g);
    if (options.empty()) break;
    erase_edge(g, options[uniform(rng, 0, static_cast<int>(options.size()) - 1)]);
  }
  name_edges(g);
  randomize_weights(g, rng, params.min_weight, params.max_weight);
  assign_terminals(g, rng, params.terminals, params.max_pairs, params.all_pairs);
  return g;
}

EmbeddedGraph torus_grid(int rows, int cols) {
  EmbeddedGraph g;
  g.vertex_count = rows * cols;
  g.rotation.assign(g.vertex_count, {});
  auto id = [&](int r, int c) { return ((r + rows) % rows) * cols + (c + cols) % cols; };
  // edge 2v: v -> right neighbour, edge 2v+1: v -> upper neighbour
  for (int v = 0; v < g.vertex_count; ++v) {
    const int r = v / cols;
    const int c = v % cols;
    g.edges.push_back({v, id(r, c + 1), 1, 1, ""});
    g.edges.push_back({v, id(r + 1, c), 1, 1, ""});
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    const int r = v / cols;
    const int c = v % cols;
    const int right = 2 * (2 * v);
    const int up = 2 * (2 * v + 1);
    const int left = 2 * (2 * id(r, c - 1)) + 1;
    const int down = 2 * (2 * id(r - 1, c) + 1) + 1;
    g.rotation[v] = {right, up, left, down};
  }
  name_edges(g);
  return g;
}

EmbeddedGraph random_torus_instance(std::mt19937_64& rng, const InstanceParams& params) {
  static const std::pair<int, int> shapes[] = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {1, 4}};
  EmbeddedGraph g;
  for (;;) {
    const auto [r, c] = shapes[uniform(rng, 0, 5)];
    if (2 * r * c <= params.max_edges) {
      g = torus_grid(r, c);
      break;
    }
  }
  const int steps = uniform(rng, 1, 6);
  for (int s = 0; s < steps; ++s) {
    const int op = uniform(rng, 0, 2);
    if (op == 0 && g.edge_count() < params.max_edges) {
      subdivide(g, uniform(rng, 0, g.edge_count() - 1));
    } else if (op == 1 && g.edge_count() < params.max_edges) {
      const FaceStructure f = trace_faces(g);
      const int face = uniform(rng, 0, f.face_count() - 1);
      // corners of the face: flags with side 1 on it
      std::vector<int> corners;
      for (int x = 0; x < 4 * g.edge_count(); ++x) {
        if ((x & 1) == 1 && f.flag_face[x] == face) corners.push_back(flag_dart(x));
      }
      if (corners.size() < 2) continue;
      std::shuffle(corners.begin(), corners.end(), rng);
      add_chord(g, corners[0], corners[1]);
    } else {
      const std::vector<int> options = deletable_edges(g);
      if (!options.empty() && g.edge_count() > 2) {
        erase_edge(g, options[uniform(rng, 0, static_cast<int>(options.size()) - 1)]);
      }
    }
  }
  name_edges(g);
  randomize_weights(g, rng, params.min_weight, params.max_weight);
  assign_terminals(g, rng, params.terminals, params.max_pairs, params.all_pairs);
  return g;
}

}  // namespace surfcut
