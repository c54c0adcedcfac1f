#include "surfcut/embed.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "surfcut/error.hpp"

namespace surfcut {

bool EmbeddedGraph::is_terminal(int vertex) const {
  return std::find(terminals.begin(), terminals.end(), vertex) != terminals.end();
}

void validate(const EmbeddedGraph& g) {
  if (g.vertex_count <= 0) throw StructureError("graph has no vertices");
  if (static_cast<int>(g.rotation.size()) != g.vertex_count) {
    throw StructureError("rotation table has " + std::to_string(g.rotation.size()) +
                         " entries for " + std::to_string(g.vertex_count) + " vertices");
  }
  const int darts = 2 * g.edge_count();
  std::vector<int> seen(darts, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edges[e];
    if (edge.u < 0 || edge.u >= g.vertex_count || edge.v < 0 || edge.v >= g.vertex_count) {
      throw StructureError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (edge.weight < 0) throw StructureError("edge " + std::to_string(e) + " has negative weight");
    if (edge.sign != 1 && edge.sign != -1) {
      throw StructureError("edge " + std::to_string(e) + " has sign other than +-1");
    }
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    for (int d : g.rotation[v]) {
      if (d < 0 || d >= darts) {
        throw StructureError("rotation of vertex " + std::to_string(v) + " lists unknown dart " +
                             std::to_string(d));
      }
      if (g.dart_vertex(d) != v) {
        throw StructureError("dart " + std::to_string(d) + " listed at vertex " +
                             std::to_string(v) + " but belongs to vertex " +
                             std::to_string(g.dart_vertex(d)));
      }
      if (seen[d]++) throw StructureError("dart " + std::to_string(d) + " listed twice");
    }
  }
  for (int d = 0; d < darts; ++d) {
    if (!seen[d]) throw StructureError("dart " + std::to_string(d) + " missing from rotations");
  }
  // connectivity
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = g.vertex_count;
  for (const Edge& e : g.edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw StructureError("graph is not connected");
  for (int t : g.terminals) {
    if (t < 0 || t >= g.vertex_count) throw StructureError("terminal out of range");
  }
  std::vector<int> sorted = g.terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructureError("terminal listed twice");
  }
  for (const auto& [a, b] : g.pairs) {
    if (a == b) throw StructureError("terminal pair with equal ends");
    if (!g.is_terminal(a) || !g.is_terminal(b)) {
      throw StructureError("terminal pair uses a non-terminal vertex");
    }
  }
}

GMap to_gmap(const EmbeddedGraph& g) {
  GMap map(4 * g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      const int d = 2 * e + end;
      const int o = opposite_dart(d);
      for (int s = 0; s < 2; ++s) {
        map.alpha[2][dart_flag(d, s)] = dart_flag(d, 1 - s);
        map.alpha[0][dart_flag(d, s)] = dart_flag(o, g.edges[e].sign > 0 ? 1 - s : s);
      }
    }
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& rot = g.rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int d = rot[i];
      const int next = rot[(i + 1) % rot.size()];
      map.alpha[1][dart_flag(d, 1)] = dart_flag(next, 0);
      map.alpha[1][dart_flag(next, 0)] = dart_flag(d, 1);
    }
  }
  return map;
}

FaceStructure trace_faces(const EmbeddedGraph& g) {
  validate(g);
  const GMap map = to_gmap(g);
  check_gmap(map);
  FaceStructure out;
  const Orbits faces = face_orbits(map);
  out.flag_face = faces.id;
  out.faces.assign(faces.count, {});
  std::vector<char> started(faces.count, 0);
  for (int f = 0; f < map.flag_count(); ++f) {
    const int id = faces.id[f];
    if (started[id]) continue;
    started[id] = 1;
    int x = f;
    do {
      out.faces[id].push_back(flag_dart(x));
      x = map.alpha[1][map.alpha[0][x]];
    } while (x != f);
  }
  out.vertex_count = g.vertex_count;
  out.edge_count = g.edge_count();
  out.genus = 2 - g.vertex_count + g.edge_count() - faces.count;
  out.orientable = is_orientable(map);
  return out;
}

EmbeddedGraph rotation_system(const GMap& map, const std::vector<int>& flag_edge_id,
                              const std::vector<int>& flag_end, int edge_count) {
  const Orbits vertices = vertex_orbits(map);
  EmbeddedGraph out;
  out.vertex_count = vertices.count;
  out.rotation.assign(vertices.count, {});
  out.edges.assign(edge_count, Edge{});
  // first_flag[dart]: the flag through which the vertex walk enters the dart
  std::vector<int> first_flag(2 * edge_count, -1);
  std::vector<char> started(vertices.count, 0);
  for (int f = 0; f < map.flag_count(); ++f) {
    if (!map.alive(f)) continue;
    const int v = vertices.id[f];
    if (started[v]) continue;
    started[v] = 1;
    int x = f;
    do {
      const int dart = 2 * flag_edge_id[x] + flag_end[x];
      out.rotation[v].push_back(dart);
      first_flag[dart] = x;
      (flag_end[x] == 0 ? out.edges[flag_edge_id[x]].u : out.edges[flag_edge_id[x]].v) = v;
      x = map.alpha[1][map.alpha[2][x]];
    } while (x != f);
  }
  for (int e = 0; e < edge_count; ++e) {
    const int x0 = first_flag[2 * e];
    const int x1 = first_flag[2 * e + 1];
    if (x0 < 0 || x1 < 0) throw StructureError("edge without both ends in rotation_system");
    out.edges[e].sign = map.alpha[0][x0] == map.alpha[2][x1] ? 1 : -1;
  }
  return out;
}

EmbeddedGraph dual_graph(const EmbeddedGraph& g, const FaceStructure& faces) {
  const GMap map = to_gmap(g);
  const GMap dual = dual_map(map);
  std::vector<int> edge_id(map.flag_count());
  std::vector<int> end(map.flag_count());
  for (int f = 0; f < map.flag_count(); ++f) {
    edge_id[f] = flag_edge(f);
    // the two ends of e* are the two sides of e, i.e. the alpha0 classes
    const int base = 4 * flag_edge(f);
    end[f] = (f == base || f == map.alpha[0][base]) ? 0 : 1;
  }
  EmbeddedGraph out = rotation_system(dual, edge_id, end, g.edge_count());
  if (out.vertex_count != faces.face_count()) {
    throw InternalError("dual vertex count differs from face count");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    out.edges[e].weight = g.edges[e].weight;
    out.edges[e].name = g.edges[e].name.empty() ? std::string() : g.edges[e].name + "*";
  }
  return out;
}

EmbeddedGraph planar_from_coordinates(const std::vector<std::pair<double, double>>& points,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<Weight>& weights) {
  EmbeddedGraph g;
  g.vertex_count = static_cast<int>(points.size());
  g.rotation.assign(g.vertex_count, {});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Edge edge;
    edge.u = edges[e].first;
    edge.v = edges[e].second;
    edge.weight = weights.empty() ? 1 : weights[e];
    edge.name = "e" + std::to_string(e);
    g.edges.push_back(edge);
    g.rotation[edge.u].push_back(static_cast<int>(2 * e));
    g.rotation[edge.v].push_back(static_cast<int>(2 * e + 1));
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    auto angle = [&](int dart) {
      const int w = g.dart_vertex(opposite_dart(dart));
      return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
    };
    std::sort(g.rotation[v].begin(), g.rotation[v].end(),
              [&](int a, int b) { return angle(a) < angle(b); });
  }
  return g;
}

}  // namespace surfcut
