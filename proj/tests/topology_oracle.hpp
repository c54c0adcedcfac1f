#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "surfcut/cutgraph.hpp"
#include "surfcut/embed.hpp"
#include "surfcut/topology.hpp"

namespace oracle_detail {

using namespace surfcut;

// Builds the disk with its interior as an explicit planar map, traces faces,
// glues inner faces across paired boundary segments and checks separation.
inline bool explicit_separates(const Topology& top, const DiskSchema& schema,
                               const std::vector<std::pair<int, int>>& pairs,
                               std::vector<int>* corner_face = nullptr) {
  const int slots = schema.slot_count();
  if (slots == 0) return pairs.empty();
  const int n = top.point_count();
  const int internal = top.internal_count;
  std::vector<int> first(slots + 1, 0);
  for (int s = 0; s < slots; ++s) first[s + 1] = first[s] + top.count[schema.slots[s].kedge];
  // boundary cycle: points of slot s, then corner s
  std::vector<int> cycle;  // node ids: points 0..n-1, internal n.., corners n+internal+s
  for (int s = 0; s < slots; ++s) {
    for (int q = first[s]; q < first[s + 1]; ++q) cycle.push_back(q);
    cycle.push_back(n + internal + s);
  }
  const int nodes = n + internal + slots;
  EmbeddedGraph g;
  g.vertex_count = nodes;
  g.rotation.assign(nodes, {});
  const int len = static_cast<int>(cycle.size());
  std::vector<int> boundary_dart(len);  // dart at cycle[i] going to cycle[i+1]
  for (int i = 0; i < len; ++i) {
    const int e = g.edge_count();
    g.edges.push_back({cycle[i], cycle[(i + 1) % len], 1, 1, ""});
    boundary_dart[i] = 2 * e;
  }
  std::vector<std::vector<int>> interior_darts(nodes);
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& [a, b] : top.edges) {
    const int e = g.edge_count();
    g.edges.push_back({a, b, 1, 1, ""});
    interior_darts[a].push_back(2 * e);
    interior_darts[b].push_back(2 * e + 1);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // ccw rotation at boundary nodes: next, interior, previous
  for (int i = 0; i < len; ++i) {
    const int v = cycle[i];
    g.rotation[v].push_back(boundary_dart[i]);
    for (int d : interior_darts[v]) g.rotation[v].push_back(d);
    g.rotation[v].push_back(boundary_dart[(i + len - 1) % len] + 1);
  }
  // internal nodes: neighbours ordered by the smallest point behind them
  std::function<int(int, int)> min_point = [&](int v, int from) {
    int best = v < n ? v : 1 << 30;
    for (int w : adj[v]) {
      if (w != from) best = std::min(best, min_point(w, v));
    }
    return best;
  };
  for (int v = n; v < n + internal; ++v) {
    std::vector<std::pair<int, int>> order;
    for (int d : interior_darts[v]) {
      const int w = g.dart_vertex(opposite_dart(d));
      order.emplace_back(min_point(w, v), d);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [key, d] : order) g.rotation[v].push_back(d);
  }
  const FaceStructure f = trace_faces(g);
  if (f.genus != 0) return false;
  auto inner = [&](int i) { return f.flag_face[dart_flag(boundary_dart[i], 1)]; };
  // cycle position of the segment (s, r): segment before point r, r = m is before the corner
  std::vector<int> seg_first(slots + 1, 0);
  for (int s = 0; s < slots; ++s) seg_first[s + 1] = seg_first[s] + top.count[schema.slots[s].kedge] + 1;
  auto segment_edge = [&](int s, int r) {
    // edge ending at the r-th node of slot s in the cycle; cycle index of that node is seg_first[s] + r
    const int node_index = seg_first[s] + r;
    return (node_index + len - 1) % len;
  };
  std::vector<int> parent(f.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int s = 0; s < slots; ++s) {
    const auto& slot = schema.slots[s];
    const int m = top.count[slot.kedge];
    const int other = schema.copy_slot[slot.kedge][1 - slot.copy];
    for (int r = 0; r <= m; ++r) {
      const int gap = slot.forward ? r : m - r;
      const int r2 = schema.slots[other].forward ? gap : m - gap;
      parent[find(inner(segment_edge(s, r)))] = find(inner(segment_edge(other, r2)));
    }
  }
  std::vector<int> corner(slots);
  for (int s = 0; s < slots; ++s) corner[s] = find(inner(segment_edge(s, top.count[schema.slots[s].kedge])));
  if (corner_face) *corner_face = corner;
  auto face_of = [&](int vertex) {
    for (int s = 0; s < slots; ++s) {
      if (schema.kvertex_terminal[schema.corner_vertex[s]] == vertex) return corner[s];
    }
    return -1;
  };
  for (const auto& [a, b] : pairs) {
    if (face_of(a) == face_of(b)) return false;
  }
  return true;
}

}  // namespace oracle_detail

using oracle_detail::explicit_separates;
