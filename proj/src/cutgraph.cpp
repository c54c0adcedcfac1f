#include "surfcut/cutgraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "surfcut/error.hpp"

namespace surfcut {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// steps: (edge, end we leave from), in order from start_node
Curve path_curve(const ExtendedDual& x, const std::vector<std::pair<int, int>>& steps,
                 int start_node, int end_node) {
  Curve c;
  if (x.is_terminal_node(start_node)) {
    if (steps.empty()) throw InternalError("empty path from a terminal");
    c.start = {Anchor::kVertex, x.node_vertex[start_node], x.edges[steps.front().first].corner};
  } else {
    c.start = {Anchor::kFace, start_node, -1};
  }
  for (const auto& [edge, end] : steps) {
    const ExtendedDual::XEdge& xe = x.edges[edge];
    if (xe.gedge < 0) continue;
    c.events.push_back({xe.gedge, 4 * xe.gedge + end, 0});
  }
  if (x.is_terminal_node(end_node)) {
    if (steps.empty()) throw InternalError("empty path to a terminal");
    c.end = {Anchor::kVertex, x.node_vertex[end_node], x.edges[steps.back().first].corner};
  } else {
    c.end = {Anchor::kFace, end_node, -1};
  }
  return c;
}

std::vector<std::pair<int, int>> trace_back(const ExtendedDual& x, const ShortestPaths& sp,
                                            int target, int& source) {
  std::vector<std::pair<int, int>> steps;
  int node = target;
  while (sp.pred_edge[node] >= 0) {
    const int e = sp.pred_edge[node];
    const int end = sp.pred_end[node];
    steps.emplace_back(e, end);
    node = x.edges[e].node[end];
  }
  source = node;
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

ExtendedDual extended_dual(const EmbeddedGraph& graph, const FaceStructure& faces) {
  ExtendedDual x;
  x.face_count = faces.face_count();
  std::vector<int> terms = graph.terminals;
  std::sort(terms.begin(), terms.end());
  x.terminal_node.assign(graph.vertex_count, -1);
  x.node_vertex.assign(x.face_count, -1);
  for (int t : terms) {
    x.terminal_node[t] = static_cast<int>(x.node_vertex.size());
    x.node_vertex.push_back(t);
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    ExtendedDual::XEdge xe;
    xe.node = {faces.flag_face[4 * e], faces.flag_face[4 * e + 1]};
    xe.weight = graph.edges[e].weight;
    xe.gedge = e;
    x.edges.push_back(xe);
  }
  for (int t : terms) {
    for (int d : graph.rotation[t]) {
      ExtendedDual::XEdge xe;
      xe.corner = dart_flag(d, 1);
      xe.node = {x.terminal_node[t], faces.flag_face[xe.corner]};
      x.edges.push_back(xe);
    }
  }
  x.adjacency.assign(x.node_vertex.size(), {});
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    for (int end = 0; end < 2; ++end) x.adjacency[x.edges[e].node[end]].push_back({e, end});
  }
  return x;
}

ShortestPaths extended_dijkstra(const ExtendedDual& x, const std::vector<int>& sources) {
  ShortestPaths sp;
  const int n = x.node_count();
  sp.dist.assign(n, kInfinity);
  sp.pred_edge.assign(n, -1);
  sp.pred_end.assign(n, -1);
  std::vector<char> is_source(n, 0);
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) {
    is_source[s] = 1;
    sp.dist[s] = 0;
    heap.push({0, s});
  }
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != sp.dist[u]) continue;
    if (x.is_terminal_node(u) && !is_source[u]) continue;
    for (const ExtendedDual::Arc& arc : x.adjacency[u]) {
      const ExtendedDual::XEdge& e = x.edges[arc.edge];
      const int v = e.node[1 - arc.end];
      const Weight nd = d + e.weight;
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.pred_edge[v] = arc.edge;
        sp.pred_end[v] = arc.end;
        heap.push({nd, v});
      }
    }
  }
  return sp;
}

Curve AnchorDistances::curve_to_face(int face) const {
  int source_node = -1;
  const auto steps = trace_back(dual, paths, face, source_node);
  if (paths.dist[face] >= kInfinity) throw InternalError("face unreachable");
  Curve c = path_curve(dual, steps, source_node, face);
  if (source.kind == Anchor::kVertex && steps.empty()) {
    throw InternalError("a vertex anchor needs a corner to reach its own face");
  }
  return c;
}

Curve AnchorDistances::curve_to_vertex(int vertex) const {
  const int node = dual.terminal_node[vertex];
  if (node < 0 || paths.dist[node] >= kInfinity) throw InputError("vertex is not a reachable terminal");
  int source_node = -1;
  const auto steps = trace_back(dual, paths, node, source_node);
  return path_curve(dual, steps, source_node, node);
}

AnchorDistances cross_metric_shortest_paths(const EmbeddedGraph& graph, const FaceStructure& faces,
                                            const Anchor& source) {
  AnchorDistances out;
  out.source = source;
  EmbeddedGraph g = graph;
  if (source.kind == Anchor::kVertex && !g.is_terminal(source.id)) g.terminals.push_back(source.id);
  out.dual = extended_dual(g, faces);
  const int node = source.kind == Anchor::kVertex ? out.dual.terminal_node[source.id] : source.id;
  if (node < 0 || node >= out.dual.node_count()) throw InputError("source anchor out of range");
  out.paths = extended_dijkstra(out.dual, {node});
  out.face.assign(out.paths.dist.begin(), out.paths.dist.begin() + out.dual.face_count);
  out.vertex.assign(graph.vertex_count, kInfinity);
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (out.dual.terminal_node[v] >= 0) out.vertex[v] = out.paths.dist[out.dual.terminal_node[v]];
  }
  return out;
}

Weight CutGraph::length(const EmbeddedGraph& graph, const FaceStructure& faces) const {
  Weight total = 0;
  for (const KEdge& e : edges) total += curve_length(e.curve, graph, faces);
  return total;
}

CutGraph build_cut_graph(const EmbeddedGraph& graph, const FaceStructure& faces) {
  validate(graph);
  if (graph.terminals.empty()) throw InputError("cut graph needs at least one terminal");
  const ExtendedDual x = extended_dual(graph, faces);
  const int nodes = x.node_count();
  const int xedges = static_cast<int>(x.edges.size());
  std::vector<char> in_tree(nodes, 0);
  std::vector<char> in_k(xedges, 0);
  std::vector<int> tree_nodes{x.face_count};
  in_tree[x.face_count] = 1;

  auto attach = [&](const ShortestPaths& sp, int target) {
    int node = target;
    while (!in_tree[node]) {
      const int e = sp.pred_edge[node];
      if (e < 0) throw InternalError("shortest-path tree lost a predecessor");
      in_k[e] = 1;
      in_tree[node] = 1;
      tree_nodes.push_back(node);
      node = x.edges[e].node[sp.pred_end[node]];
    }
  };

  for (;;) {
    const ShortestPaths sp = extended_dijkstra(x, tree_nodes);
    int best = -1;
    for (int n = x.face_count; n < nodes; ++n) {
      if (in_tree[n] || sp.dist[n] >= kInfinity) continue;
      if (best < 0 || sp.dist[n] < sp.dist[best]) best = n;
    }
    if (best < 0) break;
    attach(sp, best);
  }
  for (int n = x.face_count; n < nodes; ++n) {
    if (!in_tree[n]) throw InternalError("terminal unreachable in the extended dual");
  }

  if (faces.genus > 0) {
    const ShortestPaths sp = extended_dijkstra(x, tree_nodes);
    std::vector<int> order(nodes);
    std::iota(order.begin(), order.end(), 0);
    for (int n : order) {
      if (!in_tree[n]) attach(sp, n);
    }
    // faces of the extended dual, as classes of G flags
    const GMap map = to_gmap(graph);
    UnionFind xf(map.flag_count());
    for (int f = 0; f < map.flag_count(); ++f) {
      xf.unite(f, map.alpha[2][f]);
      if (!graph.is_terminal(graph.dart_vertex(flag_dart(f)))) xf.unite(f, map.alpha[1][f]);
    }
    auto dual_ends = [&](int e) -> std::pair<int, int> {
      const ExtendedDual::XEdge& xe = x.edges[e];
      if (xe.gedge >= 0) return {4 * xe.gedge, map.alpha[0][4 * xe.gedge]};
      return {xe.corner, map.alpha[1][xe.corner]};
    };
    std::vector<int> rest;
    for (int e = 0; e < xedges; ++e) {
      if (!in_k[e]) rest.push_back(e);
    }
    auto loop_length = [&](int e) {
      return sp.dist[x.edges[e].node[0]] + x.edges[e].weight + sp.dist[x.edges[e].node[1]];
    };
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return loop_length(a) > loop_length(b); });
    int leftovers = 0;
    for (int e : rest) {
      const auto [a, b] = dual_ends(e);
      if (!xf.unite(a, b)) {
        in_k[e] = 1;
        ++leftovers;
      }
    }
    if (leftovers != faces.genus) {
      throw InternalError("tree-cotree left " + std::to_string(leftovers) + " edges for genus " +
                          std::to_string(faces.genus));
    }
  }

  // prune non-terminal leaves
  std::vector<int> degree(nodes, 0);
  for (int e = 0; e < xedges; ++e) {
    if (!in_k[e]) continue;
    ++degree[x.edges[e].node[0]];
    ++degree[x.edges[e].node[1]];
  }
  std::vector<int> leaves;
  for (int n = 0; n < x.face_count; ++n) {
    if (degree[n] == 1) leaves.push_back(n);
  }
  while (!leaves.empty()) {
    const int n = leaves.back();
    leaves.pop_back();
    if (degree[n] != 1) continue;
    for (const ExtendedDual::Arc& arc : x.adjacency[n]) {
      if (!in_k[arc.edge]) continue;
      in_k[arc.edge] = 0;
      --degree[n];
      const int m = x.edges[arc.edge].node[1 - arc.end];
      --degree[m];
      if (!x.is_terminal_node(m) && degree[m] == 1) leaves.push_back(m);
      break;
    }
  }

  CutGraph cut;
  std::vector<int> kvertex(nodes, -1);
  auto is_kvertex = [&](int n) { return x.is_terminal_node(n) || (degree[n] > 0 && degree[n] != 2); };
  for (int n = x.face_count; n < nodes; ++n) {
    kvertex[n] = static_cast<int>(cut.vertices.size());
    cut.vertices.push_back({true, x.node_vertex[n]});
  }
  for (int n = 0; n < x.face_count; ++n) {
    if (is_kvertex(n)) {
      kvertex[n] = static_cast<int>(cut.vertices.size());
      cut.vertices.push_back({false, n});
    }
  }
  std::vector<std::array<char, 2>> used(xedges, {0, 0});
  for (const CutGraph::Vertex& v : cut.vertices) {
    const int start = v.terminal ? x.terminal_node[v.id] : v.id;
    for (const ExtendedDual::Arc& first : x.adjacency[start]) {
      if (!in_k[first.edge] || used[first.edge][first.end]) continue;
      std::vector<std::pair<int, int>> steps;
      ExtendedDual::Arc arc = first;
      int node = start;
      for (;;) {
        used[arc.edge][arc.end] = 1;
        used[arc.edge][1 - arc.end] = 1;
        steps.emplace_back(arc.edge, arc.end);
        node = x.edges[arc.edge].node[1 - arc.end];
        if (is_kvertex(node)) break;
        bool found = false;
        for (const ExtendedDual::Arc& next : x.adjacency[node]) {
          if (in_k[next.edge] && !used[next.edge][next.end]) {
            arc = next;
            found = true;
            break;
          }
        }
        if (!found) throw InternalError("cut graph chain ends at a degree-2 point");
      }
      cut.edges.push_back({kvertex[start], kvertex[node], path_curve(x, steps, start, node)});
    }
  }
  return cut;
}

CutDisk cut_to_disk(const EmbeddedGraph& graph, const FaceStructure& faces, const CutGraph& cut) {
  std::vector<Curve> curves;
  for (const auto& e : cut.edges) curves.push_back(e.curve);
  CutDisk out{build_overlay(graph, faces, curves), {}};
  const Overlay& ov = out.overlay;
  const Barycentric& sub = ov.sub;
  DiskSchema& schema = out.schema;
  const int kedges = static_cast<int>(cut.edges.size());
  schema.face_count = ov.face_count();
  schema.copy_slot.assign(kedges, {-1, -1});
  schema.glue.assign(kedges, {});
  schema.flag_copy.assign(ov.map.flag_count(), -1);
  std::vector<int> node_kvertex(sub.node_count(), -1);
  for (int i = 0; i < static_cast<int>(cut.vertices.size()); ++i) {
    const auto& v = cut.vertices[i];
    schema.kvertex_terminal.push_back(v.terminal ? v.id : -1);
    node_kvertex[v.terminal ? v.id : sub.vertex_count + sub.edge_count + v.id] = i;
  }

  if (kedges == 0) {
    if (faces.genus != 0 || cut.vertices.size() != 1) {
      throw TopologyError("an empty cut graph only cuts a sphere with one terminal");
    }
  } else {
    std::vector<char> keep(sub.map.flag_count(), 0);
    for (int f = 0; f < sub.map.flag_count(); ++f) {
      keep[f] = sub.side[f] != 2 && ov.segment_curve[sub.segment(f)] >= 0;
    }
    const GMap k = remove_edges(sub.map, keep);
    const int kfaces = face_orbits(k).count;
    const int chi = vertex_orbits(k).count - edge_orbits(k).count + kfaces;
    if (kfaces != 1 || chi != 2 - faces.genus) {
      throw TopologyError("cutting along K leaves " + std::to_string(kfaces) +
                          " faces with Euler characteristic " + std::to_string(chi));
    }
    // side classes
    UnionFind side(k.flag_count());
    for (int f = 0; f < k.flag_count(); ++f) {
      if (!k.alive(f)) continue;
      side.unite(f, k.alpha[0][f]);
      if (node_kvertex[sub.node(f)] < 0) side.unite(f, k.alpha[1][f]);
    }
    // direction of every segment along its curve
    std::vector<int> segment_from(3 * sub.gmap.flag_count(), -1);
    for (int ci = 0; ci < kedges; ++ci) {
      const Curve& c = cut.edges[ci].curve;
      std::vector<int> nodes;
      const int centre0 = sub.vertex_count + sub.edge_count;
      int face = c.start.kind == Anchor::kFace ? c.start.id : faces.flag_face[c.start.corner];
      if (c.start.kind == Anchor::kVertex) nodes.push_back(c.start.id);
      nodes.push_back(centre0 + face);
      for (const Crossing& x : c.events) {
        nodes.push_back(sub.vertex_count + x.edge);
        face = faces.flag_face[sub.gmap.alpha[2][x.flag]];
        nodes.push_back(centre0 + face);
      }
      const std::vector<int> segs = curve_segments(c, sub);
      for (std::size_t i = 0; i < segs.size(); ++i) segment_from[segs[i]] = nodes[i];
    }
    int x0 = -1;
    const int root_node =
        cut.vertices[0].terminal ? cut.vertices[0].id : sub.vertex_count + sub.edge_count + cut.vertices[0].id;
    for (int f = 0; f < k.flag_count() && x0 < 0; ++f) {
      if (k.alive(f) && sub.node(f) == root_node) x0 = f;
    }
    if (x0 < 0) throw InternalError("root of the cut graph has no incident edge");
    std::vector<int> class_copy(k.flag_count(), -1);
    std::vector<int> classes_seen(kedges, 0);
    int x = x0;
    do {
      const int cls = side.find(x);
      const int kedge = ov.segment_curve[sub.segment(x)];
      if (class_copy[cls] < 0) {
        if (classes_seen[kedge] >= 2) throw InternalError("K edge with more than two sides");
        class_copy[cls] = classes_seen[kedge]++;
      }
      DiskSchema::Slot slot{kedge, class_copy[cls], sub.node(x) == segment_from[sub.segment(x)]};
      if (schema.copy_slot[kedge][slot.copy] >= 0) throw InternalError("side visited twice");
      schema.copy_slot[kedge][slot.copy] = schema.slot_count();
      schema.slots.push_back(slot);
      int y = k.alpha[0][x];
      while (node_kvertex[sub.node(y)] < 0) {
        y = k.alpha[0][k.alpha[1][y]];
      }
      schema.corner_vertex.push_back(node_kvertex[sub.node(y)]);
      x = k.alpha[1][y];
    } while (x != x0);
    for (int e = 0; e < kedges; ++e) {
      if (schema.copy_slot[e][0] < 0 || schema.copy_slot[e][1] < 0) {
        throw InternalError("K edge " + std::to_string(e) + " misses a side on the disk boundary");
      }
    }
    for (int f = 0; f < ov.map.flag_count(); ++f) {
      if (ov.map.alive(f) && ov.flag_curve[f] >= 0) schema.flag_copy[f] = class_copy[side.find(f)];
    }
  }

  const std::vector<int>& face = ov.faces.id;
  for (int f = 0; f < ov.map.flag_count(); ++f) {
    if (!ov.map.alive(f)) continue;
    const int a0 = ov.map.alpha[0][f];
    const int a2 = ov.map.alpha[2][f];
    if (ov.flag_gedge[f] >= 0) {
      if (f < std::min({a0, a2, ov.map.alpha[0][a2]})) {
        schema.moves.push_back({face[f], face[a2], ov.flag_gedge[f], graph.edges[ov.flag_gedge[f]].weight});
      }
    } else if (f < a0) {
      schema.glue[ov.flag_curve[f]][schema.flag_copy[f]].push_back({face[f], face[a2], f});
    }
  }
  return out;
}

bool reglue_matches(const CutDisk& disk) {
  const Overlay& ov = disk.overlay;
  const DiskSchema& schema = disk.schema;
  using Adj = std::tuple<int, int, int>;
  std::vector<Adj> rebuilt;
  std::vector<Adj> expected;
  for (const auto& m : schema.moves) {
    rebuilt.emplace_back(std::min(m.a, m.b), std::max(m.a, m.b), m.gedge);
  }
  for (int k = 0; k < schema.kedge_count(); ++k) {
    std::vector<std::pair<int, int>> forward;
    std::vector<std::pair<int, int>> backward;
    for (const auto& g : schema.glue[k][0]) forward.emplace_back(g.from, g.to);
    for (const auto& g : schema.glue[k][1]) backward.emplace_back(g.to, g.from);
    std::sort(forward.begin(), forward.end());
    std::sort(backward.begin(), backward.end());
    if (forward != backward) return false;
    for (const auto& [a, b] : forward) rebuilt.emplace_back(std::min(a, b), std::max(a, b), -1 - k);
  }
  const auto& face = ov.faces.id;
  for (int f = 0; f < ov.map.flag_count(); ++f) {
    if (!ov.map.alive(f)) continue;
    const int a0 = ov.map.alpha[0][f];
    const int a2 = ov.map.alpha[2][f];
    if (f != std::min({f, a0, a2, ov.map.alpha[0][a2]})) continue;
    const int label = ov.flag_gedge[f] >= 0 ? ov.flag_gedge[f] : -1 - ov.flag_curve[f];
    expected.emplace_back(std::min(face[f], face[a2]), std::max(face[f], face[a2]), label);
  }
  std::sort(rebuilt.begin(), rebuilt.end());
  std::sort(expected.begin(), expected.end());
  return rebuilt == expected;
}

}  // namespace surfcut
