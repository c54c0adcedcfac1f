#include "surfcut/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "surfcut/error.hpp"

namespace surfcut {

namespace {

struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool separated(Components& comp, const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [a, b] : pairs)
    if (comp.find(a) == comp.find(b)) return false;
  return true;
}

class BruteForce {
 public:
  BruteForce(const EmbeddedGraph& graph) : graph_(graph), order_(graph.edge_count()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return graph.edges[a].weight > graph.edges[b].weight;
    });
    best_.resize(graph.edge_count());
    std::iota(best_.begin(), best_.end(), 0);
    for (const auto& e : graph.edges) best_weight_ += e.weight;
  }

  MulticutResult run() {
    std::vector<int> chosen;
    std::vector<int> kept;
    search(0, 0, chosen, kept);
    MulticutResult r;
    r.edges = best_;
    r.weight = best_weight_;
    return r;
  }

 private:
  // Edges decided as kept stay in the graph; once they join a pair, no
  // choice of the remaining edges can help.
  bool kept_feasible(const std::vector<int>& kept) const {
    Components comp(graph_.vertex_count);
    for (int e : kept) comp.unite(graph_.edges[e].u, graph_.edges[e].v);
    return separated(comp, graph_.pairs);
  }

  void search(std::size_t i, Weight weight, std::vector<int>& chosen, std::vector<int>& kept) {
    if (weight > best_weight_) return;
    if (!kept_feasible(kept)) return;
    if (i == order_.size()) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (weight < best_weight_ || sorted < best_) {
        best_weight_ = weight;
        best_ = std::move(sorted);
      }
      return;
    }
    const int e = order_[i];
    kept.push_back(e);
    search(i + 1, weight, chosen, kept);
    kept.pop_back();
    chosen.push_back(e);
    search(i + 1, weight + graph_.edges[e].weight, chosen, kept);
    chosen.pop_back();
  }

  const EmbeddedGraph& graph_;
  std::vector<int> order_;
  std::vector<int> best_;
  Weight best_weight_ = 0;
};

class Dinic {
 public:
  explicit Dinic(int n) : adj_(n), level_(n), next_(n) {}

  void add_undirected(int a, int b, Weight cap) {
    adj_[a].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({b, cap});
    adj_[b].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({a, cap});
  }

  Weight run(int s, int t) {
    Weight flow = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Weight pushed = dfs(s, t, kInfinity)) flow += pushed;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    Weight cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop();
      for (int a : adj_[x]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Weight dfs(int x, int t, Weight limit) {
    if (x == t) return limit;
    for (int& i = next_[x]; i < static_cast<int>(adj_[x].size()); ++i) {
      Arc& arc = arcs_[adj_[x][i]];
      if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1) continue;
      Weight pushed = dfs(arc.to, t, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        arcs_[adj_[x][i] ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

bool is_multicut(const EmbeddedGraph& graph, const std::vector<std::pair<int, int>>& pairs,
                 const std::vector<int>& edges) {
  std::vector<char> cut(graph.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= graph.edge_count()) throw InputError("unknown edge id " + std::to_string(e));
    cut[e] = 1;
  }
  Components comp(graph.vertex_count);
  for (int e = 0; e < graph.edge_count(); ++e)
    if (!cut[e]) comp.unite(graph.edges[e].u, graph.edges[e].v);
  return separated(comp, pairs);
}

MulticutResult brute_force_multicut(const EmbeddedGraph& graph, int max_edges) {
  if (graph.edge_count() > max_edges)
    throw ResourceError("brute force is limited to " + std::to_string(max_edges) + " edges");
  if (graph.pairs.empty()) return {};
  return BruteForce(graph).run();
}

Weight max_flow_min_cut(const EmbeddedGraph& graph, int s, int t) {
  if (s == t) throw InputError("source and sink coincide");
  Dinic flow(graph.vertex_count);
  for (const auto& e : graph.edges)
    if (e.u != e.v) flow.add_undirected(e.u, e.v, e.weight);
  return flow.run(s, t);
}

MulticutDual dual_of_multicut(const EmbeddedGraph& graph, const FaceStructure& faces,
                              const std::vector<int>& edges) {
  if (!is_multicut(graph, graph.pairs, edges)) throw InputError("edge set is not a multicut");
  MulticutDual dual;
  dual.edges = edges;
  std::sort(dual.edges.begin(), dual.edges.end());
  dual.edges.erase(std::unique(dual.edges.begin(), dual.edges.end()), dual.edges.end());
  for (int e : dual.edges) {
    const int f0 = dart_flag(2 * e, 0), f1 = dart_flag(2 * e, 1);
    Curve c;
    c.start = {Anchor::kFace, faces.flag_face[f0]};
    c.end = {Anchor::kFace, faces.flag_face[f1]};
    c.events = {{e, f0, 0}};
    dual.length += curve_length(c, graph, faces);
    dual.curves.push_back(std::move(c));
  }

  // Faces of the dual map are the vertices of G. Merge them across every
  // dual edge that is not part of the multicut dual.
  const GMap star = dual_map(to_gmap(graph));
  const Orbits star_faces = face_orbits(star);
  const int nf = star_faces.count;
  std::vector<char> in_dual(graph.edge_count(), 0);
  for (int e : dual.edges) in_dual[e] = 1;
  Components regions(nf);
  for (int f = 0; f < star.flag_count(); ++f) {
    if (!in_dual[flag_edge(f)]) regions.unite(star_faces.id[f], star_faces.id[star.alpha[2][f]]);
  }
  std::vector<int> root(graph.vertex_count, -1);
  for (int f = 0; f < star.flag_count(); ++f)
    root[graph.dart_vertex(flag_dart(f))] = regions.find(star_faces.id[f]);
  std::vector<int> label(nf, -1);
  int next = 0;
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (root[v] < 0) throw InputError("vertex " + std::to_string(v) + " has no incident edge");
    if (label[root[v]] < 0) label[root[v]] = next++;
    dual.vertex_region.push_back(label[root[v]]);
  }
  for (const auto& [a, b] : graph.pairs)
    if (dual.vertex_region[a] == dual.vertex_region[b])
      throw InternalError("multicut dual does not separate a pair");
  return dual;
}

}  // namespace surfcut
