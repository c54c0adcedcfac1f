#include "surfcut/dp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "surfcut/error.hpp"

namespace surfcut {

namespace {

Weight add(Weight a, Weight b) { return (a >= kInfinity || b >= kInfinity) ? kInfinity : a + b; }

// Smallest boundary point reachable from y without passing through x.
int min_point_behind(const std::vector<std::vector<int>>& adj, int points, int x, int y) {
  int best = points;
  std::vector<std::pair<int, int>> stack{{y, x}};
  while (!stack.empty()) {
    auto [node, parent] = stack.back();
    stack.pop_back();
    if (node < points) {
      best = std::min(best, node);
      continue;
    }
    for (int z : adj[node])
      if (z != parent) stack.emplace_back(z, node);
  }
  return best;
}

std::vector<std::uint32_t> neighbour_masks(const AbstractDualGraph& c) {
  std::vector<std::uint32_t> mask(c.vertex_count, 0);
  for (const auto& e : c.edges) {
    if (e.loop()) continue;
    mask[e.u] |= std::uint32_t{1} << e.v;
    mask[e.v] |= std::uint32_t{1} << e.u;
  }
  return mask;
}

std::vector<std::vector<int>> neighbour_lists(const AbstractDualGraph& c) {
  std::vector<std::vector<int>> adj(c.vertex_count);
  for (const auto& e : c.edges) {
    if (e.loop()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

// Vertices of `placed` that still have a neighbour outside it.
int open_count(const std::vector<std::vector<int>>& adj, const std::vector<char>& placed) {
  int count = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (!placed[u]) continue;
    for (int w : adj[u]) {
      if (!placed[w]) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<int> greedy_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> placed(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_open = 0;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      placed[v] = 1;
      int open = open_count(adj, placed);
      placed[v] = 0;
      if (best < 0 || open < best_open) best = v, best_open = open;
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

class OrderSearch {
 public:
  OrderSearch(const AbstractDualGraph& c, std::vector<int> initial, int initial_width)
      : n_(c.vertex_count), mask_(neighbour_masks(c)), best_(initial_width), best_order_(std::move(initial)) {}

  std::vector<int> run() {
    std::vector<int> order;
    search(0, 0, order);
    return best_order_;
  }

 private:
  int open(std::uint32_t placed) const {
    std::uint32_t outside = ~placed & full();
    int count = 0;
    for (int u = 0; u < n_; ++u)
      if ((placed >> u & 1) && (mask_[u] & outside)) ++count;
    return count;
  }
  std::uint32_t full() const { return n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1; }

  void search(std::uint32_t placed, int width, std::vector<int>& order) {
    if (placed == full()) {
      if (width < best_) {
        best_ = width;
        best_order_ = order;
      }
      return;
    }
    auto it = seen_.find(placed);
    if (it != seen_.end() && it->second <= width) return;
    seen_[placed] = width;
    const int w = std::max(width, open(placed));
    if (w >= best_) return;
    for (int v = 0; v < n_; ++v) {
      if (placed >> v & 1) continue;
      order.push_back(v);
      search(placed | std::uint32_t{1} << v, w, order);
      order.pop_back();
    }
  }

  int n_;
  std::vector<std::uint32_t> mask_;
  int best_;
  std::vector<int> best_order_;
  std::unordered_map<std::uint32_t, int> seen_;
};

std::vector<std::vector<int>> bags_of(const std::vector<std::vector<int>>& adj,
                                      const std::vector<int>& order) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<int>> bags;
  for (int i = 0; i < n; ++i) {
    std::vector<int> bag{order[i]};
    for (int j = 0; j < i; ++j) {
      int u = order[j];
      bool open = false;
      for (int w : adj[u]) open |= pos[w] >= i;
      if (open) bag.push_back(u);
    }
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
  }
  return bags;
}

struct EdgeCosts {
  std::vector<std::shared_ptr<const DiskMetric::Matrix>> matrix;
  Weight lower_bound = 0;
};

EdgeCosts edge_costs(const AbstractDualGraph& c, DiskMetric& metric) {
  EdgeCosts costs;
  const std::size_t F = metric.face_count();
  for (const auto& e : c.edges) {
    auto m = e.sequence.empty() ? nullptr : metric.costs(e.sequence);
    const auto& mat = m ? *m : metric.within();
    Weight low = kInfinity;
    if (e.loop()) {
      for (std::size_t f = 0; f < F; ++f) low = std::min(low, mat[f * F + f]);
    } else {
      for (Weight w : mat) low = std::min(low, w);
    }
    costs.lower_bound = add(costs.lower_bound, low);
    costs.matrix.push_back(std::move(m));
  }
  return costs;
}

const DiskMetric::Matrix& matrix_of(const EdgeCosts& costs, const DiskMetric& metric, int e) {
  return costs.matrix[e] ? *costs.matrix[e] : metric.within();
}

void attach_witnesses(const AbstractDualGraph& c, const CutDisk& disk, const EdgeCosts& costs,
                      const DiskMetric& metric, TopologySolution& sol) {
  const std::size_t F = metric.face_count();
  Weight total = 0;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    const auto lift = build_lifted_space(disk.schema, disk.overlay, e.sequence);
    auto path = shortest_homotopic_path(lift, sol.placement[e.u], sol.placement[e.v]);
    const Weight expected = matrix_of(costs, metric, static_cast<int>(i))[sol.placement[e.u] * F + sol.placement[e.v]];
    if (path.weight != expected || path.projected != e.sequence)
      throw InternalError("witness path disagrees with its cost matrix");
    total += path.weight;
    sol.gedges.insert(sol.gedges.end(), path.gedges.begin(), path.gedges.end());
    sol.witnesses.push_back(std::move(path));
  }
  if (total != sol.weight) throw InternalError("witness paths do not add up to the drawing cost");
  std::sort(sol.gedges.begin(), sol.gedges.end());
}

}  // namespace

AbstractDualGraph abstract_graph(const Topology& top, const DiskSchema& schema) {
  const auto chains = crossing_sequences(top, schema);
  const int points = top.point_count();
  AbstractDualGraph c;
  c.vertex_count = top.internal_count;
  for (int i = 0; i < top.internal_count; ++i) c.vertex_node.push_back(points + i);

  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& ch = chains[i];
    AbstractDualGraph::Edge e;
    e.chain = static_cast<int>(i);
    e.sequence = ch.sequence;
    if (ch.closed) {
      e.u = e.v = c.vertex_count++;
      c.vertex_node.push_back(-1);
    } else {
      e.u = ch.from_node - points;
      e.v = ch.to_node - points;
    }
    c.edges.push_back(std::move(e));
  }
  std::map<std::pair<int, int>, int> tree_edge;
  for (const auto& [a, b] : top.edges) {
    if (a >= points && b >= points) {
      tree_edge[{std::min(a, b), std::max(a, b)}] = static_cast<int>(c.edges.size());
      c.edges.push_back({a - points, b - points, -1, {}});
    }
  }

  std::vector<std::vector<int>> adj(top.node_count());
  for (const auto& [a, b] : top.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, AbstractDualGraph::End> end_at_point;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].closed) continue;
    end_at_point[chains[i].from_point] = {static_cast<int>(i), 0};
    end_at_point[chains[i].to_point] = {static_cast<int>(i), 1};
  }
  c.rotation.assign(c.vertex_count, {});
  for (int v = 0; v < top.internal_count; ++v) {
    const int x = points + v;
    std::vector<std::pair<int, AbstractDualGraph::End>> around;
    for (int y : adj[x]) {
      AbstractDualGraph::End end;
      if (y < points) {
        end = end_at_point.at(y);
      } else {
        end.edge = tree_edge.at({std::min(x, y), std::max(x, y)});
        end.side = c.edges[end.edge].u == v ? 0 : 1;
      }
      around.emplace_back(min_point_behind(adj, points, x, y), end);
    }
    std::sort(around.begin(), around.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, end] : around) c.rotation[v].push_back(end);
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    if (e.u >= top.internal_count) c.rotation[e.u] = {{static_cast<int>(i), 0}, {static_cast<int>(i), 1}};
  }
  return c;
}

PathDecomposition path_decomposition(const AbstractDualGraph& c) {
  const auto adj = neighbour_lists(c);
  PathDecomposition pd;
  pd.order = greedy_order(adj);
  auto width_of = [&](const std::vector<int>& order) {
    int w = 0;
    for (const auto& bag : bags_of(adj, order)) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
  };
  if (c.vertex_count <= 32) {
    OrderSearch search(c, pd.order, width_of(pd.order));
    pd.order = search.run();
    pd.exact = true;
  }
  pd.bags = bags_of(adj, pd.order);
  pd.width = width_of(pd.order);
  return pd;
}

bool is_path_decomposition(const AbstractDualGraph& c, const PathDecomposition& pd) {
  const int n = c.vertex_count;
  std::vector<int> first(n, -1), last(n, -1), hits(n, 0);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    for (int v : pd.bags[i]) {
      if (v < 0 || v >= n) return false;
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++hits[v];
    }
  }
  for (int v = 0; v < n; ++v)
    if (first[v] < 0 || hits[v] != last[v] - first[v] + 1) return false;
  for (const auto& e : c.edges) {
    if (std::max(first[e.u], first[e.v]) > std::min(last[e.u], last[e.v])) return false;
  }
  int w = 0;
  for (const auto& bag : pd.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w == pd.width;
}

TopologySolution solve_topology(const AbstractDualGraph& c, const PathDecomposition& pd,
                                const CutDisk& disk, DiskMetric& metric, const DpOptions& options) {
  TopologySolution sol;
  const EdgeCosts costs = edge_costs(c, metric);
  if (costs.lower_bound > options.cutoff) return sol;
  const int n = c.vertex_count;
  const std::int64_t F = metric.face_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[pd.order[i]] = i;
  // last position among each vertex's neighbours
  std::vector<int> reach(n);
  for (int v = 0; v < n; ++v) reach[v] = pos[v];
  for (const auto& e : c.edges) {
    reach[e.u] = std::max(reach[e.u], pos[e.v]);
    reach[e.v] = std::max(reach[e.v], pos[e.u]);
  }

  struct Forget {
    std::vector<int> bag;
    std::vector<Weight> table;
    int slot;
  };
  std::vector<Forget> forgets;
  std::vector<int> bag;
  std::vector<Weight> table{0};

  for (int i = 0; i < n; ++i) {
    const int v = pd.order[i];
    if (static_cast<double>(table.size()) * F > static_cast<double>(options.max_table))
      throw ResourceError("dynamic programming table exceeds " + std::to_string(options.max_table) + " entries");
    std::vector<Weight> unary(F, 0);
    std::vector<std::pair<int, int>> links;  // (edge, bag slot of the other end)
    for (int ei = 0; ei < static_cast<int>(c.edges.size()); ++ei) {
      const auto& e = c.edges[ei];
      const auto& mat = matrix_of(costs, metric, ei);
      if (e.loop() && e.u == v) {
        for (std::int64_t f = 0; f < F; ++f) unary[f] = add(unary[f], mat[f * F + f]);
        continue;
      }
      int other = e.u == v ? e.v : (e.v == v ? e.u : -1);
      if (other < 0 || pos[other] > i) continue;
      links.emplace_back(ei, static_cast<int>(std::find(bag.begin(), bag.end(), other) - bag.begin()));
    }
    const int width = static_cast<int>(bag.size());
    std::vector<Weight> next(table.size() * F, kInfinity);
    std::vector<int> assign(width);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      if (table[idx] >= kInfinity) continue;
      std::size_t rest = idx;
      for (int j = width - 1; j >= 0; --j) {
        assign[j] = static_cast<int>(rest % F);
        rest /= F;
      }
      for (std::int64_t f = 0; f < F; ++f) {
        Weight w = add(table[idx], unary[f]);
        for (const auto& [ei, slot] : links) {
          const auto& e = c.edges[ei];
          const auto& mat = matrix_of(costs, metric, ei);
          std::int64_t fu = e.u == v ? f : assign[slot];
          std::int64_t fv = e.v == v ? f : assign[slot];
          w = add(w, mat[fu * F + fv]);
        }
        next[idx * F + f] = w;
      }
    }
    sol.states += static_cast<std::int64_t>(next.size());
    bag.push_back(v);
    table = std::move(next);

    for (int slot = static_cast<int>(bag.size()) - 1; slot >= 0; --slot) {
      if (reach[bag[slot]] > i) continue;
      std::size_t stride = 1;
      for (int j = static_cast<int>(bag.size()) - 1; j > slot; --j) stride *= F;
      std::vector<Weight> reduced(table.size() / F, kInfinity);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t low = idx % stride, high = idx / (stride * F);
        auto& r = reduced[high * stride + low];
        r = std::min(r, table[idx]);
      }
      forgets.push_back({bag, std::move(table), slot});
      bag.erase(bag.begin() + slot);
      table = std::move(reduced);
    }
  }
  sol.weight = table.empty() ? kInfinity : table[0];
  if (sol.weight >= kInfinity) throw InternalError("no finite drawing for a topology");

  sol.placement.assign(n, -1);
  for (auto it = forgets.rbegin(); it != forgets.rend(); ++it) {
    const int len = static_cast<int>(it->bag.size());
    std::size_t base = 0, stride = 0, scale = 1;
    for (int j = len - 1; j >= 0; --j, scale *= F) {
      if (j == it->slot) {
        stride = scale;
      } else {
        base += sol.placement[it->bag[j]] * scale;
      }
    }
    int best = -1;
    for (std::int64_t f = 0; f < F; ++f) {
      Weight w = it->table[base + f * stride];
      if (best < 0 || w < it->table[base + best * stride]) best = static_cast<int>(f);
    }
    sol.placement[it->bag[it->slot]] = best;
  }
  attach_witnesses(c, disk, costs, metric, sol);
  return sol;
}

TopologySolution naive_solve_topology(const AbstractDualGraph& c, const CutDisk& disk,
                                      DiskMetric& metric) {
  const int n = c.vertex_count;
  const int F = metric.face_count();
  if (n > 4) throw ResourceError("naive placement is limited to 4 vertices");
  if (F > 200) throw ResourceError("naive placement is limited to 200 faces");
  const EdgeCosts costs = edge_costs(c, metric);
  TopologySolution sol;
  std::vector<int> place(n, 0);
  while (true) {
    Weight w = 0;
    for (int ei = 0; ei < static_cast<int>(c.edges.size()); ++ei) {
      const auto& e = c.edges[ei];
      w = add(w, matrix_of(costs, metric, ei)[static_cast<std::size_t>(place[e.u]) * F + place[e.v]]);
    }
    ++sol.states;
    if (w < sol.weight) {
      sol.weight = w;
      sol.placement = place;
    }
    int j = n - 1;
    while (j >= 0 && ++place[j] == F) place[j--] = 0;
    if (j < 0) break;
  }
  if (sol.weight >= kInfinity) throw InternalError("no finite drawing for a topology");
  attach_witnesses(c, disk, costs, metric, sol);
  return sol;
}

}  // namespace surfcut
