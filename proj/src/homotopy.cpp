#include "surfcut/homotopy.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "surfcut/error.hpp"

namespace surfcut {

namespace {

Weight add(Weight a, Weight b) { return (a >= kInfinity || b >= kInfinity) ? kInfinity : a + b; }

SequenceEntry entry_of(const DiskSchema& schema, const BoundaryLayout& layout, int point) {
  const auto& slot = schema.slots[layout.point_slot[point]];
  return {slot.kedge, slot.copy};
}

}  // namespace

std::vector<Chain> crossing_sequences(const Topology& top, const DiskSchema& schema) {
  TopologyParts parts;
  if (!split_parts(top, parts)) throw TopologyError("topology interior is not a forest of trees and arcs");
  BoundaryLayout layout(schema, top.count);
  const int n = layout.size();
  std::vector<char> seen(n, 0);
  std::vector<Chain> chains;
  auto is_leaf = [&](int q) { return parts.point_neighbour[q] >= n; };

  for (int p = 0; p < n; ++p) {
    if (seen[p] || !is_leaf(p)) continue;
    Chain chain;
    chain.from_point = p;
    chain.from_node = parts.point_neighbour[p];
    int q = p;
    while (true) {
      seen[q] = 1;
      chain.sequence.push_back(entry_of(schema, layout, q));
      int r = layout.partner[q];
      seen[r] = 1;
      if (is_leaf(r)) {
        chain.to_point = r;
        chain.to_node = parts.point_neighbour[r];
        break;
      }
      q = parts.point_neighbour[r];
    }
    chains.push_back(std::move(chain));
  }

  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    Chain chain;
    chain.closed = true;
    chain.from_point = chain.to_point = p;
    seen[p] = 1;
    int q = parts.point_neighbour[p];
    while (true) {
      seen[q] = 1;
      chain.sequence.push_back(entry_of(schema, layout, q));
      int r = layout.partner[q];
      if (r == p) break;
      if (is_leaf(r)) throw InternalError("closed chain reached a tree leaf");
      seen[r] = 1;
      q = parts.point_neighbour[r];
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

DiskGraph::DiskGraph(const DiskSchema& schema) : face_count(schema.face_count) {
  adjacency.assign(face_count, {});
  for (const auto& m : schema.moves) {
    adjacency[m.a].push_back({m.b, m.gedge, m.weight});
    adjacency[m.b].push_back({m.a, m.gedge, m.weight});
  }
}

LiftedSpace build_lifted_space(const DiskSchema& schema, const Overlay& overlay,
                               const CrossingSequence& seq) {
  if (static_cast<int>(schema.flag_copy.size()) != overlay.map.flag_count())
    throw InputError("schema and overlay do not match");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& e = seq[i];
    if (e.kedge < 0 || e.kedge >= schema.kedge_count() || (e.copy != 0 && e.copy != 1))
      throw SequenceError("sequence entry " + std::to_string(i) + " names no side of the disk");
    if (schema.glue[e.kedge][e.copy].empty())
      throw SequenceError("sequence entry " + std::to_string(i) + " names a side with no gluing");
  }
  LiftedSpace lift;
  lift.schema = &schema;
  lift.overlay = &overlay;
  lift.sequence = seq;
  lift.disk = std::make_shared<DiskGraph>(schema);
  return lift;
}

HomotopicPath shortest_homotopic_path(const LiftedSpace& lift, int src, int dst) {
  const int F = lift.face_count();
  if (src < 0 || src >= F || dst < 0 || dst >= F) throw InputError("face out of range");
  const int total = lift.node_count();
  using Label = std::pair<Weight, int>;
  const Label unreached{kInfinity, 0};
  std::vector<Label> dist(total, unreached);
  // predecessor node and how it was reached: G edge id or -(flag+1) for a gluing
  std::vector<int> pred(total, -1), via(total, 0);
  using Item = std::tuple<Weight, int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  const int start = lift.node(0, src);
  dist[start] = {0, 0};
  heap.emplace(0, 0, start);
  while (!heap.empty()) {
    auto [w, c, x] = heap.top();
    heap.pop();
    if (Label{w, c} != dist[x]) continue;
    int layer = x / F, face = x % F;
    auto relax = [&](int y, Label label, int how) {
      if (label < dist[y]) {
        dist[y] = label;
        pred[y] = x;
        via[y] = how;
        heap.emplace(label.first, label.second, y);
      }
    };
    for (const auto& s : lift.disk->adjacency[face])
      relax(lift.node(layer, s.to), {w + s.weight, c}, s.gedge);
    if (layer + 1 < lift.copy_count()) {
      const auto& e = lift.sequence[layer];
      for (const auto& g : lift.schema->glue[e.kedge][e.copy])
        if (g.from == face) relax(lift.node(layer + 1, g.to), {w, c + 1}, -(g.flag + 1));
    }
  }
  const int goal = lift.node(lift.copy_count() - 1, dst);
  if (dist[goal].first >= kInfinity) throw InternalError("lifted space is disconnected");

  HomotopicPath path;
  path.weight = dist[goal].first;
  path.crossings = dist[goal].second;
  for (int y = goal; y != -1; y = pred[y]) path.nodes.push_back(y);
  std::reverse(path.nodes.begin(), path.nodes.end());
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    int how = via[path.nodes[i]];
    if (how >= 0) {
      path.gedges.push_back(how);
    } else {
      int flag = -how - 1;
      path.projected.push_back({lift.overlay->flag_curve[flag], lift.schema->flag_copy[flag]});
    }
  }
  return path;
}

DiskMetric::DiskMetric(const DiskSchema& schema) : schema_(&schema), faces_(schema.face_count) {
  DiskGraph disk(schema);
  within_.assign(static_cast<std::size_t>(faces_) * faces_, kInfinity);
  using Item = std::pair<Weight, int>;
  for (int s = 0; s < faces_; ++s) {
    Weight* row = &within_[static_cast<std::size_t>(s) * faces_];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      auto [w, x] = heap.top();
      heap.pop();
      if (w != row[x]) continue;
      for (const auto& st : disk.adjacency[x]) {
        if (w + st.weight < row[st.to]) {
          row[st.to] = w + st.weight;
          heap.emplace(row[st.to], st.to);
        }
      }
    }
  }
}

DiskMetric::Matrix DiskMetric::compose(const CrossingSequence& seq) const {
  const std::size_t F = faces_;
  Matrix cur = within_;
  for (const auto& e : seq) {
    if (e.kedge < 0 || e.kedge >= schema_->kedge_count() || (e.copy != 0 && e.copy != 1))
      throw SequenceError("sequence names no side of the disk");
    const auto& glue = schema_->glue[e.kedge][e.copy];
    if (glue.empty()) throw SequenceError("sequence names a side with no gluing");
    std::vector<int> targets;
    for (const auto& g : glue) targets.push_back(g.to);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const std::size_t T = targets.size();
    std::vector<Weight> entry(F * T, kInfinity);
    for (const auto& g : glue) {
      std::size_t ti = std::lower_bound(targets.begin(), targets.end(), g.to) - targets.begin();
      for (std::size_t s = 0; s < F; ++s)
        entry[s * T + ti] = std::min(entry[s * T + ti], cur[s * F + g.from]);
    }
    Matrix next(F * F, kInfinity);
    for (std::size_t s = 0; s < F; ++s) {
      Weight* out = &next[s * F];
      for (std::size_t ti = 0; ti < T; ++ti) {
        Weight base = entry[s * T + ti];
        if (base >= kInfinity) continue;
        const Weight* row = &within_[static_cast<std::size_t>(targets[ti]) * F];
        for (std::size_t y = 0; y < F; ++y) out[y] = std::min(out[y], add(base, row[y]));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::shared_ptr<const DiskMetric::Matrix> DiskMetric::costs(const CrossingSequence& seq) {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(seq);
    if (it != cache_.end()) return it->second;
  }
  auto matrix = std::make_shared<const Matrix>(compose(seq));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(seq, matrix);
  return it->second;
}

std::size_t DiskMetric::cached() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

}  // namespace surfcut
