#include "surfcut/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

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
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  // a and b interleave iff some element of b lies strictly between two
  // consecutive elements of a and some other element of b lies outside
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int lo = a[i];
    const int hi = a[(i + 1) % a.size()];
    int inside = 0;
    for (int x : b) {
      const bool in = lo < hi ? (x > lo && x < hi) : (x > lo || x < hi);
      inside += in ? 1 : 0;
    }
    if (inside > 0 && inside < static_cast<int>(b.size())) return true;
  }
  return false;
}

// Chains of a partition: classes of boundary points linked by gluing and
// by arcs. A class without tree points is a closed cycle of arcs.
struct PartitionChains {
  std::vector<std::vector<int>> members;
  std::vector<char> closed;
};

PartitionChains partition_chains(const BoundaryLayout& layout, const std::vector<int>& point_block,
                                 const std::vector<std::vector<int>>& blocks) {
  const int n = layout.size();
  UnionFind uf(n);
  for (int q = 0; q < n; ++q) uf.unite(q, layout.partner[q]);
  for (const auto& b : blocks) {
    if (b.size() == 2) uf.unite(b[0], b[1]);
  }
  PartitionChains out;
  std::vector<int> index(n, -1);
  for (int q = 0; q < n; ++q) {
    const int r = uf.find(q);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.members.size());
      out.members.emplace_back();
      out.closed.push_back(1);
    }
    out.members[index[r]].push_back(q);
    if (blocks[point_block[q]].size() != 2) out.closed[index[r]] = 0;
  }
  return out;
}

std::int64_t catalan(int n) {
  if (n <= 0) return 1;
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Recursively generates non-crossing partitions of 0..n-1 into blocks of
// size >= 2, arcs joining different slots.
class PartitionGenerator {
 public:
  PartitionGenerator(const BoundaryLayout& layout,
                     std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&)> visit)
      : layout_(layout), visit_(std::move(visit)), n_(layout.size()), point_block_(n_, -1) {}

  void run() { step(0); }

 private:
  void step(int q) {
    if (q == n_) {
      if (open_.empty()) visit_(point_block_, blocks_);
      return;
    }
    // open a new block, unless there is no point left to close it
    if (n_ - q >= 2 + static_cast<int>(open_.size())) {
      const int b = static_cast<int>(blocks_.size());
      blocks_.push_back({q});
      point_block_[q] = b;
      open_.push_back(b);
      step(q + 1);
      open_.pop_back();
      blocks_.pop_back();
    }
    if (!open_.empty()) {
      const int b = open_.back();
      // join the top block and keep it open
      if (n_ - q >= 1 + static_cast<int>(open_.size())) {
        blocks_[b].push_back(q);
        point_block_[q] = b;
        step(q + 1);
        blocks_[b].pop_back();
      }
      // join and close
      const bool arc = blocks_[b].size() == 1;
      if (!arc || layout_.point_slot[blocks_[b][0]] != layout_.point_slot[q]) {
        blocks_[b].push_back(q);
        point_block_[q] = b;
        open_.pop_back();
        step(q + 1);
        open_.push_back(b);
        blocks_[b].pop_back();
      }
    }
    point_block_[q] = -1;
  }

  const BoundaryLayout& layout_;
  std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&)> visit_;
  int n_;
  std::vector<int> point_block_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> open_;
};

// Count vectors with entries in [0, cap] summing to `total`, lexicographic.
void for_each_count(int kedges, int total, int cap,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> count(kedges, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == kedges - 1) {
      if (left <= cap) {
        count[i] = left;
        visit(count);
      }
      return;
    }
    for (int m = 0; m <= std::min(cap, left); ++m) {
      count[i] = m;
      rec(i + 1, left - m);
    }
  };
  if (kedges == 0) {
    if (total == 0) visit(count);
    return;
  }
  rec(0, total);
}

struct PartitionSummary {
  int tree_edges = 0;
  int vertices = 0;
};

PartitionSummary summarize(const BoundaryLayout& layout, const std::vector<int>& point_block,
                           const std::vector<std::vector<int>>& blocks) {
  PartitionSummary s;
  for (const auto& b : blocks) {
    const int k = static_cast<int>(b.size());
    if (k >= 3) {
      s.tree_edges += 2 * k - 3;
      s.vertices += k - 2;
    }
  }
  const PartitionChains chains = partition_chains(layout, point_block, blocks);
  for (char c : chains.closed) s.vertices += c ? 1 : 0;
  return s;
}

void emit_shapes(const std::vector<int>& count, const std::vector<std::vector<int>>& blocks,
                 int points, const std::function<void(const Topology&)>& emit,
                 EnumerationStats* stats) {
  std::vector<std::vector<std::vector<std::pair<int, int>>>> options;
  for (const auto& b : blocks) options.push_back(binary_shapes(static_cast<int>(b.size())));
  std::vector<std::size_t> choice(blocks.size(), 0);
  for (;;) {
    Topology top;
    top.count = count;
    int next_internal = points;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const int k = static_cast<int>(blocks[i].size());
      const auto& shape = options[i][choice[i]];
      auto node = [&](int local) { return local < k ? blocks[i][local] : next_internal + local - k; };
      for (const auto& [a, b] : shape) top.edges.emplace_back(node(a), node(b));
      next_internal += std::max(0, k - 2);
    }
    top.internal_count = next_internal - points;
    if (stats) ++stats->enumerated;
    emit(top);
    std::size_t i = blocks.size();
    while (i > 0) {
      --i;
      if (++choice[i] < options[i].size()) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (blocks.empty()) return;
  }
}

void enumerate_partitions(
    const DiskSchema& schema, const Bounds& bounds,
    const std::function<void(const std::vector<int>&, const BoundaryLayout&,
                             const std::vector<int>&, const std::vector<std::vector<int>>&)>& visit) {
  const int kedges = schema.kedge_count();
  for (int half = 0; 2 * half <= bounds.points; ++half) {
    for_each_count(kedges, half, bounds.cross, [&](const std::vector<int>& count) {
      const BoundaryLayout layout(schema, count);
      PartitionGenerator gen(layout, [&](const std::vector<int>& pb,
                                         const std::vector<std::vector<int>>& blocks) {
        visit(count, layout, pb, blocks);
      });
      gen.run();
    });
  }
}

}  // namespace

Bounds Bounds::from_constants(int c_tree, int c_cross, int c_vert, int c_points, int genus,
                              int terminals) {
  if (c_tree < 1 || c_cross < 1 || c_vert < 1 || c_points < 1) {
    throw InputError("bound multipliers must be at least 1");
  }
  const int gt = std::max(1, genus + terminals);
  Bounds b;
  b.tree = c_tree * std::max(3 * gt, 6);
  b.cross = c_cross * gt;
  b.vert = c_vert * gt;
  b.points = c_points * gt;
  return b;
}

int Topology::point_count() const {
  return 2 * std::accumulate(count.begin(), count.end(), 0);
}

BoundaryLayout::BoundaryLayout(const DiskSchema& schema, const std::vector<int>& count) {
  if (static_cast<int>(count.size()) != schema.kedge_count()) {
    throw TopologyError("topology has counts for " + std::to_string(count.size()) +
                        " K edges, schema has " + std::to_string(schema.kedge_count()));
  }
  const int slots = schema.slot_count();
  slot_first.resize(slots + 1, 0);
  for (int s = 0; s < slots; ++s) slot_first[s + 1] = slot_first[s] + count[schema.slots[s].kedge];
  const int n = slot_first[slots];
  point_slot.resize(n);
  point_rank.resize(n);
  partner.resize(n);
  for (int s = 0; s < slots; ++s) {
    for (int r = 0; r < slot_first[s + 1] - slot_first[s]; ++r) {
      point_slot[slot_first[s] + r] = s;
      point_rank[slot_first[s] + r] = r;
    }
  }
  for (int q = 0; q < n; ++q) {
    const auto& slot = schema.slots[point_slot[q]];
    const int m = count[slot.kedge];
    const int pos = slot.forward ? point_rank[q] : m - 1 - point_rank[q];
    const int other = schema.copy_slot[slot.kedge][1 - slot.copy];
    const int rank = schema.slots[other].forward ? pos : m - 1 - pos;
    partner[q] = slot_first[other] + rank;
  }
}

bool split_parts(const Topology& top, TopologyParts& parts) {
  const int n = top.point_count();
  const int nodes = top.node_count();
  std::vector<std::vector<int>> adj(nodes);
  for (const auto& [a, b] : top.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  parts = TopologyParts{};
  parts.point_block.assign(n, -1);
  parts.point_neighbour.assign(n, -1);
  for (int q = 0; q < n; ++q) {
    if (adj[q].size() != 1) return false;
    parts.point_neighbour[q] = adj[q][0];
  }
  for (int v = n; v < nodes; ++v) {
    if (adj[v].size() < 2) return false;
  }
  std::vector<int> comp(nodes, -1);
  for (int start = 0; start < nodes; ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(parts.blocks.size());
    std::vector<int> stack{start};
    comp[start] = id;
    int vertex_total = 0;
    int degree_total = 0;
    std::vector<int> leaves;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++vertex_total;
      degree_total += static_cast<int>(adj[x].size());
      if (x < n) leaves.push_back(x);
      for (int y : adj[x]) {
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    if (degree_total / 2 != vertex_total - 1) return false;  // not a tree
    if (leaves.size() < 2) return false;
    std::sort(leaves.begin(), leaves.end());
    if (vertex_total > 2) parts.tree_edges += vertex_total - 1;
    for (int q : leaves) parts.point_block[q] = id;
    parts.blocks.push_back(leaves);
    // every tree edge must split the leaves into two cyclic intervals
    if (vertex_total > 3) {
      for (int x = n; x < nodes; ++x) {
        if (comp[x] != id) continue;
        for (int y : adj[x]) {
          if (y < n || y < x) continue;
          std::vector<char> side(nodes, 0);
          std::vector<int> st{y};
          side[y] = 1;
          side[x] = 2;
          while (!st.empty()) {
            const int u = st.back();
            st.pop_back();
            for (int w : adj[u]) {
              if (!side[w]) {
                side[w] = 1;
                st.push_back(w);
              }
            }
          }
          int changes = 0;
          for (std::size_t i = 0; i < leaves.size(); ++i) {
            changes += side[leaves[i]] != side[leaves[(i + 1) % leaves.size()]] ? 1 : 0;
          }
          if (changes > 2) return false;
        }
      }
    }
  }
  for (std::size_t i = 0; i < parts.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.blocks.size(); ++j) {
      if (blocks_cross(parts.blocks[i], parts.blocks[j])) return false;
    }
  }
  return true;
}

bool is_good(const Topology& top, const DiskSchema& schema, const Bounds& bounds) {
  if (static_cast<int>(top.count.size()) != schema.kedge_count()) return false;
  for (int m : top.count) {
    if (m < 0 || m > bounds.cross) return false;
  }
  if (top.point_count() > bounds.points) return false;
  TopologyParts parts;
  if (!split_parts(top, parts)) return false;
  const BoundaryLayout layout(schema, top.count);
  for (const auto& b : parts.blocks) {
    if (b.size() == 2 && parts.point_neighbour[b[0]] == b[1] &&
        layout.point_slot[b[0]] == layout.point_slot[b[1]]) {
      return false;
    }
  }
  if (parts.tree_edges > bounds.tree) return false;
  const PartitionChains chains = partition_chains(layout, parts.point_block, parts.blocks);
  int vertices = top.internal_count;
  for (char c : chains.closed) vertices += c ? 1 : 0;
  // closed chains also arise from 2-leaf trees (a path through internal vertices)
  return vertices <= bounds.vert;
}

SeparationOracle::SeparationOracle(const DiskSchema& schema, std::vector<std::pair<int, int>> pairs)
    : schema_(&schema), pairs_(std::move(pairs)), layout_(schema, std::vector<int>(schema.kedge_count(), 0)) {}

void SeparationOracle::set_counts(const std::vector<int>& count) {
  count_ = count;
  layout_ = BoundaryLayout(*schema_, count);
}

std::vector<int> SeparationOracle::corner_classes(const std::vector<int>& point_block,
                                                  const std::vector<char>& present) const {
  const DiskSchema& schema = *schema_;
  const int slots = schema.slot_count();
  const int n = layout_.size();
  auto atom = [&](int s, int r) { return layout_.slot_first[s] + s + r; };
  UnionFind uf(n + slots);
  for (int s = 0; s < slots; ++s) {
    const int m = count_[schema.slots[s].kedge];
    uf.unite(atom(s, m), atom((s + 1) % slots, 0));
    const auto& slot = schema.slots[s];
    const int other = schema.copy_slot[slot.kedge][1 - slot.copy];
    for (int r = 0; r <= m; ++r) {
      const int gap = slot.forward ? r : m - r;
      const int r2 = schema.slots[other].forward ? gap : m - gap;
      uf.unite(atom(s, r), atom(other, r2));
    }
  }
  // members of each block in boundary order, restricted to present points
  std::vector<std::vector<int>> members;
  for (int q = 0; q < n; ++q) {
    if (!present[q]) continue;
    const int b = point_block[q];
    if (b >= static_cast<int>(members.size())) members.resize(b + 1);
    members[b].push_back(q);
  }
  auto after = [&](int q) { return atom(layout_.point_slot[q], layout_.point_rank[q] + 1); };
  auto before = [&](int q) { return atom(layout_.point_slot[q], layout_.point_rank[q]); };
  for (int q = 0; q < n; ++q) {
    if (!present[q]) uf.unite(before(q), after(q));
  }
  for (const auto& b : members) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      const int pred = b[(i + b.size() - 1) % b.size()];
      uf.unite(before(b[i]), after(pred));
    }
  }
  std::vector<int> out(slots);
  for (int s = 0; s < slots; ++s) out[s] = uf.find(atom(s, count_[schema.slots[s].kedge]));
  return out;
}

bool SeparationOracle::separates(const std::vector<int>& point_block,
                                 const std::vector<char>& present) const {
  const DiskSchema& schema = *schema_;
  if (schema.slot_count() == 0) return pairs_.empty();
  const std::vector<int> cls = corner_classes(point_block, present);
  std::vector<int> terminal_class;
  auto class_of = [&](int vertex) {
    for (int s = 0; s < schema.slot_count(); ++s) {
      if (schema.kvertex_terminal[schema.corner_vertex[s]] == vertex) return cls[s];
    }
    throw TopologyError("terminal " + std::to_string(vertex) + " is not a corner of the disk");
  };
  for (const auto& [a, b] : pairs_) {
    if (class_of(a) == class_of(b)) return false;
  }
  return true;
}

bool validate_topology(const Topology& top, const DiskSchema& schema,
                       const std::vector<std::pair<int, int>>& pairs) {
  TopologyParts parts;
  if (!split_parts(top, parts)) throw TopologyError("topology interior is not a forest of trees and arcs");
  SeparationOracle oracle(schema, pairs);
  oracle.set_counts(top.count);
  const std::vector<char> present(top.point_count(), 1);
  const std::vector<int> cls = oracle.corner_classes(parts.point_block, present);
  for (int s = 0; s < schema.slot_count(); ++s) {
    for (int s2 = 0; s2 < schema.slot_count(); ++s2) {
      if (schema.corner_vertex[s] == schema.corner_vertex[s2] && cls[s] != cls[s2]) {
        throw InternalError("corners of one K vertex fall into different faces");
      }
    }
  }
  return oracle.separates(parts.point_block, present);
}

std::vector<std::vector<std::pair<int, int>>> binary_shapes(int leaves) {
  using Edges = std::vector<std::pair<int, int>>;
  if (leaves < 2) return {};
  if (leaves == 2) return {Edges{{0, 1}}};
  // subtree shapes over leaf interval [lo, hi]: (edges, root), internal
  // nodes numbered from `next`
  struct Sub {
    Edges edges;
    int root;
    int next;
  };
  std::function<std::vector<Sub>(int, int, int)> build = [&](int lo, int hi, int next) {
    std::vector<Sub> out;
    if (lo == hi) {
      out.push_back({{}, lo, next});
      return out;
    }
    for (int split = lo; split < hi; ++split) {
      const int root = next;
      for (const Sub& left : build(lo, split, next + 1)) {
        for (const Sub& right : build(split + 1, hi, left.next)) {
          Sub s;
          s.edges = left.edges;
          s.edges.insert(s.edges.end(), right.edges.begin(), right.edges.end());
          s.edges.emplace_back(root, left.root);
          s.edges.emplace_back(root, right.root);
          s.root = root;
          s.next = right.next;
          out.push_back(std::move(s));
        }
      }
    }
    return out;
  };
  std::vector<Edges> shapes;
  for (Sub& s : build(1, leaves - 1, leaves)) {
    s.edges.emplace_back(s.root, 0);
    std::sort(s.edges.begin(), s.edges.end());
    shapes.push_back(std::move(s.edges));
  }
  return shapes;
}

namespace {

void count_partition(EnumerationStats* stats) {
  if (!stats) return;
  if (++stats->partitions > stats->partition_budget && stats->partition_budget > 0)
    throw ResourceError("topology enumeration exceeded " + std::to_string(stats->partition_budget) +
                        " partitions; lower the multipliers");
}

}  // namespace

void enumerate_topologies(const DiskSchema& schema, const Bounds& bounds,
                          const std::function<void(const Topology&)>& emit,
                          EnumerationStats* stats) {
  enumerate_partitions(schema, bounds, [&](const std::vector<int>& count, const BoundaryLayout& layout,
                                           const std::vector<int>& pb,
                                           const std::vector<std::vector<int>>& blocks) {
    count_partition(stats);
    const PartitionSummary s = summarize(layout, pb, blocks);
    if (s.tree_edges > bounds.tree || s.vertices > bounds.vert) return;
    emit_shapes(count, blocks, layout.size(), emit, stats);
  });
}

void enumerate_valid_topologies(const DiskSchema& schema, const Bounds& bounds,
                                const std::vector<std::pair<int, int>>& pairs,
                                const std::function<void(const Topology&)>& emit,
                                EnumerationStats* stats) {
  SeparationOracle oracle(schema, pairs);
  std::vector<int> last_count;
  enumerate_partitions(schema, bounds, [&](const std::vector<int>& count, const BoundaryLayout& layout,
                                           const std::vector<int>& pb,
                                           const std::vector<std::vector<int>>& blocks) {
    count_partition(stats);
    const PartitionSummary s = summarize(layout, pb, blocks);
    if (s.tree_edges > bounds.tree || s.vertices > bounds.vert) return;
    if (count != last_count) {
      oracle.set_counts(count);
      last_count = count;
    }
    std::vector<char> present(layout.size(), 1);
    if (!oracle.separates(pb, present)) return;
    if (stats) ++stats->valid;
    const PartitionChains chains = partition_chains(layout, pb, blocks);
    for (const auto& chain : chains.members) {
      for (int q : chain) present[q] = 0;
      const bool still = oracle.separates(pb, present);
      for (int q : chain) present[q] = 1;
      if (still) return;
    }
    if (stats) ++stats->minimal;
    emit_shapes(count, blocks, layout.size(), emit, stats);
  });
}

double topology_cap(const DiskSchema& schema, const Bounds& bounds) {
  const int kedges = schema.kedge_count();
  const int max_half = bounds.points / 2;
  // vectors[h]: count vectors summing to h with entries <= cross
  std::vector<double> vectors(max_half + 1, 0.0);
  vectors[0] = 1.0;
  for (int e = 0; e < kedges; ++e) {
    std::vector<double> next(max_half + 1, 0.0);
    for (int h = 0; h <= max_half; ++h) {
      for (int m = 0; m <= bounds.cross && h + m <= max_half; ++m) next[h + m] += vectors[h];
    }
    vectors = next;
  }
  if (kedges == 0) vectors.assign(max_half + 1, 0.0), vectors[0] = 1.0;
  // Riordan numbers: non-crossing partitions without singletons
  std::vector<double> riordan(2 * max_half + 1, 0.0);
  riordan[0] = 1.0;
  for (int n = 2; n <= 2 * max_half; ++n) {
    riordan[n] = (n - 1.0) / (n + 1.0) * (2.0 * riordan[n - 1] + 3.0 * riordan[n - 2]);
  }
  double cap = 0.0;
  for (int h = 0; h <= max_half; ++h) {
    cap += vectors[h] * std::round(riordan[2 * h]) * static_cast<double>(catalan(std::max(0, 2 * h - 2)));
  }
  return cap;
}

std::string topology_dot(const Topology& top, const DiskSchema& schema) {
  const BoundaryLayout layout(schema, top.count);
  std::ostringstream out;
  out << "graph topology {\n";
  const int n = layout.size();
  for (int q = 0; q < n; ++q) {
    const auto& slot = schema.slots[layout.point_slot[q]];
    out << "  p" << q << " [shape=point, label=\"k" << slot.kedge << "." << slot.copy << ":"
        << layout.point_rank[q] << "\"];\n";
  }
  for (int v = 0; v < top.internal_count; ++v) out << "  v" << v << ";\n";
  for (int q = 0; q + 1 < n; ++q) out << "  p" << q << " -- p" << q + 1 << " [style=dashed];\n";
  if (n > 2) out << "  p" << n - 1 << " -- p0 [style=dashed];\n";
  auto name = [&](int x) { return x < n ? "p" + std::to_string(x) : "v" + std::to_string(x - n); };
  for (const auto& [a, b] : top.edges) out << "  " << name(a) << " -- " << name(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace surfcut
