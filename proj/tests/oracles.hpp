#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "surfcut/cutgraph.hpp"
#include "surfcut/homotopy.hpp"
#include "surfcut/topology.hpp"

namespace oracles {

using namespace surfcut;

inline std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Good topologies on a schema with a single K edge (two sides), counted from
// all set partitions of the boundary points via restricted growth strings.
inline std::int64_t two_side_topology_count(const DiskSchema& schema, const Bounds& bounds) {
  std::int64_t expected = 0;
  for (int m = 0; 2 * m <= bounds.points; ++m) {
    const int n = 2 * m;
    // point q lies on slot 0 for q < m, slot 1 otherwise
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int q, int blocks) {
      if (q == n) {
        std::vector<std::vector<int>> parts(blocks);
        for (int i = 0; i < n; ++i) parts[rgs[i]].push_back(i);
        for (const auto& a : parts) {
          if (a.size() < 2) return;
          if (a.size() == 2 && (a[0] < m) == (a[1] < m)) return;
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (i != j)
              for (int a1 : parts[i])
                for (int a2 : parts[i])
                  for (int b1 : parts[j])
                    for (int b2 : parts[j])
                      if (a1 < b1 && b1 < a2 && a2 < b2) return;
        int tree_edges = 0;
        int vertices = 0;
        std::int64_t shapes = 1;
        for (const auto& a : parts) {
          const int k = static_cast<int>(a.size());
          if (k >= 3) {
            tree_edges += 2 * k - 3;
            vertices += k - 2;
            shapes *= catalan(k - 2);
          }
        }
        // closed arc cycles, following the gluing of the layout
        const BoundaryLayout layout(schema, {m});
        std::vector<int> block(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (int q : parts[i]) block[q] = static_cast<int>(i);
        std::vector<char> seen(n, 0);
        for (int q = 0; q < n; ++q) {
          if (seen[q]) continue;
          std::vector<int> stack{q};
          seen[q] = 1;
          bool closed = true;
          while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            if (parts[block[x]].size() != 2) closed = false;
            std::vector<int> next{layout.partner[x]};
            if (parts[block[x]].size() == 2) next.push_back(parts[block[x]][0] == x ? parts[block[x]][1] : parts[block[x]][0]);
            for (int y : next) {
              if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
              }
            }
          }
          vertices += closed ? 1 : 0;
        }
        if (tree_edges > bounds.tree || vertices > bounds.vert) return;
        expected += shapes;
        return;
      }
      for (int c = 0; c <= blocks; ++c) {
        rgs[q] = c;
        rec(q + 1, std::max(blocks, c + 1));
      }
    };
    rec(0, 0);
  }
  return expected;
}

using Label = std::pair<Weight, int>;

// Bellman-Ford over an explicit edge list of the lifted graph.
inline Label lifted_search(const DiskSchema& schema, const CrossingSequence& seq, int src, int dst) {
  const int F = schema.face_count;
  const int layers = static_cast<int>(seq.size()) + 1;
  struct Arc {
    int from, to;
    Weight w;
    int c;
  };
  std::vector<Arc> arcs;
  for (int j = 0; j < layers; ++j) {
    for (const auto& m : schema.moves) {
      arcs.push_back({j * F + m.a, j * F + m.b, m.weight, 0});
      arcs.push_back({j * F + m.b, j * F + m.a, m.weight, 0});
    }
    if (j + 1 < layers) {
      for (const auto& g : schema.glue[seq[j].kedge][seq[j].copy])
        arcs.push_back({j * F + g.from, (j + 1) * F + g.to, 0, 1});
    }
  }
  std::vector<Label> d(layers * F, {kInfinity, 0});
  d[src] = {0, 0};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& a : arcs) {
      if (d[a.from].first >= kInfinity) continue;
      Label cand{d[a.from].first + a.w, d[a.from].second + a.c};
      if (cand < d[a.to]) {
        d[a.to] = cand;
        changed = true;
      }
    }
  }
  return d[(layers - 1) * F + dst];
}

}  // namespace oracles
