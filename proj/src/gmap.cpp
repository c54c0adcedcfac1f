#include "surfcut/gmap.hpp"

#include <string>

#include "surfcut/error.hpp"

namespace surfcut {

int GMap::live_flag_count() const {
  int n = 0;
  for (int f = 0; f < flag_count(); ++f) n += alive(f) ? 1 : 0;
  return n;
}

Orbits orbits(const GMap& map, int i, int j) {
  Orbits out;
  out.id.assign(map.flag_count(), -1);
  std::vector<int> stack;
  for (int f = 0; f < map.flag_count(); ++f) {
    if (!map.alive(f) || out.id[f] >= 0) continue;
    const int label = out.count++;
    out.id[f] = label;
    stack.push_back(f);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int k : {i, j}) {
        const int y = map.alpha[k][x];
        if (out.id[y] < 0) {
          out.id[y] = label;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

int euler_characteristic(const GMap& map) {
  return vertex_orbits(map).count - edge_orbits(map).count + face_orbits(map).count;
}

bool is_orientable(const GMap& map) {
  std::vector<int> color(map.flag_count(), -1);
  std::vector<int> stack;
  for (int f = 0; f < map.flag_count(); ++f) {
    if (!map.alive(f) || color[f] >= 0) continue;
    color[f] = 0;
    stack.push_back(f);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int k = 0; k < 3; ++k) {
        const int y = map.alpha[k][x];
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const GMap& map) {
  std::vector<char> seen(map.flag_count(), 0);
  std::vector<int> stack;
  int start = -1;
  for (int f = 0; f < map.flag_count() && start < 0; ++f) {
    if (map.alive(f)) start = f;
  }
  if (start < 0) return true;
  seen[start] = 1;
  stack.push_back(start);
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      const int y = map.alpha[k][x];
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == map.live_flag_count();
}

void check_gmap(const GMap& map) {
  const int n = map.flag_count();
  for (int f = 0; f < n; ++f) {
    if (!map.alive(f)) continue;
    for (int k = 0; k < 3; ++k) {
      const int y = map.alpha[k][f];
      if (y < 0 || y >= n || !map.alive(y) || y == f || map.alpha[k][y] != f) {
        throw StructureError("alpha" + std::to_string(k) + " is not an involution at flag " +
                             std::to_string(f));
      }
    }
    const int z = map.alpha[0][map.alpha[2][f]];
    if (map.alpha[0][map.alpha[2][z]] != f || map.alpha[2][map.alpha[0][f]] != z) {
      throw StructureError("alpha0*alpha2 is not an involution at flag " + std::to_string(f));
    }
  }
}

GMap remove_edges(const GMap& map, std::span<const char> keep) {
  GMap out = map;
  const int n = map.flag_count();
  for (int f = 0; f < n; ++f) {
    if (!map.alive(f)) continue;
    if (!keep[f]) {
      for (auto& a : out.alpha) a[f] = -1;
      continue;
    }
    int cur = map.alpha[1][f];
    while (!keep[cur]) {
      cur = map.alpha[1][map.alpha[2][cur]];
    }
    out.alpha[1][f] = cur;
  }
  return out;
}

void dissolve_degree_two(GMap& map, const std::function<bool(int)>& may_dissolve) {
  const int n = map.flag_count();
  for (int x = 0; x < n; ++x) {
    if (!map.alive(x)) continue;
    const int xp = map.alpha[2][x];
    const int y = map.alpha[1][x];
    const int yp = map.alpha[1][xp];
    // degree two: the vertex orbit is exactly {x, xp, y, yp}
    if (map.alpha[2][y] != yp) continue;
    if (y == xp) continue;  // degree one
    const int fx = map.alpha[0][x];
    const int fxp = map.alpha[0][xp];
    const int fy = map.alpha[0][y];
    const int fyp = map.alpha[0][yp];
    // a loop through this vertex: keep it as a one-vertex closed curve
    if (fx == y || fx == yp || fx == x || fx == xp) continue;
    if (!may_dissolve(x)) continue;
    map.alpha[0][fx] = fy;
    map.alpha[0][fy] = fx;
    map.alpha[0][fxp] = fyp;
    map.alpha[0][fyp] = fxp;
    for (int f : {x, xp, y, yp}) {
      for (auto& a : map.alpha) a[f] = -1;
    }
  }
}

GMap dual_map(const GMap& map) {
  GMap out = map;
  std::swap(out.alpha[0], out.alpha[2]);
  return out;
}

bool isomorphic(const GMap& a, const GMap& b, const std::function<bool(int, int)>& same_label) {
  if (a.live_flag_count() != b.live_flag_count()) return false;
  int root = -1;
  for (int f = 0; f < a.flag_count() && root < 0; ++f) {
    if (a.alive(f)) root = f;
  }
  if (root < 0) return true;
  std::vector<int> to(a.flag_count(), -1);
  std::vector<int> from(b.flag_count(), -1);
  std::vector<int> touched;
  std::vector<int> queue;
  for (int candidate = 0; candidate < b.flag_count(); ++candidate) {
    if (!b.alive(candidate)) continue;
    for (int f : touched) {
      from[to[f]] = -1;
      to[f] = -1;
    }
    touched.clear();
    queue.clear();
    bool ok = true;
    auto bind = [&](int x, int y) {
      if (to[x] >= 0) return to[x] == y;
      if (from[y] >= 0) return false;
      if (same_label && !same_label(x, y)) return false;
      to[x] = y;
      from[y] = x;
      touched.push_back(x);
      queue.push_back(x);
      return true;
    };
    ok = bind(root, candidate);
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      const int x = queue[head];
      for (int k = 0; k < 3 && ok; ++k) {
        ok = bind(a.alpha[k][x], b.alpha[k][to[x]]);
      }
    }
    if (ok && static_cast<int>(touched.size()) == a.live_flag_count()) return true;
  }
  return false;
}

}  // namespace surfcut
