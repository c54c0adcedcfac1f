#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace surfcut {

/// Generalized combinatorial map. Flags are dense ids; alpha[i][f] is the
/// image of flag f under the i-th involution, or -1 once f has been removed.
///   alpha0: same edge and face, other vertex
///   alpha1: same vertex and face, other edge
///   alpha2: same vertex and edge, other face
/// Orientable iff the flags can be 2-colored with every involution swapping
/// colors. Removing edges never renumbers flags, so callers may keep
/// per-flag attribute arrays indexed by the original ids.
struct GMap {
  std::array<std::vector<int>, 3> alpha;

  explicit GMap(int flag_count = 0) {
    for (auto& a : alpha) a.assign(flag_count, -1);
  }

  int flag_count() const { return static_cast<int>(alpha[0].size()); }
  bool alive(int f) const { return alpha[0][f] >= 0; }
  int live_flag_count() const;
};

/// Orbit labelling under the group generated by two involutions.
/// Orbits are numbered in order of their smallest flag; dead flags get -1.
struct Orbits {
  std::vector<int> id;
  int count = 0;
};

Orbits orbits(const GMap& map, int i, int j);
inline Orbits vertex_orbits(const GMap& map) { return orbits(map, 1, 2); }
inline Orbits edge_orbits(const GMap& map) { return orbits(map, 0, 2); }
inline Orbits face_orbits(const GMap& map) { return orbits(map, 0, 1); }

/// v - e + f.
int euler_characteristic(const GMap& map);
bool is_orientable(const GMap& map);
bool is_connected(const GMap& map);

/// Checks that every alpha is a fixed-point-free involution on live flags
/// and that alpha0*alpha2 is an involution. Throws StructureError.
void check_gmap(const GMap& map);

/// Deletes every edge whose flags have keep[f] == false. keep must be
/// constant on edge orbits. Vertices left without edges vanish.
GMap remove_edges(const GMap& map, std::span<const char> keep);

/// Dissolves degree-2 vertices (other than those carrying a loop) for which
/// may_dissolve(flag) holds, merging the two incident edges.
void dissolve_degree_two(GMap& map, const std::function<bool(int)>& may_dissolve);

/// Dual map: swaps alpha0 and alpha2.
GMap dual_map(const GMap& map);

/// Isomorphism of connected maps, optionally requiring same_label(a, b) to
/// hold for every matched pair of flags.
bool isomorphic(const GMap& a, const GMap& b,
                const std::function<bool(int, int)>& same_label = {});

}  // namespace surfcut
