#pragma once

#include <memory>
#include <mutex>
#include <map>
#include <vector>

#include "surfcut/cutgraph.hpp"
#include "surfcut/topology.hpp"

namespace surfcut {

/// One crossing with K: the K edge and the copy (side) of it on which the
/// part of the curve before the crossing lies.
struct SequenceEntry {
  int kedge = 0;
  int copy = 0;
  auto operator<=>(const SequenceEntry&) const = default;
};
using CrossingSequence = std::vector<SequenceEntry>;

/// A maximal piece of the candidate dual between two internal vertices,
/// followed through the side pairings. Closed chains have no internal
/// vertex; their sequence starts right after the smallest boundary point.
struct Chain {
  int from_node = -1;  // topology node ids, -1 for closed chains
  int to_node = -1;
  int from_point = -1;
  int to_point = -1;
  bool closed = false;
  CrossingSequence sequence;
};

/// Open chains ordered by their first boundary point, then closed chains
/// ordered by their smallest point. Throws TopologyError on a malformed
/// topology.
std::vector<Chain> crossing_sequences(const Topology& top, const DiskSchema& schema);

/// Faces of the disk with the G pieces between them.
struct DiskGraph {
  struct Step {
    int to = 0;
    int gedge = 0;
    Weight weight = 0;
  };
  int face_count = 0;
  std::vector<std::vector<Step>> adjacency;

  explicit DiskGraph(const DiskSchema& schema);
};

/// Copies D_0..D_k of the disk glued in a chain: D_j is entered from
/// D_{j-1} through the side named by entry j-1. Node (j, f) has id j*F+f.
struct LiftedSpace {
  const DiskSchema* schema = nullptr;
  const Overlay* overlay = nullptr;
  CrossingSequence sequence;
  std::shared_ptr<const DiskGraph> disk;

  int face_count() const { return disk->face_count; }
  int copy_count() const { return static_cast<int>(sequence.size()) + 1; }
  int node_count() const { return copy_count() * face_count(); }
  int node(int copy, int face) const { return copy * face_count() + face; }
};

/// Throws SequenceError if an entry names no side of the schema.
LiftedSpace build_lifted_space(const DiskSchema& schema, const Overlay& overlay,
                               const CrossingSequence& seq);

struct HomotopicPath {
  Weight weight = 0;
  int crossings = 0;                // K crossings
  std::vector<int> nodes;           // lifted node ids from src to dst
  std::vector<int> gedges;          // crossed G edges in order, with repeats
  CrossingSequence projected;       // crossing sequence read off the overlay
};

/// Lexicographically shortest (G weight, K crossings) path from face src of
/// D_0 to face dst of D_k.
HomotopicPath shortest_homotopic_path(const LiftedSpace& lift, int src, int dst);

/// All-pairs costs between disk faces for each crossing sequence, cached.
/// Row-major F x F matrices; kInfinity marks unreachable pairs.
class DiskMetric {
 public:
  using Matrix = std::vector<Weight>;

  explicit DiskMetric(const DiskSchema& schema);
  int face_count() const { return faces_; }
  const Matrix& within() const { return within_; }
  std::shared_ptr<const Matrix> costs(const CrossingSequence& seq);
  std::size_t cached() const;

 private:
  Matrix compose(const CrossingSequence& seq) const;

  const DiskSchema* schema_;
  int faces_ = 0;
  Matrix within_;
  mutable std::mutex mutex_;
  std::map<CrossingSequence, std::shared_ptr<const Matrix>> cache_;
};

}  // namespace surfcut
