#pragma once

#include "surfcut/cutgraph.hpp"
#include "surfcut/embed.hpp"

namespace fixtures {

struct DiskCase {
  surfcut::EmbeddedGraph g;
  surfcut::FaceStructure f;
  surfcut::CutGraph k;
  surfcut::CutDisk disk;
};

inline DiskCase disk_case(surfcut::EmbeddedGraph g) {
  DiskCase c;
  c.g = std::move(g);
  c.f = surfcut::trace_faces(c.g);
  c.k = surfcut::build_cut_graph(c.g, c.f);
  c.disk = surfcut::cut_to_disk(c.g, c.f, c.k);
  return c;
}

}  // namespace fixtures
