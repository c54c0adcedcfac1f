#pragma once

#include <cstdint>
#include <random>

#include "surfcut/embed.hpp"

namespace surfcut {

struct InstanceParams {
  int max_edges = 14;
  Weight min_weight = 1;
  Weight max_weight = 10;
  int terminals = 3;
  int max_pairs = 3;
  bool all_pairs = false;
};

/// Grid of points with one random diagonal per cell, thinned by deleting
/// random non-bridge edges down to at most max_edges.
EmbeddedGraph random_planar_instance(std::mt19937_64& rng, const InstanceParams& params);

/// Toroidal grid (Euler genus 2) modified by random subdivisions, chords and
/// edge deletions that keep the embedding cellular.
EmbeddedGraph random_torus_instance(std::mt19937_64& rng, const InstanceParams& params);

/// rows x cols planar grid with random weights and no terminals.
EmbeddedGraph grid_graph(int rows, int cols, std::mt19937_64& rng, Weight min_weight,
                         Weight max_weight);

/// Toroidal rows x cols grid, all weights 1, rotation (right, up, left, down).
EmbeddedGraph torus_grid(int rows, int cols);

/// Picks `count` distinct terminals and random pairs among them.
void assign_terminals(EmbeddedGraph& graph, std::mt19937_64& rng, int count, int max_pairs,
                      bool all_pairs);

}  // namespace surfcut
