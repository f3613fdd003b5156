#pragma once

#include <vector>

#include "hypertile/tiling.hpp"

namespace hypertile {

/// Counts for the sub-patch X_i made of faces with layer <= i.
struct LayerStats {
  int layer = 0;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int boundary_vertices = 0;
  double growth = 0.0;  // boundary_vertices / previous boundary_vertices, 0 for layer 0
};

std::vector<LayerStats> layer_stats(const Tiling& t);

/// Straight chains end - mid x count - end: starting from a face of size
/// `end_size`, cross `count` faces of size `mid_size`, each entered and left
/// through opposite edges, and land on another face of size `end_size`.
/// Each chain is counted once (not once per end). `mid_size` must be even.
int count_straight_chains(const Tiling& t, int end_size, int mid_size, int count);

}  // namespace hypertile
