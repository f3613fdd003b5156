#include "hypertile/analysis.hpp"

#include <algorithm>

#include "hypertile/errors.hpp"

namespace hypertile {

std::vector<LayerStats> layer_stats(const Tiling& t) {
  int max_layer = 0;
  for (const auto& f : t.faces) max_layer = std::max(max_layer, f.layer);
  std::vector<LayerStats> out;
  for (int i = 0; i <= max_layer; ++i) {
    LayerStats s;
    s.layer = i;
    auto in_patch = [&](int face) { return face != kNone && t.faces[face].layer <= i; };
    std::vector<char> vertex_in(t.vertices.size(), 0), on_boundary(t.vertices.size(), 0);
    for (int a = 0; a < t.num_darts(); ++a) {
      const int b = t.darts[a].twin;
      const bool left = in_patch(t.darts[a].face);
      const bool right = in_patch(t.darts[b].face);
      if (!left && !right) continue;
      vertex_in[t.darts[a].origin] = 1;
      if (a < b) ++s.edges;
      if (left != right) on_boundary[t.darts[a].origin] = 1;
    }
    for (int f = 0; f < t.num_faces(); ++f) s.faces += in_patch(f);
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      s.vertices += vertex_in[v];
      s.boundary_vertices += on_boundary[v];
    }
    if (!out.empty() && out.back().boundary_vertices > 0) {
      s.growth = static_cast<double>(s.boundary_vertices) / out.back().boundary_vertices;
    }
    out.push_back(s);
  }
  return out;
}

int count_straight_chains(const Tiling& t, int end_size, int mid_size, int count) {
  if (mid_size % 2 != 0) throw PreconditionError("straight chains need even middle faces");
  auto size_of = [&](int dart) {
    const int f = t.darts[dart].face;
    return f == kNone ? 0 : t.faces[f].size;
  };
  int ends = 0;
  for (int a = 0; a < t.num_darts(); ++a) {
    if (size_of(a) != end_size) continue;
    int cur = t.darts[a].twin;  // dart of the first middle face on the shared edge
    bool ok = true;
    for (int j = 0; j < count && ok; ++j) {
      if (size_of(cur) != mid_size) {
        ok = false;
        break;
      }
      for (int s = 0; s < mid_size / 2; ++s) cur = t.face_next(cur);
      cur = t.darts[cur].twin;
    }
    if (ok && size_of(cur) == end_size) ++ends;
  }
  return ends / 2;
}

}  // namespace hypertile
