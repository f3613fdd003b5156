#include "hypertile/transform.hpp"

#include <algorithm>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

bool constant(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
}

}  // namespace

Tiling dual(const Tiling& t) {
  FaceSetInput in;
  in.vertex_layers.reserve(t.faces.size());
  for (const auto& f : t.faces) in.vertex_layers.push_back(f.layer);
  int max_layer = 0;
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (!t.vertices[v].interior) continue;
    std::vector<int> cyc;
    for (int a : t.darts_around(v)) cyc.push_back(t.darts[a].face);
    in.cycles.push_back(std::move(cyc));
    in.face_layers.push_back(t.vertices[v].layer);
    max_layer = std::max(max_layer, t.vertices[v].layer);
  }
  if (in.cycles.empty()) throw PreconditionError("dual needs at least one interior vertex");

  Tiling out = tiling_from_faces(in).tiling;
  out.kind = PatchKind::Dual;
  out.layer_count = max_layer;
  if (t.vertex_type && constant(t.vertex_type->entries())) {
    const int p = t.vertex_type->entries().front();
    out.vertex_type = VertexType(std::vector<int>(p, t.vertex_type->degree()));
  }
  return out;
}

Tiling truncate(const Tiling& t) {
  if (!t.vertex_type || !constant(t.vertex_type->entries())) {
    throw PreconditionError("truncate needs an [n^q] patch, got " +
                            (t.vertex_type ? t.vertex_type->to_string() : std::string("no type")));
  }
  const int n = t.vertex_type->entries().front();
  const int q = t.vertex_type->degree();

  // One new vertex per dart leaving an interior vertex; it sits on that edge
  // next to the origin.
  FaceSetInput in;
  std::vector<int> id(t.darts.size(), kNone);
  for (int a = 0; a < t.num_darts(); ++a) {
    const int v = t.darts[a].origin;
    if (!t.vertices[v].interior) continue;
    id[a] = static_cast<int>(in.vertex_layers.size());
    in.vertex_layers.push_back(t.vertices[v].layer);
  }
  int max_layer = 0;
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (!t.vertices[v].interior) continue;
    std::vector<int> cyc;
    for (int a : t.darts_around(v)) cyc.push_back(id[a]);
    in.cycles.push_back(std::move(cyc));
    in.face_layers.push_back(t.vertices[v].layer);
    max_layer = std::max(max_layer, t.vertices[v].layer);
  }
  for (int f : core_faces(t)) {
    std::vector<int> cyc;
    for (int a : t.face_darts(f)) {
      cyc.push_back(id[a]);
      cyc.push_back(id[t.darts[a].twin]);
    }
    in.cycles.push_back(std::move(cyc));
    in.face_layers.push_back(t.faces[f].layer);
    max_layer = std::max(max_layer, t.faces[f].layer);
  }
  if (in.cycles.empty()) throw PreconditionError("truncate needs at least one interior vertex");

  Tiling out = tiling_from_faces(in).tiling;
  out.kind = PatchKind::Truncation;
  out.layer_count = max_layer;
  out.vertex_type = VertexType({2 * n, 2 * n, q});
  return out;
}

}  // namespace hypertile
