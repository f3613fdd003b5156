#include "hypertile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

std::uint64_t edge_key(int u, int w) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(w);
}

}  // namespace

std::string to_string(PatchKind kind) {
  switch (kind) {
    case PatchKind::Construction: return "construction";
    case PatchKind::Dual: return "dual";
    case PatchKind::Truncation: return "truncation";
    case PatchKind::SubPatch: return "sub-patch";
  }
  return "?";
}

PatchKind patch_kind_from_string(const std::string& s) {
  if (s == "construction") return PatchKind::Construction;
  if (s == "dual") return PatchKind::Dual;
  if (s == "truncation") return PatchKind::Truncation;
  if (s == "sub-patch") return PatchKind::SubPatch;
  throw SchemaError("unknown patch kind '" + s + "'");
}

int Tiling::degree(int v) const {
  int n = 0;
  const int start = vertices[v].dart;
  if (start == kNone) return 0;
  int a = start;
  do {
    ++n;
    a = darts[a].next_ccw;
  } while (a != start && n <= num_darts());
  return n;
}

std::vector<int> Tiling::darts_around(int v) const {
  std::vector<int> out;
  const int start = vertices[v].dart;
  if (start == kNone) return out;
  int a = start;
  do {
    out.push_back(a);
    a = darts[a].next_ccw;
  } while (a != start && static_cast<int>(out.size()) <= num_darts());
  return out;
}

std::vector<int> Tiling::face_darts(int f) const {
  std::vector<int> out;
  const int start = faces[f].dart;
  int a = start;
  do {
    out.push_back(a);
    a = face_next(a);
  } while (a != start && static_cast<int>(out.size()) <= num_darts());
  return out;
}

std::vector<int> Tiling::face_vertices(int f) const {
  std::vector<int> out;
  for (int a : face_darts(f)) out.push_back(darts[a].origin);
  return out;
}

std::vector<int> Tiling::vertex_face_sizes(int v) const {
  std::vector<int> out;
  for (int a : darts_around(v)) {
    const int f = darts[a].face;
    out.push_back(f == kNone ? 0 : faces[f].size);
  }
  return out;
}

int Tiling::boundary_dart_at(int v) const {
  for (int a : darts_around(v)) {
    if (darts[a].face == kNone) return a;
  }
  return kNone;
}

void Tiling::rebuild_indices() {
  for (auto& v : vertices) v.dart = kNone;
  for (auto& f : faces) f.dart = kNone;
  for (int a = 0; a < num_darts(); ++a) {
    Dart& d = darts[a];
    if (d.next_ccw >= 0 && d.next_ccw < num_darts()) darts[d.next_ccw].prev_ccw = a;
    if (d.origin >= 0 && d.origin < num_vertices() && vertices[d.origin].dart == kNone) {
      vertices[d.origin].dart = a;
    }
    if (d.face >= 0 && d.face < num_faces() && faces[d.face].dart == kNone) faces[d.face].dart = a;
  }
}

BoundaryCycle boundary_cycle(const Tiling& t) {
  int outer_count = 0;
  int start = kNone;
  for (int a = 0; a < t.num_darts(); ++a) {
    if (t.darts[a].face != kNone) continue;
    ++outer_count;
    if (start == kNone || t.darts[a].origin < t.darts[start].origin) start = a;
  }
  if (start == kNone) throw InternalError("patch has no boundary");

  BoundaryCycle bc;
  int cur = start;
  do {
    const int v = t.darts[cur].origin;
    bc.vertices.push_back(v);
    bc.valences.push_back(t.degree(v));
    cur = t.face_prev(cur);
    if (t.darts[cur].face != kNone) throw InternalError("boundary walk left the outer region");
  } while (cur != start && bc.size() <= outer_count);

  if (bc.size() != outer_count) {
    throw InternalError("boundary is not a single cycle: walked " + std::to_string(bc.size()) +
                        " of " + std::to_string(outer_count) + " outer darts");
  }
  return bc;
}

FaceSetResult tiling_from_faces(const FaceSetInput& input) {
  const int n_in = static_cast<int>(input.vertex_layers.size());
  std::vector<int> vmap(n_in, kNone);
  for (const auto& cyc : input.cycles) {
    if (cyc.size() < 3) throw PreconditionError("face with fewer than 3 vertices");
    for (int v : cyc) {
      if (v < 0 || v >= n_in) throw PreconditionError("face references unknown vertex");
      vmap[v] = 0;
    }
  }
  FaceSetResult result;
  Tiling& t = result.tiling;
  for (int v = 0; v < n_in; ++v) {
    if (vmap[v] == kNone) continue;
    vmap[v] = t.num_vertices();
    t.vertices.push_back(Vertex{false, input.vertex_layers[v], kNone});
  }

  std::unordered_map<std::uint64_t, int> dart_of;
  for (int f = 0; f < static_cast<int>(input.cycles.size()); ++f) {
    const auto& cyc = input.cycles[f];
    const int s = static_cast<int>(cyc.size());
    t.faces.push_back(Face{s, input.face_layers.at(f), kNone});
    for (int i = 0; i < s; ++i) {
      const int u = vmap[cyc[i]];
      const int w = vmap[cyc[(i + 1) % s]];
      if (u == w) throw PreconditionError("degenerate edge in face");
      if (!dart_of.emplace(edge_key(u, w), t.num_darts()).second) {
        throw PreconditionError("edge used twice in the same direction");
      }
      t.darts.push_back(Dart{u, kNone, kNone, kNone, f});
    }
  }
  const int n_inner = t.num_darts();
  std::vector<int> head(n_inner);
  {
    int a = 0;
    for (const auto& cyc : input.cycles) {
      const int s = static_cast<int>(cyc.size());
      for (int i = 0; i < s; ++i) head[a++] = vmap[cyc[(i + 1) % s]];
    }
  }
  std::vector<int> outer_into(t.num_vertices(), kNone);
  for (int a = 0; a < n_inner; ++a) {
    const int u = t.darts[a].origin;
    const int w = head[a];
    auto it = dart_of.find(edge_key(w, u));
    if (it != dart_of.end()) {
      t.darts[a].twin = it->second;
      continue;
    }
    const int b = t.num_darts();
    t.darts.push_back(Dart{w, a, kNone, kNone, kNone});
    t.darts[a].twin = b;
    dart_of.emplace(edge_key(w, u), b);
    if (outer_into[u] != kNone) {
      throw PreconditionError("patch pinches at a vertex (outer region touches it twice)");
    }
    outer_into[u] = b;
  }

  // Rotation: the sector after an inner dart is its own face, so the next
  // dart counter-clockwise leaves along the previous edge of that face.
  {
    int a = 0;
    for (const auto& cyc : input.cycles) {
      const int s = static_cast<int>(cyc.size());
      for (int i = 0; i < s; ++i, ++a) {
        const int u = vmap[cyc[i]];
        const int prev = vmap[cyc[(i + s - 1) % s]];
        t.darts[a].next_ccw = dart_of.at(edge_key(u, prev));
      }
    }
  }
  for (int b = n_inner; b < t.num_darts(); ++b) {
    const int u = t.darts[b].origin;
    const int in = outer_into[u];
    if (in == kNone) throw InternalError("outer dart without incoming outer dart");
    t.darts[b].next_ccw = t.darts[in].twin;
  }
  t.rebuild_indices();

  std::vector<int> out_degree(t.num_vertices(), 0);
  for (const Dart& d : t.darts) ++out_degree[d.origin];
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (t.degree(v) != out_degree[v]) {
      throw PreconditionError("vertex rotation is not a single cycle (pinched vertex)");
    }
    t.vertices[v].interior = (outer_into[v] == kNone);
  }
  result.vertex_map = std::move(vmap);
  return result;
}

Tiling sub_patch(const Tiling& t, std::span<const int> face_ids) {
  FaceSetInput in;
  in.vertex_layers.reserve(t.vertices.size());
  for (const auto& v : t.vertices) in.vertex_layers.push_back(v.layer);
  std::vector<int> ids(face_ids.begin(), face_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  int max_layer = 0;
  for (int f : ids) {
    in.cycles.push_back(t.face_vertices(f));
    in.face_layers.push_back(t.faces[f].layer);
    max_layer = std::max(max_layer, t.faces[f].layer);
  }
  Tiling out = tiling_from_faces(in).tiling;
  out.vertex_type = t.vertex_type;
  out.layer_count = max_layer;
  out.kind = PatchKind::SubPatch;
  return out;
}

std::vector<int> ball_faces(const Tiling& t, int v, int radius) {
  std::vector<char> face_in(t.faces.size(), 0), vertex_in(t.vertices.size(), 0);
  std::vector<int> frontier{v}, faces;
  vertex_in[v] = 1;
  for (int r = 0; r < radius; ++r) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int a : t.darts_around(u)) {
        const int f = t.darts[a].face;
        if (f == kNone || face_in[f]) continue;
        face_in[f] = 1;
        faces.push_back(f);
        for (int w : t.face_vertices(f)) {
          if (!vertex_in[w]) {
            vertex_in[w] = 1;
            next.push_back(w);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::vector<int> core_faces(const Tiling& t) {
  std::vector<int> out;
  for (int f = 0; f < t.num_faces(); ++f) {
    bool all = true;
    for (int v : t.face_vertices(f)) all = all && t.vertices[v].interior;
    if (all) out.push_back(f);
  }
  return out;
}

}  // namespace hypertile
