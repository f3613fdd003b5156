#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypertile/vertex_type.hpp"

namespace hypertile {

inline constexpr int kNone = -1;

struct Vertex {
  bool interior = false;
  int layer = 0;
  int dart = kNone;  // one outgoing dart (derived index)
};

// Half-edge. The face lies to the left of the dart; `face == kNone` marks the
// unbounded region outside the patch. Darts around a vertex are linked
// counter-clockwise.
struct Dart {
  int origin = kNone;
  int twin = kNone;
  int next_ccw = kNone;
  int prev_ccw = kNone;  // inverse of next_ccw (derived)
  int face = kNone;
};

struct Face {
  int size = 0;
  int layer = 0;
  int dart = kNone;  // one dart on the face (derived index)
};

enum class PatchKind { Construction, Dual, Truncation, SubPatch };

std::string to_string(PatchKind kind);
PatchKind patch_kind_from_string(const std::string& s);

/// Combinatorial map of a disk patch stored as half-edges.
struct Tiling {
  std::vector<Vertex> vertices;
  std::vector<Dart> darts;
  std::vector<Face> faces;
  std::optional<VertexType> vertex_type;
  int layer_count = 0;
  PatchKind kind = PatchKind::Construction;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_darts() const { return static_cast<int>(darts.size()); }
  int num_edges() const { return static_cast<int>(darts.size()) / 2; }
  int num_faces() const { return static_cast<int>(faces.size()); }

  int head(int d) const { return darts[darts[d].twin].origin; }

  // Next dart along the boundary of the face left of `d` (counter-clockwise
  // traversal of the face).
  int face_next(int d) const { return darts[darts[d].twin].prev_ccw; }
  int face_prev(int d) const { return darts[darts[d].next_ccw].twin; }

  int degree(int v) const;
  std::vector<int> darts_around(int v) const;  // counter-clockwise from vertices[v].dart
  std::vector<int> face_darts(int f) const;
  std::vector<int> face_vertices(int f) const;

  // Sizes of the faces around an interior vertex, counter-clockwise.
  std::vector<int> vertex_face_sizes(int v) const;

  // Outgoing dart at `v` whose left side is outside the patch, or kNone.
  int boundary_dart_at(int v) const;

  // Rebuild prev_ccw and the per-vertex/per-face representative darts from
  // origin/twin/next_ccw/face.
  void rebuild_indices();
};

/// Boundary vertices of a patch in counter-clockwise order, with their
/// valence in the current patch.
struct BoundaryCycle {
  std::vector<int> vertices;
  std::vector<int> valences;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Throws InternalError when the outer darts do not form a single cycle.
BoundaryCycle boundary_cycle(const Tiling& t);

/// Half-edge map from counter-clockwise vertex cycles, one per face. Vertex
/// ids in the cycles index `vertex_layers`; vertices not used by any face are
/// dropped and the rest renumbered in increasing id order. Twins missing from
/// the face set become outer darts. Throws PreconditionError if an edge is
/// used twice in the same direction or the outer region pinches at a vertex.
struct FaceSetInput {
  std::vector<std::vector<int>> cycles;
  std::vector<int> face_layers;    // same length as cycles
  std::vector<int> vertex_layers;  // indexed by the ids used in cycles
};

struct FaceSetResult {
  Tiling tiling;
  std::vector<int> vertex_map;  // input id -> new id, or kNone
};

FaceSetResult tiling_from_faces(const FaceSetInput& input);

/// Patch spanned by a subset of faces of `t` (original rotation order kept).
/// Vertex and face layers are carried over.
Tiling sub_patch(const Tiling& t, std::span<const int> face_ids);

/// Faces incident to vertices at combinatorial radius < `radius` from `v`:
/// radius 1 is the fan of v, radius 2 adds every face touching the fan, etc.
std::vector<int> ball_faces(const Tiling& t, int v, int radius);

/// Faces of `t` whose vertices are all interior.
std::vector<int> core_faces(const Tiling& t);

}  // namespace hypertile
