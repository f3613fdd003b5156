#pragma once

#include <optional>
#include <string>

#include "hypertile/geometry.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

inline constexpr const char* kSchemaVersion = "hypertile/1";

struct Patch {
  Tiling tiling;
  std::optional<Realization> realization;  // present when the document has coords
};

/// JSON document with fields version, kind, vertex_type, layer_count,
/// vertices, darts, faces and, when a realization is given, side_length and
/// coords. Doubles are written with round-trip precision.
std::string to_json(const Tiling& t, const Realization* r = nullptr, int indent = -1);

/// Throws SchemaError on a version mismatch, missing fields or ids that do
/// not index their arrays. Derived indices (prev_ccw, vertex and face darts)
/// are rebuilt; the result is not verified.
Patch from_json(const std::string& text);

/// File wrappers; I/O failures throw IoError.
void save_patch(const std::string& path, const Tiling& t, const Realization* r = nullptr);
Patch load_patch(const std::string& path);

}  // namespace hypertile
