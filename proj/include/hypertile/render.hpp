#pragma once

#include <string>

#include "hypertile/geometry.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

enum class ColorBy { FaceSize, Layer };
enum class EdgeMode { Geodesic, Chord };

struct RenderOptions {
  int width = 800;
  int height = 800;
  ColorBy color_by = ColorBy::FaceSize;
  bool draw_disk_boundary = true;
  EdgeMode edge_mode = EdgeMode::Geodesic;
  double stroke_width = 0.002;
};

/// Geodesic through z and w: a circle orthogonal to the unit circle, or a
/// straight segment when z, w and the origin are collinear (|det| < 1e-9).
struct GeodesicArc {
  bool straight = false;
  HPoint center;
  double radius = 0.0;
  bool sweep = false;  // SVG sweep flag after flipping the y axis
};

GeodesicArc geodesic_arc(HPoint z, HPoint w);

// Fixed palettes; sizes and layers beyond the table wrap around.
const char* face_size_color(int size);
const char* layer_color(int layer);

/// SVG 1.1 document, viewBox -1.05 -1.05 2.1 2.1, one <path> per face.
std::string to_svg(const Tiling& t, const Realization& r, const RenderOptions& opts = {});

}  // namespace hypertile
