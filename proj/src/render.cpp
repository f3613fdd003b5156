#include "hypertile/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

constexpr std::array<const char*, 10> kSizePalette = {
    "#e4572e", "#4c9be8", "#f3a712", "#76b041", "#a06cd5",
    "#17bebb", "#ef8fb4", "#8c6d46", "#5b5f97", "#c9d6df"};  // 3, 4, 5, ...

constexpr std::array<const char*, 8> kLayerPalette = {
    "#fde725", "#90d743", "#35b779", "#21918c", "#31688e", "#443983", "#440154", "#b8b8b8"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string point(HPoint z) { return num(z.real()) + " " + num(-z.imag()); }

}  // namespace

GeodesicArc geodesic_arc(HPoint z, HPoint w) {
  GeodesicArc arc;
  const double det = z.real() * w.imag() - z.imag() * w.real();
  if (std::abs(det) < 1e-9) {
    arc.straight = true;
    return arc;
  }
  // 2 c.z = 1 + |z|^2, 2 c.w = 1 + |w|^2
  const double rz = 0.5 * (1 + std::norm(z));
  const double rw = 0.5 * (1 + std::norm(w));
  const double cx = (rz * w.imag() - rw * z.imag()) / det;
  const double cy = (z.real() * rw - w.real() * rz) / det;
  arc.center = HPoint(cx, cy);
  arc.radius = std::abs(z - arc.center);
  const HPoint u = z - arc.center;
  const HPoint v = w - arc.center;
  arc.sweep = (u.real() * v.imag() - u.imag() * v.real()) > 0;
  return arc;
}

const char* face_size_color(int size) {
  return kSizePalette[static_cast<std::size_t>(std::max(size - 3, 0)) % kSizePalette.size()];
}

const char* layer_color(int layer) {
  return kLayerPalette[static_cast<std::size_t>(std::max(layer, 0)) % kLayerPalette.size()];
}

std::string to_svg(const Tiling& t, const Realization& r, const RenderOptions& opts) {
  if (opts.width <= 0 || opts.height <= 0) throw PreconditionError("image size must be positive");
  if (r.coords.size() != t.vertices.size()) throw PreconditionError("realization does not match patch");
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opts.width) + "\" height=\"" + std::to_string(opts.height) +
         "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  const std::string stroke = num(opts.stroke_width);
  if (opts.draw_disk_boundary) {
    out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
           stroke + "\"/>\n";
  }
  for (int f = 0; f < t.num_faces(); ++f) {
    const auto verts = t.face_vertices(f);
    std::string d = "M " + point(r.coords[verts[0]]);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const HPoint z = r.coords[verts[i]];
      const HPoint w = r.coords[verts[(i + 1) % verts.size()]];
      const GeodesicArc arc = opts.edge_mode == EdgeMode::Geodesic ? geodesic_arc(z, w) : GeodesicArc{true, {}, 0, false};
      if (arc.straight) {
        d += " L " + point(w);
      } else {
        d += " A " + num(arc.radius) + " " + num(arc.radius) + " 0 0 " + (arc.sweep ? "1" : "0") +
             " " + point(w);
      }
    }
    d += " Z";
    const char* fill =
        opts.color_by == ColorBy::FaceSize ? face_size_color(t.faces[f].size) : layer_color(t.faces[f].layer);
    out += "<path data-face=\"" + std::to_string(f) + "\" d=\"" + d + "\" fill=\"" + fill +
           "\" stroke=\"#222222\" stroke-width=\"" + stroke + "\" stroke-linejoin=\"round\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hypertile
