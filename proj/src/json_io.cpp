#include "hypertile/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypertile/errors.hpp"

namespace hypertile {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

int nullable_int(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_null()) return kNone;
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' is not an array");
  return v;
}

void check_id(const json& item, std::size_t index, const char* what) {
  if (int_field(item, "id") != static_cast<int>(index)) {
    throw SchemaError(std::string(what) + " ids must equal their position");
  }
}

void check_ref(int ref, int n, bool nullable, const char* what) {
  if ((nullable && ref == kNone) || (ref >= 0 && ref < n)) return;
  throw SchemaError(std::string(what) + " reference " + std::to_string(ref) + " out of range");
}

}  // namespace

std::string to_json(const Tiling& t, const Realization* r, int indent) {
  json doc;
  doc["version"] = kSchemaVersion;
  doc["kind"] = to_string(t.kind);
  doc["vertex_type"] = t.vertex_type ? json(t.vertex_type->to_string()) : json(nullptr);
  doc["layer_count"] = t.layer_count;
  json vertices = json::array();
  for (int v = 0; v < t.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"interior", t.vertices[v].interior}, {"layer", t.vertices[v].layer}});
  }
  doc["vertices"] = std::move(vertices);
  json darts = json::array();
  for (int a = 0; a < t.num_darts(); ++a) {
    const Dart& d = t.darts[a];
    darts.push_back({{"id", a},
                     {"origin", d.origin},
                     {"twin", d.twin},
                     {"next_ccw", d.next_ccw},
                     {"face", d.face == kNone ? json(nullptr) : json(d.face)}});
  }
  doc["darts"] = std::move(darts);
  json faces = json::array();
  for (int f = 0; f < t.num_faces(); ++f) {
    faces.push_back({{"id", f}, {"size", t.faces[f].size}, {"layer", t.faces[f].layer}});
  }
  doc["faces"] = std::move(faces);
  if (r) {
    doc["side_length"] = r->params.side_length;
    json coords = json::array();
    for (std::size_t v = 0; v < r->coords.size(); ++v) {
      coords.push_back({{"id", v}, {"x", r->coords[v].real()}, {"y", r->coords[v].imag()}});
    }
    doc["coords"] = std::move(coords);
  }
  return doc.dump(indent);
}

Patch from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not JSON: ") + e.what());
  }
  const json& version = field(doc, "version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw SchemaError("schema version mismatch: expected " + std::string(kSchemaVersion));
  }
  Patch p;
  Tiling& t = p.tiling;
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw SchemaError("field 'kind' is not a string");
    t.kind = patch_kind_from_string(doc["kind"].get<std::string>());
  }
  const json& vt = field(doc, "vertex_type");
  if (!vt.is_null()) {
    if (!vt.is_string()) throw SchemaError("field 'vertex_type' is not a string");
    try {
      t.vertex_type = VertexType::parse(vt.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(std::string("bad vertex_type: ") + e.what());
    }
  }
  t.layer_count = int_field(doc, "layer_count");

  const json& vertices = array_field(doc, "vertices");
  const json& darts = array_field(doc, "darts");
  const json& faces = array_field(doc, "faces");
  const int nv = static_cast<int>(vertices.size());
  const int nd = static_cast<int>(darts.size());
  const int nf = static_cast<int>(faces.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const json& v = vertices[i];
    check_id(v, i, "vertex");
    const json& interior = field(v, "interior");
    if (!interior.is_boolean()) throw SchemaError("field 'interior' is not a boolean");
    t.vertices.push_back(Vertex{interior.get<bool>(), int_field(v, "layer"), kNone});
  }
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const json& d = darts[i];
    check_id(d, i, "dart");
    Dart dart{int_field(d, "origin"), int_field(d, "twin"), int_field(d, "next_ccw"), kNone,
              nullable_int(d, "face")};
    check_ref(dart.origin, nv, false, "origin");
    check_ref(dart.twin, nd, false, "twin");
    check_ref(dart.next_ccw, nd, false, "next_ccw");
    check_ref(dart.face, nf, true, "face");
    t.darts.push_back(dart);
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const json& f = faces[i];
    check_id(f, i, "face");
    t.faces.push_back(Face{int_field(f, "size"), int_field(f, "layer"), kNone});
  }
  t.rebuild_indices();

  if (doc.contains("coords")) {
    const json& coords = array_field(doc, "coords");
    if (static_cast<int>(coords.size()) != nv) throw SchemaError("coords must cover every vertex");
    Realization r;
    const json& l = field(doc, "side_length");
    if (!l.is_number()) throw SchemaError("field 'side_length' is not a number");
    r.params.side_length = l.get<double>();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      check_id(coords[i], i, "coord");
      const json& x = field(coords[i], "x");
      const json& y = field(coords[i], "y");
      if (!x.is_number() || !y.is_number()) throw SchemaError("coords must be numbers");
      r.coords.emplace_back(x.get<double>(), y.get<double>());
    }
    p.realization = std::move(r);
  }
  return p;
}

void save_patch(const std::string& path, const Tiling& t, const Realization* r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << to_json(t, r) << "\n";
  if (!out) throw IoError("write to '" + path + "' failed");
}

Patch load_patch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace hypertile
