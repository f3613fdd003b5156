#include "hypertile/verify.hpp"

#include <algorithm>
#include <sstream>

namespace hypertile {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

void fail(CheckResult& c, std::string witness) {
  c.passed = false;
  if (c.witnesses.size() < kMaxWitnesses) c.witnesses.push_back(std::move(witness));
}

bool in_range(int x, int n) { return x >= 0 && x < n; }

std::string str(int x) { return std::to_string(x); }

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.passed ? "ok" : "FAIL");
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
      os << (i == 0 ? " (" : "; ") << c.witnesses[i];
    }
    if (!c.witnesses.empty()) os << ")";
    os << "\n";
  }
  return os.str();
}

VerifyReport verify(const Tiling& t) {
  VerifyReport rep;
  const int nd = t.num_darts();
  const int nv = t.num_vertices();
  const int nf = t.num_faces();
  const std::vector<std::string> downstream = {"face-sizes", "euler", "boundary-cycle",
                                               "vertex-types", "layer-counts"};

  CheckResult darts{"darts", true, {}};
  if (nd % 2 != 0) fail(darts, "odd dart count " + str(nd));
  for (int a = 0; a < nd; ++a) {
    const Dart& d = t.darts[a];
    if (!in_range(d.origin, nv) || !in_range(d.twin, nd) || !in_range(d.next_ccw, nd) ||
        !(d.face == kNone || in_range(d.face, nf))) {
      fail(darts, "dart " + str(a) + ": index out of range");
    }
  }
  std::vector<int> prev(nd, kNone);
  if (darts.passed) {
    for (int a = 0; a < nd; ++a) {
      const Dart& d = t.darts[a];
      if (d.twin == a) fail(darts, "dart " + str(a) + ": twin is itself");
      if (t.darts[d.twin].twin != a) fail(darts, "dart " + str(a) + ": twin not an involution");
      if (t.darts[d.twin].origin == d.origin) fail(darts, "dart " + str(a) + ": loop edge");
      if (t.darts[d.next_ccw].origin != d.origin) {
        fail(darts, "dart " + str(a) + ": next_ccw leaves the origin");
      }
      if (prev[d.next_ccw] != kNone) fail(darts, "dart " + str(d.next_ccw) + ": two predecessors");
      prev[d.next_ccw] = a;
    }
  }
  if (darts.passed) {
    std::vector<int> orbits(nv, 0);
    std::vector<char> seen(nd, 0);
    for (int a = 0; a < nd; ++a) {
      if (seen[a]) continue;
      ++orbits[t.darts[a].origin];
      for (int b = a; !seen[b]; b = t.darts[b].next_ccw) seen[b] = 1;
    }
    for (int v = 0; v < nv; ++v) {
      if (orbits[v] != 1) {
        fail(darts, "vertex " + str(v) + ": " + str(orbits[v]) + " rotation cycles");
      }
    }
  }
  rep.checks.push_back(darts);
  if (!darts.passed) {
    for (const auto& name : downstream) {
      rep.checks.push_back(CheckResult{name, false, {"not run: dart structure invalid"}});
    }
    return rep;
  }

  auto face_next = [&](int a) { return prev[t.darts[a].twin]; };

  // Face orbits.
  CheckResult sizes{"face-sizes", true, {}};
  std::vector<int> orbit_of(nd, kNone);
  std::vector<int> orbit_len;
  std::vector<char> orbit_outer, orbit_inner;
  std::vector<int> face_orbits(nf, 0);
  for (int a = 0; a < nd; ++a) {
    if (orbit_of[a] != kNone) continue;
    const int id = static_cast<int>(orbit_len.size());
    int len = 0;
    bool outer = false, inner = false, mixed = false;
    const int label = t.darts[a].face;
    for (int b = a; orbit_of[b] == kNone; b = face_next(b)) {
      orbit_of[b] = id;
      ++len;
      const int f = t.darts[b].face;
      (f == kNone ? outer : inner) = true;
      if (f != label) mixed = true;
    }
    orbit_len.push_back(len);
    orbit_outer.push_back(outer);
    orbit_inner.push_back(inner);
    if (mixed) {
      fail(sizes, "dart " + str(a) + ": face labels change along a face cycle");
    } else if (label != kNone) {
      ++face_orbits[label];
      if (t.faces[label].size != len) {
        fail(sizes, "face " + str(label) + ": size " + str(t.faces[label].size) +
                        " but cycle length " + str(len));
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (face_orbits[f] != 1) {
      fail(sizes, "face " + str(f) + ": " + str(face_orbits[f]) + " boundary cycles");
    }
  }
  rep.checks.push_back(sizes);

  CheckResult euler{"euler", true, {}};
  int inner_faces = 0;
  for (std::size_t i = 0; i < orbit_len.size(); ++i) inner_faces += (orbit_inner[i] && !orbit_outer[i]);
  const int chi = nv - nd / 2 + inner_faces;
  if (chi != 1) {
    fail(euler, "V-E+F = " + str(nv) + "-" + str(nd / 2) + "+" + str(inner_faces) + " = " + str(chi));
  }
  rep.checks.push_back(euler);

  // Boundary: one outer orbit, no pinch, recorded interior flags agree.
  CheckResult boundary{"boundary-cycle", true, {}};
  int outer_orbits = 0;
  for (std::size_t i = 0; i < orbit_len.size(); ++i) {
    if (orbit_outer[i]) {
      ++outer_orbits;
      if (orbit_inner[i]) fail(boundary, "outer cycle passes through a face");
    }
  }
  if (outer_orbits != 1) fail(boundary, str(outer_orbits) + " outer cycles");
  std::vector<int> outer_at(nv, 0);
  for (int a = 0; a < nd; ++a) {
    if (t.darts[a].face == kNone) ++outer_at[t.darts[a].origin];
  }
  for (int v = 0; v < nv; ++v) {
    if (outer_at[v] > 1) fail(boundary, "vertex " + str(v) + ": boundary pinches");
    if (t.vertices[v].interior != (outer_at[v] == 0)) {
      fail(boundary, "vertex " + str(v) + ": interior flag disagrees with darts");
    }
  }
  rep.checks.push_back(boundary);

  std::vector<int> degree(nv, 0);
  for (int a = 0; a < nd; ++a) ++degree[t.darts[a].origin];

  CheckResult types{"vertex-types", true, {}};
  if (t.vertex_type) {
    const auto& target = t.vertex_type->canonical_form();
    std::vector<char> seen(nd, 0);
    for (int a = 0; a < nd; ++a) {
      const int v = t.darts[a].origin;
      if (seen[a] || outer_at[v] != 0) continue;
      std::vector<int> around;
      for (int b = a; !seen[b]; b = t.darts[b].next_ccw) {
        seen[b] = 1;
        around.push_back(orbit_len[orbit_of[b]]);
      }
      if (canonical_cycle(around) != target) {
        fail(types, "vertex " + str(v) + ": " + word_to_string(around));
      }
    }
  }
  rep.checks.push_back(types);

  if (t.kind == PatchKind::Construction && t.vertex_type && boundary.passed) {
    const bool triangles = t.vertex_type->contains(3);
    CheckResult prop{triangles ? "property-1'" : "property-1", true, {}};
    bool has2 = false, has3 = false, has_big = false, tri_edge = false;
    for (int a = 0; a < nd; ++a) {
      if (t.darts[a].face != kNone) continue;
      const int v = t.darts[a].origin;
      const int val = degree[v];
      has2 = has2 || val == 2;
      has3 = has3 || val == 3;
      has_big = has_big || val >= 3;
      const int inside = t.darts[a].twin;
      if (orbit_len[orbit_of[inside]] == 3) tri_edge = true;
      if (val < 2 || val > (triangles ? 4 : 3)) {
        fail(prop, "vertex " + str(v) + ": boundary valence " + str(val));
      }
      if (triangles && val == 4) {
        // A triangle at v whose other two corners are interior.
        bool found = false;
        int b = a;
        do {
          if (t.darts[b].face != kNone && orbit_len[orbit_of[b]] == 3) {
            const int w1 = t.darts[t.darts[b].twin].origin;
            const int w2 = t.darts[t.darts[face_next(b)].twin].origin;
            found = found || (outer_at[w1] == 0 && outer_at[w2] == 0);
          }
          b = t.darts[b].next_ccw;
        } while (b != a);
        if (!found) fail(prop, "vertex " + str(v) + ": valence 4 without an inner triangle");
      }
    }
    if (triangles) {
      if (!has_big) fail(prop, "no boundary vertex of valence >= 3");
      if (!has2 && !tri_edge) fail(prop, "no valence-2 vertex and no triangle on the boundary");
    } else {
      if (!has2) fail(prop, "no boundary vertex of valence 2");
      if (!has3) fail(prop, "no boundary vertex of valence 3");
    }
    rep.checks.push_back(prop);
  }

  CheckResult layers{"layer-counts", true, {}};
  int max_layer = 0;
  for (const auto& v : t.vertices) max_layer = std::max(max_layer, v.layer);
  rep.layer_vertex_counts.assign(max_layer + 1, 0);
  for (const auto& v : t.vertices) {
    if (v.layer < 0) {
      fail(layers, "negative vertex layer");
      continue;
    }
    ++rep.layer_vertex_counts[v.layer];
  }
  if (t.kind == PatchKind::Construction) {
    for (int i = 1; i <= max_layer; ++i) {
      if (rep.layer_vertex_counts[i] <= rep.layer_vertex_counts[i - 1]) {
        fail(layers, "layer " + str(i) + ": " + str(rep.layer_vertex_counts[i]) +
                         " vertices after " + str(rep.layer_vertex_counts[i - 1]));
      }
    }
  }
  rep.checks.push_back(layers);
  return rep;
}

}  // namespace hypertile
