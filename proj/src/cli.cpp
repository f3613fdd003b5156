#include "hypertile/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <set>

#include "hypertile/analysis.hpp"
#include "hypertile/construction.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/geometry.hpp"
#include "hypertile/isomorphism.hpp"
#include "hypertile/json_io.hpp"
#include "hypertile/render.hpp"
#include "hypertile/transform.hpp"
#include "hypertile/verify.hpp"

namespace hypertile::cli {

namespace {

using nlohmann::json;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Ordered pairs read off the tuple in either direction, each listed once.
std::vector<std::pair<int, int>> appearing_pairs(const VertexType& k) {
  std::set<std::pair<int, int>> seen;
  const auto& e = k.canonical_form();
  const int d = k.degree();
  for (int i = 0; i < d; ++i) {
    const int x = e[i], y = e[(i + 1) % d];
    seen.insert({std::min(x, y), std::max(x, y)});
  }
  return {seen.begin(), seen.end()};
}

struct AmbiguousPair {
  int x, y;
  std::vector<Word> readings;  // full readings of the tuple starting with the pair
};

std::vector<AmbiguousPair> ambiguous_pairs(const VertexType& k) {
  std::vector<AmbiguousPair> out;
  for (auto [x, y] : appearing_pairs(k)) {
    const auto conts = continuations(k, x, y);
    if (conts.size() < 2) continue;
    out.push_back(AmbiguousPair{x, y, conts});
  }
  return out;
}

int cmd_check(const std::string& text, bool as_json, std::ostream& out) {
  const VertexType k = VertexType::parse(text);
  const Rational alpha = angle_sum(k);
  const auto a = condition_a(k);
  const auto b = condition_b(k);
  const bool det = pair_deterministic(k);
  const auto amb = ambiguous_pairs(k);
  const ExistenceVerdict v = existence_verdict(k);

  if (as_json) {
    json j;
    j["vertex_type"] = k.to_string();
    j["degree"] = k.degree();
    j["angle_sum"] = alpha.to_string();
    j["hyperbolic"] = is_hyperbolic(k);
    j["condition_a"] = {{"pass", !a}, {"witness", a ? json(a->to_string()) : json(nullptr)}};
    j["condition_b"] = {{"pass", !b}, {"witness", b ? json(b->to_string()) : json(nullptr)}};
    j["pair_deterministic"] = det;
    json ja = json::array();
    for (const auto& p : amb) {
      json r = json::array();
      for (const auto& w : p.readings) r.push_back(word_to_string(w));
      ja.push_back({{"pair", word_to_string(Word{p.x, p.y})}, {"continuations", r}});
    }
    j["ambiguous_pairs"] = ja;
    j["verdict"] = to_string(v.status);
    j["reasons"] = v.reasons;
    out << j.dump(2) << "\n";
    return kOk;
  }

  out << "vertex-type: " << k.to_string() << "\n";
  out << "degree: " << k.degree() << "\n";
  out << "angle-sum: " << alpha.to_string() << (is_hyperbolic(k) ? " (> 2, hyperbolic)" : " (<= 2)")
      << "\n";
  out << "condition-A: " << (a ? "fail, " + a->to_string() : std::string("pass")) << "\n";
  out << "condition-B: " << (b ? "fail, " + b->to_string() : std::string("pass")) << "\n";
  out << "pair-deterministic: " << (det ? "true" : "false") << "\n";
  for (const auto& p : amb) {
    out << "  pair " << word_to_string(Word{p.x, p.y}) << " continues as";
    for (const auto& w : p.readings) out << " " << word_to_string(w);
    out << "\n";
  }
  out << "verdict: " << to_string(v.status) << "\n";
  for (const auto& r : v.reasons) out << "  " << r << "\n";
  return kOk;
}

int cmd_classify(int degree, int max_entry, std::ostream& out, std::ostream& err) {
  if (degree != 3) {
    err << "classify: only --degree 3 is supported\n";
    return kIoError;
  }
  if (max_entry < 3) {
    err << "classify: --max must be >= 3\n";
    return kIoError;
  }
  // Sorted triples are one representative per class: every permutation of
  // three entries is a rotation or reflection.
  for (int p = 3; p <= max_entry; ++p) {
    for (int q = p; q <= max_entry; ++q) {
      for (int r = q; r <= max_entry; ++r) {
        const VertexType k({p, q, r});
        const Degree3Classification c = classify_degree3(k);
        out << k.to_string() << " " << (c.exists ? "exists" : "none") << " " << to_string(c.label)
            << "\n";
      }
    }
  }
  return kOk;
}

std::optional<Realization> try_realize(const Tiling& t, std::ostream& err) {
  if (!t.vertex_type) return std::nullopt;
  try {
    return realize(t, side_length(*t.vertex_type));
  } catch (const Error& e) {
    err << "note: no coordinates written: " << e.what() << "\n";
    return std::nullopt;
  }
}

int cmd_build(const std::string& text, int layers, const std::string& policy_text,
              const std::string& path, bool force, std::ostream& out, std::ostream& err) {
  const VertexType k = VertexType::parse(text);
  const BuildPolicy policy = BuildPolicy::parse(policy_text);
  const BuildResult res = build(k, layers, policy, force);
  const Tiling& t = res.tiling;

  std::optional<Realization> r;
  if (res.complete) r = try_realize(t, err);
  save_patch(path, t, r ? &*r : nullptr);

  out << "vertex-type: " << k.to_string() << "\n";
  out << "kind: " << to_string(t.kind) << "\n";
  out << "policy: " << policy.to_string() << "\n";
  out << "layers: " << t.layer_count << "\n";
  out << "vertices: " << t.num_vertices() << "\n";
  out << "edges: " << t.num_edges() << "\n";
  out << "faces: " << t.num_faces() << "\n";
  out << "choices: " << BuildPolicy::scripted(res.choices).to_string() << "\n";
  if (r) out << "side-length: " << fmt("%.12f", r->params.side_length) << "\n";
  out << "wrote: " << path << "\n";
  if (!res.complete) {
    out << "complete: false\n";
    err << "build stopped: " << res.failure << "\n";
    if (!res.offending_word.empty()) {
      err << "offending word: " << word_to_string(res.offending_word) << "\n";
    }
    return kRefused;
  }
  out << "complete: true\n";
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const Patch p = load_patch(path);
  const VerifyReport rep = verify(p.tiling);
  out << rep.summary();
  out << "layer-vertex-counts:";
  for (int c : rep.layer_vertex_counts) out << " " << c;
  out << "\n";
  bool ok = rep.passed();
  if (p.realization) {
    const GeometryReport g = geometric_checks(p.tiling, *p.realization);
    out << "geometry: " << (g.passed() ? "ok" : "FAIL") << " (edge " << fmt("%.3e", g.max_edge_error)
        << ", angle " << fmt("%.3e", g.max_angle_error) << ", misfit "
        << fmt("%.3e", g.max_misfit) << ")\n";
    ok = ok && g.passed();
  }
  out << (ok ? "verified" : "NOT verified") << "\n";
  return ok ? kOk : kRefused;
}

int cmd_render(const std::string& in, const std::string& path, const RenderOptions& opts,
               std::ostream& out) {
  const Patch p = load_patch(in);
  Realization r;
  if (p.realization) {
    r = *p.realization;
  } else if (p.tiling.vertex_type) {
    r = realize(p.tiling, side_length(*p.tiling.vertex_type));
  } else {
    throw PreconditionError("patch has neither coordinates nor a vertex-type to realize");
  }
  const std::string svg = to_svg(p.tiling, r, opts);
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw IoError("cannot write " + path);
  const bool ok = std::fwrite(svg.data(), 1, svg.size(), f) == svg.size();
  if (std::fclose(f) != 0 || !ok) throw IoError("cannot write " + path);
  out << "wrote: " << path << "\n";
  return kOk;
}

int cmd_transform(bool is_dual, const std::string& in, const std::string& path, std::ostream& out,
                  std::ostream& err) {
  const Patch p = load_patch(in);
  const Tiling t = is_dual ? dual(p.tiling) : truncate(p.tiling);
  const auto r = try_realize(t, err);
  save_patch(path, t, r ? &*r : nullptr);
  out << "kind: " << to_string(t.kind) << "\n";
  out << "vertex-type: " << (t.vertex_type ? t.vertex_type->to_string() : std::string("none"))
      << "\n";
  out << "vertices: " << t.num_vertices() << "\n";
  out << "faces: " << t.num_faces() << "\n";
  out << "wrote: " << path << "\n";
  return kOk;
}

int cmd_isomorphic(const std::string& a, const std::string& b, std::ostream& out) {
  out << (is_isomorphic(load_patch(a).tiling, load_patch(b).tiling) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_stats(const std::string& path, bool as_json, std::ostream& out) {
  const Patch p = load_patch(path);
  const auto rows = layer_stats(p.tiling);
  if (as_json) {
    json j = json::array();
    for (const auto& s : rows) {
      j.push_back({{"layer", s.layer},
                   {"vertices", s.vertices},
                   {"edges", s.edges},
                   {"faces", s.faces},
                   {"boundary_vertices", s.boundary_vertices},
                   {"growth", s.growth}});
    }
    out << json{{"layers", j}}.dump(2) << "\n";
    return kOk;
  }
  out << "layer vertices edges faces boundary growth\n";
  for (const auto& s : rows) {
    out << s.layer << " " << s.vertices << " " << s.edges << " " << s.faces << " "
        << s.boundary_vertices << " " << fmt("%.4f", s.growth) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-regular hyperbolic tilings: criteria, construction, geometry", "hypertile"};
  app.require_subcommand(1, 1);

  std::string k_text, policy = "lex", out_path, in_a, in_b, color_by = "size";
  int layers = 2, degree = 3, max_entry = 20;
  bool force = false, as_json = false, no_disk = false, chords = false;
  RenderOptions ropts;

  auto* check = app.add_subcommand("check", "Existence and uniqueness criteria for a vertex-type");
  check->add_option("K", k_text, "Vertex-type, e.g. [4,5,4,5] or 3^7")->required();
  check->add_flag("--json", as_json, "Machine-readable output");

  auto* classify = app.add_subcommand("classify", "Degree-3 existence table");
  classify->add_option("--degree", degree, "Degree (only 3)")->required();
  classify->add_option("--max", max_entry, "Largest polygon size")->required();

  auto* bld = app.add_subcommand("build", "Build a layered patch and write it as JSON");
  bld->add_option("K", k_text, "Vertex-type")->required();
  bld->add_option("--layers", layers, "Layers to add around the initial fan")->required();
  bld->add_option("--policy", policy, "lex, seed:S or script:i,j,...");
  bld->add_option("--out", out_path, "Output JSON path")->required();
  bld->add_flag("--force", force, "Build without an existence guarantee; keep partial patches");

  auto* ver = app.add_subcommand("verify", "Re-check a JSON patch");
  ver->add_option("F", in_a, "Patch file")->required();

  auto* ren = app.add_subcommand("render", "Draw a JSON patch as SVG");
  ren->add_option("F", in_a, "Patch file")->required();
  ren->add_option("--out", out_path, "Output SVG path")->required();
  ren->add_option("--color-by", color_by, "size or layer")
      ->check(CLI::IsMember({"size", "layer"}));
  ren->add_option("--width", ropts.width, "Width in pixels")->check(CLI::PositiveNumber);
  ren->add_option("--height", ropts.height, "Height in pixels")->check(CLI::PositiveNumber);
  ren->add_option("--stroke", ropts.stroke_width, "Stroke width in disk units")
      ->check(CLI::PositiveNumber);
  ren->add_flag("--no-disk", no_disk, "Omit the boundary circle");
  ren->add_flag("--chords", chords, "Straight chords instead of geodesic arcs");

  auto* dua = app.add_subcommand("dual", "Dual of a JSON patch");
  dua->add_option("F", in_a, "Patch file")->required();
  dua->add_option("--out", out_path, "Output JSON path")->required();

  auto* tru = app.add_subcommand("truncate", "Truncation of an [n^q] JSON patch");
  tru->add_option("F", in_a, "Patch file")->required();
  tru->add_option("--out", out_path, "Output JSON path")->required();

  auto* iso = app.add_subcommand("isomorphic", "Compare two JSON patches");
  iso->add_option("A", in_a, "First patch")->required();
  iso->add_option("B", in_b, "Second patch")->required();

  auto* sta = app.add_subcommand("stats", "Per-layer counts and growth");
  sta->add_option("F", in_a, "Patch file")->required();
  sta->add_flag("--json", as_json, "Machine-readable output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoError;
  }

  try {
    if (*check) return cmd_check(k_text, as_json, out);
    if (*classify) return cmd_classify(degree, max_entry, out, err);
    if (*bld) return cmd_build(k_text, layers, policy, out_path, force, out, err);
    if (*ver) return cmd_verify(in_a, out);
    if (*ren) {
      ropts.color_by = color_by == "layer" ? ColorBy::Layer : ColorBy::FaceSize;
      ropts.draw_disk_boundary = !no_disk;
      ropts.edge_mode = chords ? EdgeMode::Chord : EdgeMode::Geodesic;
      return cmd_render(in_a, out_path, ropts, out);
    }
    if (*dua) return cmd_transform(true, in_a, out_path, out, err);
    if (*tru) return cmd_transform(false, in_a, out_path, out, err);
    if (*iso) return cmd_isomorphic(in_a, in_b, out);
    if (*sta) return cmd_stats(in_a, as_json, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kIoError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRefused;
  }
  return kIoError;
}

}  // namespace hypertile::cli
