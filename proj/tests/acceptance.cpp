// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hypertile/analysis.hpp"
#include "hypertile/cli.hpp"
#include "hypertile/construction.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/geometry.hpp"
#include "hypertile/isomorphism.hpp"
#include "hypertile/json_io.hpp"
#include "hypertile/render.hpp"
#include "hypertile/transform.hpp"
#include "hypertile/verify.hpp"

using namespace hypertile;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Independent oracles. They read only origin/twin/next_ccw/face.

// Face orbit length of every dart, following face_next = prev_ccw(twin).
std::vector<int> orbit_lengths(const Tiling& t) {
  const int nd = t.num_darts();
  std::vector<int> prev(nd);
  for (int a = 0; a < nd; ++a) prev[t.darts[a].next_ccw] = a;
  std::vector<int> len(nd, 0);
  for (int a = 0; a < nd; ++a) {
    if (len[a]) continue;
    std::vector<int> cyc;
    int b = a;
    do {
      cyc.push_back(b);
      b = prev[t.darts[b].twin];
    } while (b != a);
    for (int c : cyc) len[c] = static_cast<int>(cyc.size());
  }
  return len;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < n; ++i) {
      fwd = fwd && a[(s + i) % n] == b[i];
      bwd = bwd && a[(s + n - i) % n] == b[i];
    }
    if (fwd || bwd) return true;
  }
  return false;
}

struct Census {
  int interior = 0;
  int matching = 0;
  int euler = 0;
};

// Interior vertices are those with no outer dart.
Census census(const Tiling& t, const std::vector<int>& k) {
  const auto len = orbit_lengths(t);
  std::vector<char> outer(t.num_vertices(), 0);
  for (const auto& d : t.darts) {
    if (d.face == kNone) outer[d.origin] = 1;
  }
  Census c;
  std::vector<char> seen(t.num_darts(), 0);
  std::map<int, int> face_of_orbit;
  int inner_orbits = 0;
  std::vector<char> orbit_seen(t.num_darts(), 0);
  std::vector<int> prev(t.num_darts());
  for (int a = 0; a < t.num_darts(); ++a) prev[t.darts[a].next_ccw] = a;
  for (int a = 0; a < t.num_darts(); ++a) {
    if (orbit_seen[a]) continue;
    bool inner = true;
    int b = a;
    do {
      orbit_seen[b] = 1;
      inner = inner && t.darts[b].face != kNone;
      b = prev[t.darts[b].twin];
    } while (b != a);
    inner_orbits += inner;
  }
  c.euler = t.num_vertices() - t.num_darts() / 2 + inner_orbits;
  for (int a = 0; a < t.num_darts(); ++a) {
    const int v = t.darts[a].origin;
    if (seen[a] || outer[v]) continue;
    std::vector<int> around;
    for (int b = a; !seen[b]; b = t.darts[b].next_ccw) {
      seen[b] = 1;
      around.push_back(len[b]);
    }
    ++c.interior;
    c.matching += cyclic_equal(around, k);
  }
  return c;
}

double disk_distance(HPoint z, HPoint w) {
  const double num = 2 * std::norm(z - w);
  const double den = (1 - std::norm(z)) * (1 - std::norm(w));
  return std::acosh(1 + num / den);
}

// Degree-3 existence read straight off the three disjuncts.
bool degree3_oracle(int a, int b, int c) {
  auto disjuncts = [](int x, int y, int z) {
    if (x == y && y == z && x >= 7) return true;
    if (x == y && x % 2 == 0 && x != z) {
      const int n = x / 2, q = z;
      if (2 * (n + q) < n * q) return true;  // 1/n + 1/q < 1/2
    }
    if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) {
      const int l = x / 2, m = y / 2, n = z / 2;
      if (l != m && m != n && l != n && m * n + l * n + l * m < l * m * n) return true;
    }
    return false;
  };
  std::vector<int> v{a, b, c};
  std::sort(v.begin(), v.end());
  do {
    if (disjuncts(v[0], v[1], v[2])) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

// ---------------------------------------------------------------------------

struct BuildCase {
  std::string name;
  VertexType k;
  int layers;
  BuildPolicy policy;
  bool force;
};

std::vector<BuildCase> criterion3_cases(Outcome& o) {
  std::vector<BuildCase> cases;
  cases.push_back({"[4,5,4,5]", VertexType({4, 5, 4, 5}), 3, BuildPolicy::lexicographic(), false});
  const VertexType k5444({5, 4, 4, 4});
  if (const auto w = condition_a(k5444)) {
    o.note("[4,4,4,5] skipped, Condition A fails (" + w->to_string() + ")");
  } else {
    cases.push_back({"[4,4,4,5]", k5444, 3, BuildPolicy::lexicographic(), false});
  }
  cases.push_back({"3^7", VertexType(std::vector<int>(7, 3)), 3, BuildPolicy::lexicographic(), false});
  cases.push_back({"4^5", VertexType(std::vector<int>(5, 4)), 3, BuildPolicy::lexicographic(), false});
  cases.push_back({"6^4", VertexType(std::vector<int>(4, 6)), 2, BuildPolicy::lexicographic(), false});
  // Outside both existence theorems (Condition B fails), so built with
  // --force under a seed whose choices avoid the dead ends.
  cases.push_back({"[4,3,3,3,4,3]", VertexType({4, 3, 3, 3, 4, 3}), 3, BuildPolicy::seeded(39), true});
  return cases;
}

Outcome criterion1() {
  Outcome o;
  const std::string a = run_cli({"check", "[4,5,4,5]"});
  o.expect(has_line(a, "condition-A: pass"), "[4,5,4,5] Condition A");
  o.expect(has_line(a, "pair-deterministic: true"), "[4,5,4,5] pair-deterministic");
  o.expect(has_line(a, "verdict: ExistsThm1"), "[4,5,4,5] ExistsThm1");

  const std::string b = run_cli({"check", "[5,3,4,3,3]"});
  o.expect(has_line(b, "condition-A: fail, A: [3,3] and [3,3] appear but [3,3,3] does not"),
           "[5,3,4,3,3] Condition A witness");
  o.expect(has_line(b, "verdict: Unknown"), "[5,3,4,3,3] verdict Unknown");

  const std::string c = run_cli({"check", "[4,4,4,6]"});
  o.expect(has_line(c, "pair-deterministic: false"), "[4,4,4,6] pair-determinism fails");
  o.expect(has_line(c, "  pair [4,4] continues as [4,4,4,6] [4,4,6,4]"),
           "[4,4,4,6] continuations of 44");

  const std::string d = run_cli({"check", "[4,3,3,3,4,3]"});
  o.expect(has_line(d, "pair-deterministic: false"), "[4,3,3,3,4,3] pair-determinism fails");
  o.expect(has_line(d, "  pair [3,3] continues as [3,3,3,4,3,4] [3,3,4,3,4,3]"),
           "[4,3,3,3,4,3] continuations of 33");
  o.note("4 tuples checked through the CLI");
  return o;
}

Outcome criterion2() {
  Outcome o;
  int rows = 0, mismatches = 0;
  for (int p = 3; p <= 20; ++p) {
    for (int q = p; q <= 20; ++q) {
      for (int r = q; r <= 20; ++r) {
        ++rows;
        const bool lib = classify_degree3(VertexType({p, q, r})).exists;
        if (lib != degree3_oracle(p, q, r)) {
          ++mismatches;
          o.expect(false, VertexType({p, q, r}).to_string() + " disagrees with the oracle");
        }
      }
    }
  }
  const std::vector<std::pair<std::vector<int>, bool>> spots = {
      {{7, 7, 7}, true}, {{7, 7, 8}, false},  {{12, 12, 4}, true},
      {{6, 8, 10}, true}, {{5, 6, 7}, false}, {{8, 8, 4}, false}};
  for (const auto& [e, want] : spots) {
    o.expect(classify_degree3(VertexType(e)).exists == want, word_to_string(e) + " spot row");
  }
  o.expect(classify_degree3(VertexType({8, 8, 4})).label == Degree3Case::AngleSumFailure,
           "[4,8,8] labelled as an angle-sum failure");
  o.note(std::to_string(rows) + " canonical triples, " + std::to_string(mismatches) +
         " mismatches, 6 spot rows");
  return o;
}

struct Built {
  std::string name;
  VertexType k;
  Tiling t;
};

Outcome criterion3(std::vector<Built>& built) {
  Outcome o;
  for (const auto& c : criterion3_cases(o)) {
    BuildResult res;
    try {
      res = build(c.k, c.layers, c.policy, c.force);
    } catch (const Error& e) {
      o.expect(false, c.name + " build threw: " + e.what());
      continue;
    }
    if (!res.complete) {
      o.expect(false, c.name + " incomplete: " + res.failure);
      continue;
    }
    const Tiling& t = res.tiling;
    const Census cs = census(t, c.k.entries());
    const VerifyReport rep = verify(t);
    o.expect(cs.interior > 0 && cs.matching == cs.interior, c.name + " interior vertex-types");
    o.expect(cs.euler == 1, c.name + " Euler characteristic");
    const CheckResult* prop = rep.find(c.k.contains(3) ? "property-1'" : "property-1");
    o.expect(prop && prop->passed, c.name + " boundary property");
    bool increasing = true;
    for (std::size_t i = 1; i < rep.layer_vertex_counts.size(); ++i) {
      increasing = increasing && rep.layer_vertex_counts[i] > rep.layer_vertex_counts[i - 1];
    }
    o.expect(increasing && rep.layer_vertex_counts.size() == static_cast<std::size_t>(c.layers + 1),
             c.name + " layer counts increase");
    o.expect(rep.passed(), c.name + " verify");
    std::string counts;
    for (int n : rep.layer_vertex_counts) counts += (counts.empty() ? "" : "/") + std::to_string(n);
    o.note(c.name + " " + std::to_string(c.layers) + " layers (" + c.policy.to_string() +
           (c.force ? ", forced" : "") + "): " + std::to_string(cs.matching) + "/" +
           std::to_string(cs.interior) + " interior ok, layers " + counts);
    built.push_back({c.name, c.k, t});
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  int count = 0;
  double worst = 0;
  for (int p = 3; p <= 12; ++p) {
    for (int q = 3; q <= 12; ++q) {
      if (2 * (p + q) >= p * q) continue;
      const double closed = 2 * std::acosh(std::cos(kPi / p) / std::sin(kPi / q));
      const double l0 = side_length(VertexType(std::vector<int>(q, p))).side_length;
      worst = std::max(worst, std::abs(l0 - closed));
      o.expect(std::abs(l0 - closed) <= 1e-10, "[" + std::to_string(p) + "^" + std::to_string(q) + "]");
      ++count;
    }
  }
  const double closed37 = 2 * std::acosh(std::cos(kPi / 3) / std::sin(kPi / 7));
  // The quoted 1.0906 is a 4-digit approximation; the closed form gives 1.09055.
  o.expect(std::abs(closed37 - 1.0906) < 1e-4, "3^7 closed form near 1.0906");
  const double golden37 = 1.0905496635;  // frozen from the closed form above
  o.expect(std::abs(closed37 - golden37) < 1e-10, "golden value matches the closed form");
  const double l37 = side_length(VertexType(std::vector<int>(7, 3))).side_length;
  o.expect(std::abs(l37 - golden37) < 1e-10, "3^7 solver against the golden value");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d regular types, max deviation %.2e; 3^7 l0 = %.10f", count,
                worst, l37);
  o.note(buf);
  return o;
}

Outcome criterion5(const std::vector<Built>& built) {
  Outcome o;
  for (const auto& b : built) {
    const GeomParams g = side_length(b.k);
    Realization r;
    try {
      r = realize(b.t, g);
    } catch (const Error& e) {
      o.expect(false, b.name + " realize threw: " + e.what());
      continue;
    }
    double edge = 0, angle = 0;
    for (int a = 0; a < b.t.num_darts(); ++a) {
      const auto& d = b.t.darts[a];
      edge = std::max(edge, std::abs(disk_distance(r.coords[d.origin],
                                                   r.coords[b.t.darts[d.twin].origin]) - g.side_length));
    }
    // Angle sums from the polygon sizes, with the oracle's own trigonometry.
    const auto len = orbit_lengths(b.t);
    std::vector<char> outer(b.t.num_vertices(), 0);
    for (const auto& d : b.t.darts) {
      if (d.face == kNone) outer[d.origin] = 1;
    }
    std::vector<double> sum(b.t.num_vertices(), 0.0);
    for (int a = 0; a < b.t.num_darts(); ++a) {
      const int v = b.t.darts[a].origin;
      if (outer[v]) continue;
      // Angle at v between this dart and the next one clockwise, measured in
      // the chart that moves v to the origin.
      const HPoint z = r.coords[v];
      auto move = [&](HPoint w) { return (w - z) / (1.0 - std::conj(z) * w); };
      const int nxt = b.t.darts[a].next_ccw;
      const HPoint p1 = move(r.coords[b.t.darts[b.t.darts[a].twin].origin]);
      const HPoint p2 = move(r.coords[b.t.darts[b.t.darts[nxt].twin].origin]);
      double ang = std::arg(p2) - std::arg(p1);
      while (ang <= 0) ang += 2 * kPi;
      while (ang > 2 * kPi) ang -= 2 * kPi;
      sum[v] += ang;
    }
    (void)len;
    for (int v = 0; v < b.t.num_vertices(); ++v) {
      if (!outer[v]) angle = std::max(angle, std::abs(sum[v] - 2 * kPi));
    }
    o.expect(edge <= 1e-8, b.name + " edge lengths");
    o.expect(angle <= 1e-6, b.name + " angle sums");
    o.expect(r.max_misfit < 1e-6, b.name + " closure misfit");
    o.expect(geometric_checks(b.t, r).passed(), b.name + " library geometric checks");
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s edge %.1e angle %.1e misfit %.1e", b.name.c_str(), edge,
                  angle, r.max_misfit);
    o.note(buf);
  }
  return o;
}

// Faces within radius 2 of v, re-rooted at the image of v.
Code rooted_ball_code(const Tiling& t, int v) {
  FaceSetInput in;
  for (const auto& x : t.vertices) in.vertex_layers.push_back(x.layer);
  for (int f : ball_faces(t, v, 2)) {
    in.cycles.push_back(t.face_vertices(f));
    in.face_layers.push_back(0);
  }
  const FaceSetResult res = tiling_from_faces(in);
  const int root = res.vertex_map[v];
  Code best;
  bool first = true;
  for (int a : res.tiling.darts_around(root)) {
    for (bool m : {false, true}) {
      Code c = canonical_code(res.tiling, a, m);
      if (first || c < best) best = std::move(c);
      first = false;
    }
  }
  return best;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& name : {"[4,5,4,5]", "3^7"}) {
    const VertexType k = VertexType::parse(name);
    std::vector<Code> codes;
    std::vector<BuildPolicy> pols = {BuildPolicy::lexicographic()};
    for (std::uint64_t s : {1, 2, 3, 4, 5}) pols.push_back(BuildPolicy::seeded(s));
    for (const auto& p : pols) codes.push_back(canonical_code(build(k, 3, p).tiling));
    bool same = true;
    for (const auto& c : codes) same = same && c == codes.front();
    o.expect(same, std::string(name) + " policies agree");
    o.note(std::string(name) + ": lex + 5 seeds give " + (same ? "one" : "several") +
           " canonical code(s)");
  }

  const Tiling t = build(VertexType(std::vector<int>(7, 3)), 3, BuildPolicy::lexicographic()).tiling;
  std::vector<int> centres;
  for (int v = 0; v < t.num_vertices() && centres.size() < 10; ++v) {
    if (!t.vertices[v].interior) continue;
    bool full = true;
    for (int f : ball_faces(t, v, 1)) {
      for (int w : t.face_vertices(f)) full = full && t.vertices[w].interior;
    }
    if (full) centres.push_back(v);
  }
  o.expect(centres.size() == 10, "10 interior vertices with complete radius-2 balls");
  std::vector<Code> codes;
  for (int v : centres) codes.push_back(rooted_ball_code(t, v));
  bool same = !codes.empty();
  for (const auto& c : codes) same = same && c == codes.front();
  o.expect(same, "3^7 radius-2 rooted balls agree");
  o.note("3^7 radius-2 balls at " + std::to_string(centres.size()) + " vertices: " +
         (same ? "pairwise isomorphic" : "differ"));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const VertexType k({4, 4, 4, 6});
  // Frozen from seed:4 and seed:12.
  const BuildPolicy with_chain = BuildPolicy::parse("script:1,0,0,0,1,0,1,0,0,0");
  const BuildPolicy without = BuildPolicy::parse("script:0,1,0,0,1,0,1,1,1,0,0");
  const BuildResult a = build(k, 3, with_chain, true);
  const BuildResult b = build(k, 3, without, true);
  o.expect(a.complete && b.complete, "both scripted builds complete");
  o.expect(verify(a.tiling).passed() && verify(b.tiling).passed(), "both patches verify");
  o.expect(a.tiling.layer_count == 3 && b.tiling.layer_count == 3, "3 layers each");
  const bool iso = is_isomorphic(a.tiling, b.tiling);
  o.expect(!iso, "patches reported distinct");
  const int ca = count_straight_chains(a.tiling, 6, 4, 3);
  const int cb = count_straight_chains(b.tiling, 6, 4, 3);
  o.expect((ca > 0) != (cb > 0), "hexagon-3 squares-hexagon chain in exactly one patch");
  o.note(with_chain.to_string() + ": " + std::to_string(ca) + " chain(s); " + without.to_string() +
         ": " + std::to_string(cb) + " chain(s); isomorphic=" + (iso ? "true" : "false"));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Tiling t37 = build(VertexType(std::vector<int>(7, 3)), 3, BuildPolicy::lexicographic()).tiling;
  const Tiling d = dual(t37);
  const Census cd = census(d, {7, 7, 7});
  o.expect(cd.interior > 0 && cd.matching == cd.interior, "dual interior vertices are [7,7,7]");
  o.expect(verify(d).passed(), "dual verifies");
  o.expect(d.vertex_type && *d.vertex_type == VertexType({7, 7, 7}), "dual vertex-type [7,7,7]");

  const Tiling t64 = build(VertexType(std::vector<int>(4, 6)), 2, BuildPolicy::lexicographic()).tiling;
  const Tiling tr = truncate(t64);
  const Census ct = census(tr, {12, 12, 4});
  o.expect(ct.interior > 0 && ct.matching == ct.interior, "truncation interior vertices are [12,12,4]");
  o.expect(verify(tr).passed(), "truncation verifies");
  o.note("dual: " + std::to_string(cd.matching) + "/" + std::to_string(cd.interior) +
         " interior [7,7,7]; truncation: " + std::to_string(ct.matching) + "/" +
         std::to_string(ct.interior) + " interior [4,12,12]");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const VertexType k({4, 5, 4, 5});
  const Tiling t = build(k, 3, BuildPolicy::lexicographic()).tiling;
  const Realization r = realize(t, side_length(k));
  const Patch p = from_json(to_json(t, &r));
  o.expect(verify(p.tiling).passed(), "re-verify after load");
  o.expect(canonical_code(p.tiling) == canonical_code(t), "canonical codes equal");
  bool coords_equal = p.realization && p.realization->coords == r.coords;
  o.expect(coords_equal, "coordinates restored exactly");

  const auto dir = std::filesystem::temp_directory_path() / "hypertile_acceptance";
  std::filesystem::create_directories(dir);
  const std::string json_path = (dir / "p.json").string();
  save_patch(json_path, t, &r);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string s1 = (dir / "a.svg").string(), s2 = (dir / "b.svg").string();
  int c1 = 0, c2 = 0;
  run_cli({"render", json_path, "--out", s1}, &c1);
  run_cli({"render", json_path, "--out", s2}, &c2);
  const std::string svg1 = slurp(s1), svg2 = slurp(s2);
  o.expect(c1 == 0 && c2 == 0 && !svg1.empty() && svg1 == svg2, "SVG byte-identical across runs");

  int arcs = 0;
  double worst = 0;
  for (int a = 0; a < t.num_darts(); ++a) {
    const auto& d = t.darts[a];
    if (d.twin < a) continue;
    const GeodesicArc g = geodesic_arc(r.coords[d.origin], r.coords[t.darts[d.twin].origin]);
    if (g.straight) continue;
    ++arcs;
    worst = std::max(worst, std::abs(std::norm(g.center) - (g.radius * g.radius + 1)));
  }
  o.expect(worst <= 1e-9, "arcs orthogonal to the unit circle");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d arcs, max |c|^2-r^2-1 = %.1e; %zu SVG bytes", arcs, worst,
                svg1.size());
  o.note(buf);
  return o;
}

}  // namespace

int main() {
  std::vector<Built> built;
  std::vector<std::function<Outcome()>> criteria = {
      criterion1,
      criterion2,
      [&] { return criterion3(built); },
      criterion4,
      [&] { return criterion5(built); },
      criterion6,
      criterion7,
      criterion8,
      criterion9,
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
