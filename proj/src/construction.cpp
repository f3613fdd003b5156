#include "hypertile/construction.hpp"

#include <charconv>

#include "hypertile/errors.hpp"
#include "hypertile/transform.hpp"
#include "hypertile/verify.hpp"

namespace hypertile {

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad policy '" + std::string(whole) + "'");
  }
  return value;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

BuildPolicy BuildPolicy::parse(std::string_view text) {
  if (text == "lex" || text == "lexicographic") return lexicographic();
  if (text.starts_with("seed:")) return seeded(parse_u64(text.substr(5), text));
  if (text.starts_with("script:")) {
    std::vector<int> choices;
    std::string_view rest = text.substr(7);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      choices.push_back(static_cast<int>(parse_u64(token, text)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
      if (rest.empty()) throw ParseError("bad policy '" + std::string(text) + "'");
    }
    return scripted(std::move(choices));
  }
  throw ParseError("unknown policy '" + std::string(text) + "' (lex, seed:N, script:i,j,...)");
}

std::string BuildPolicy::to_string() const {
  switch (mode_) {
    case Mode::Lexicographic: return "lex";
    case Mode::SeededRandom: return "seed:" + std::to_string(seed_);
    case Mode::Scripted: {
      std::string s = "script:";
      for (std::size_t i = 0; i < script_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(script_[i]);
      }
      return s;
    }
  }
  return "?";
}

PolicyState::PolicyState(BuildPolicy policy) : policy_(std::move(policy)), rng_(policy_.seed()) {}

int PolicyState::choose(std::span<const Word> candidates) {
  const int n = static_cast<int>(candidates.size());
  if (n == 0) throw InternalError("policy asked to choose among no candidates");
  if (n == 1) return 0;
  int idx = 0;
  switch (policy_.mode()) {
    case BuildPolicy::Mode::Lexicographic:
      idx = 0;
      break;
    case BuildPolicy::Mode::SeededRandom:
      idx = static_cast<int>(rng_() % static_cast<std::uint64_t>(n));
      break;
    case BuildPolicy::Mode::Scripted: {
      const auto& script = policy_.script();
      if (cursor_ >= script.size()) {
        throw PolicyError("script exhausted after " + std::to_string(script.size()) + " choices");
      }
      idx = script[cursor_++];
      if (idx < 0 || idx >= n) {
        throw PolicyError("script choice " + std::to_string(idx) + " at step " +
                          std::to_string(cursor_ - 1) + " but only " + std::to_string(n) +
                          " continuations");
      }
      break;
    }
  }
  choices_.push_back(idx);
  return idx;
}

BoundaryRule boundary_rule(const VertexType& k) {
  return k.contains(3) ? BoundaryRule::Triangle : BoundaryRule::TriangleFree;
}

Tiling initial_fan(const VertexType& k) {
  if (!is_hyperbolic(k)) {
    throw PreconditionError("angle-sum of " + k.to_string() + " is " + angle_sum(k).to_string() +
                            ", not > 2");
  }
  const auto& sizes = k.entries();
  const int d = k.degree();
  FaceSetInput in;
  int next_id = 1;
  std::vector<int> spoke(d);
  for (int i = 0; i < d; ++i) spoke[i] = next_id++;
  for (int i = 0; i < d; ++i) {
    std::vector<int> cyc{0, spoke[i]};
    for (int j = 0; j < sizes[i] - 3; ++j) cyc.push_back(next_id++);
    cyc.push_back(spoke[(i + 1) % d]);
    in.cycles.push_back(std::move(cyc));
    in.face_layers.push_back(0);
  }
  in.vertex_layers.assign(next_id, 0);
  Tiling t = tiling_from_faces(in).tiling;
  t.vertex_type = k;
  t.layer_count = 0;
  t.kind = PatchKind::Construction;
  return t;
}

BasePair choose_base_vertices(const Tiling& t, const BoundaryCycle& bc) {
  if (!t.vertex_type) throw PreconditionError("patch has no target vertex-type");
  const bool triangles = boundary_rule(*t.vertex_type) == BoundaryRule::Triangle;
  const int n = bc.size();
  BasePair best;
  for (int i = 0; i < n; ++i) {
    const int p = (i + n - 1) % n;
    const int val0 = bc.valences[i];
    const int valn = bc.valences[p];
    bool ok = false;
    if (!triangles) {
      ok = val0 == 3 && valn == 2;
    } else if (val0 == 3 || val0 == 4) {
      if (valn == 2) {
        ok = true;
      } else if (valn == 3) {
        const int vn = bc.vertices[p];
        const int edge = t.darts[t.boundary_dart_at(vn)].next_ccw;  // vn -> v0
        ok = t.faces[t.darts[edge].face].size == 3;
      }
    }
    if (ok && (best.v0 == kNone || bc.vertices[i] < bc.vertices[best.v0])) {
      best.v0 = i;
      best.vn = p;
    }
  }
  if (best.v0 == kNone) {
    throw InternalError("no admissible base vertices (v0, vn) on a boundary of " +
                        std::to_string(n) + " vertices");
  }
  return best;
}

Word boundary_word(const Tiling& t, int v) {
  const int bo = t.boundary_dart_at(v);
  if (bo == kNone) throw PreconditionError("vertex " + std::to_string(v) + " is not on the boundary");
  Word w;
  for (int a = t.darts[bo].next_ccw; a != bo; a = t.darts[a].next_ccw) {
    w.push_back(t.faces[t.darts[a].face].size);
  }
  return w;
}

FanStep complete_fan(Tiling& t, int v, PolicyState& policy) {
  if (!t.vertex_type) throw PreconditionError("patch has no target vertex-type");
  const VertexType& k = *t.vertex_type;
  const int d = k.degree();

  FanStep step;
  step.vertex = v;
  step.word = boundary_word(t, v);
  const int ell = static_cast<int>(step.word.size());
  if (ell >= d) {
    throw ContinuationError("vertex " + std::to_string(v) + " already has " + std::to_string(ell) +
                                " faces but is still on the boundary",
                            v, step.word);
  }
  auto conts = continuations(k, step.word);
  if (conts.empty()) {
    throw ContinuationError("word " + word_to_string(step.word) + " at vertex " +
                                std::to_string(v) + " does not appear in " + k.to_string(),
                            v, step.word);
  }
  step.total_continuations = static_cast<int>(conts.size());

  const int bo = t.boundary_dart_at(v);
  const int a0 = t.darts[bo].next_ccw;
  const int bi = t.darts[a0].twin;
  const int u_prev = t.head(bo);
  const int u_next = t.head(a0);

  // Keep continuations whose first and last new face leave an appearing word
  // at the two flanking boundary vertices.
  const Word wp = boundary_word(t, u_prev);
  const Word wn = boundary_word(t, u_next);
  for (const auto& c : conts) {
    Word p{c[ell]};
    p.insert(p.end(), wp.begin(), wp.end());
    Word q = wn;
    q.push_back(c[d - 1]);
    const auto fits = [&](const Word& w) { return static_cast<int>(w.size()) < d && appears(k, w); };
    if (fits(p) && fits(q)) step.candidates.push_back(c);
  }
  if (step.candidates.empty()) step.candidates = conts;
  step.chosen = policy.choose(step.candidates);
  const Word& c = step.candidates[step.chosen];

  const int r = d - ell;
  const int layer = t.layer_count + 1;
  auto new_vertex = [&] {
    t.vertices.push_back(Vertex{false, layer, kNone});
    return t.num_vertices() - 1;
  };
  auto new_edge = [&](int from, int to, int face) {
    const int a = t.num_darts();
    t.darts.push_back(Dart{from, a + 1, kNone, kNone, face});
    t.darts.push_back(Dart{to, a, kNone, kNone, kNone});
    return a;
  };
  auto link = [&](int a, int b) {
    t.darts[a].next_ccw = b;
    t.darts[b].prev_ccw = a;
  };
  auto twin = [&](int a) { return t.darts[a].twin; };

  const int f0 = t.num_faces();
  for (int j = 0; j < r; ++j) t.faces.push_back(Face{c[ell + j], layer, kNone});

  std::vector<int> q(r + 1), spoke(r + 1);
  q[0] = u_prev;
  q[r] = u_next;
  spoke[0] = bo;
  spoke[r] = a0;
  for (int j = 1; j < r; ++j) {
    q[j] = new_vertex();
    spoke[j] = new_edge(v, q[j], kNone);
  }
  for (int j = 0; j < r; ++j) {
    t.darts[spoke[j]].face = f0 + j;
    t.darts[twin(spoke[j + 1])].face = f0 + j;
    t.faces[f0 + j].dart = spoke[j];
  }

  // Outer arc of face j runs q[j] -> new corners -> q[j+1].
  std::vector<int> first_arc(r), last_arc(r);
  for (int j = 0; j < r; ++j) {
    const int corners = c[ell + j] - 3;
    std::vector<int> fwd;
    int from = q[j];
    for (int i = 0; i <= corners; ++i) {
      const int to = i < corners ? new_vertex() : q[j + 1];
      fwd.push_back(new_edge(from, to, f0 + j));
      from = to;
    }
    for (int i = 1; i <= corners; ++i) {
      link(fwd[i], twin(fwd[i - 1]));
      link(twin(fwd[i - 1]), fwd[i]);
      t.vertices[t.darts[fwd[i]].origin].dart = fwd[i];
    }
    first_arc[j] = fwd.front();
    last_arc[j] = fwd.back();
  }

  // Rotation at v: bo, spokes, a0.
  for (int j = 0; j < r; ++j) link(spoke[j], spoke[j + 1]);
  // u_prev: new arc dart goes right after its outer dart.
  {
    const int in = twin(bo);
    const int outer = t.darts[in].prev_ccw;
    link(outer, first_arc[0]);
    link(first_arc[0], in);
  }
  // u_next: the arc's last edge goes right after bi.
  {
    const int after = t.darts[bi].next_ccw;
    const int y = twin(last_arc[r - 1]);
    link(bi, y);
    link(y, after);
  }
  for (int j = 1; j < r; ++j) {
    const int in = twin(spoke[j]);
    const int y = twin(last_arc[j - 1]);
    const int x = first_arc[j];
    link(in, y);
    link(y, x);
    link(x, in);
    t.vertices[q[j]].dart = in;
  }
  t.vertices[v].interior = true;
  return step;
}

void add_layer(Tiling& t, PolicyState& policy, std::vector<FanStep>* trace) {
  const BoundaryCycle bc = boundary_cycle(t);
  const BasePair base = choose_base_vertices(t, bc);
  const int n = bc.size();
  for (int j = 0; j < n; ++j) {
    FanStep step = complete_fan(t, bc.vertices[(base.v0 + j) % n], policy);
    if (trace) trace->push_back(std::move(step));
  }
  ++t.layer_count;
  t.rebuild_indices();
  const VerifyReport report = verify(t);
  if (!report.passed()) {
    throw InternalError("layer " + std::to_string(t.layer_count) + " failed verification:\n" +
                        report.summary());
  }
}

namespace {

BuildResult build_degree3(const VertexType& k, int layers, const BuildPolicy& policy) {
  const Degree3Classification cls = classify_degree3(k);
  BuildResult inner;
  BuildResult out;
  switch (cls.label) {
    case Degree3Case::RegularTriple: {
      const int p = k.entries()[0];
      inner = build(VertexType(std::vector<int>(p, 3)), layers + 1, policy);
      out.tiling = dual(inner.tiling);
      break;
    }
    case Degree3Case::TruncatedPair: {
      const auto& e = k.canonical_form();
      const int q = (e[0] == e[1]) ? e[2] : (e[1] == e[2] ? e[0] : e[1]);
      const int two_n = (e[0] == e[1]) ? e[0] : (e[1] == e[2] ? e[1] : e[0]);
      inner = build(VertexType(std::vector<int>(q, two_n / 2)), layers + 1, policy);
      out.tiling = truncate(inner.tiling);
      break;
    }
    default:
      throw RefusalError("no constructive route for " + k.to_string() + " (" +
                         to_string(cls.label) + "); only [p,p,p] and [2n,2n,q] are built");
  }
  out.trace = std::move(inner.trace);
  out.choices = std::move(inner.choices);
  return out;
}

}  // namespace

BuildResult build(const VertexType& k, int layers, const BuildPolicy& policy, bool force) {
  if (layers < 0) throw PreconditionError("layer count must be >= 0");
  const ExistenceVerdict verdict = existence_verdict(k);
  if (!verdict.exists() && !force) {
    throw RefusalError("refusing to build " + k.to_string() + " (" + to_string(verdict.status) +
                       "): " + join(verdict.reasons, "; "));
  }
  if (k.degree() == 3 && verdict.exists()) return build_degree3(k, layers, policy);

  BuildResult res;
  res.tiling = initial_fan(k);
  PolicyState state(policy);
  for (int i = 0; i < layers; ++i) {
    if (!force) {
      add_layer(res.tiling, state, &res.trace);
      continue;
    }
    try {
      add_layer(res.tiling, state, &res.trace);
    } catch (const ContinuationError& e) {
      res.complete = false;
      res.failure = e.what();
      res.failed_vertex = e.vertex();
      res.offending_word = e.word();
      break;
    } catch (const InternalError& e) {
      res.complete = false;
      res.failure = e.what();
      break;
    }
  }
  res.choices = state.choices();
  return res;
}

}  // namespace hypertile
