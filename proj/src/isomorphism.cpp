#include "hypertile/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace hypertile {

namespace {

// Generates a rooted code one dart at a time, so comparisons can stop early.
class CodeWalker {
 public:
  CodeWalker(const Tiling& t, int root, bool mirrored)
      : t_(t), mirrored_(mirrored), label_(t.darts.size(), -1) {
    label_[root] = 0;
    order_.push_back(root);
  }

  bool done() const { return pos_ >= order_.size(); }

  // Emits the next three code entries.
  void step(std::int32_t out[3]) {
    const int d = order_[pos_++];
    const Dart& dart = t_.darts[d];
    const int rot = mirrored_ ? dart.prev_ccw : dart.next_ccw;
    const int face = mirrored_ ? t_.darts[dart.twin].face : dart.face;
    out[0] = visit(dart.twin);
    out[1] = visit(rot);
    out[2] = face == kNone ? 0 : t_.faces[face].size;
  }

 private:
  std::int32_t visit(int d) {
    if (label_[d] < 0) {
      label_[d] = static_cast<std::int32_t>(order_.size());
      order_.push_back(d);
    }
    return label_[d];
  }

  const Tiling& t_;
  bool mirrored_;
  std::vector<std::int32_t> label_;
  std::vector<int> order_;
  std::size_t pos_ = 0;
};

// -1, 0, 1 like memcmp, against `target`; stops at the first difference.
int compare_code(const Tiling& t, int root, bool mirrored, const Code& target) {
  CodeWalker w(t, root, mirrored);
  std::size_t i = 0;
  std::int32_t buf[3];
  while (!w.done()) {
    w.step(buf);
    for (int j = 0; j < 3; ++j, ++i) {
      if (i >= target.size()) return 1;
      if (buf[j] != target[i]) return buf[j] < target[i] ? -1 : 1;
    }
  }
  return i == target.size() ? 0 : -1;
}

using Signature = std::tuple<int, int, int>;

Signature signature(const Tiling& t, int d, bool mirrored) {
  const Dart& dart = t.darts[d];
  const int left = mirrored ? t.darts[dart.twin].face : dart.face;
  const int right = mirrored ? dart.face : t.darts[dart.twin].face;
  return {left == kNone ? 0 : t.faces[left].size, right == kNone ? 0 : t.faces[right].size,
          t.degree(dart.origin)};
}

std::vector<int> sorted_sizes(const Tiling& t) {
  std::vector<int> s;
  for (const auto& f : t.faces) s.push_back(f.size);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> sorted_degrees(const Tiling& t) {
  std::vector<int> s;
  for (int v = 0; v < t.num_vertices(); ++v) s.push_back(t.degree(v));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

Code canonical_code(const Tiling& t, int root, bool mirrored) {
  Code code;
  code.reserve(3 * t.darts.size());
  CodeWalker w(t, root, mirrored);
  std::int32_t buf[3];
  while (!w.done()) {
    w.step(buf);
    code.insert(code.end(), buf, buf + 3);
  }
  return code;
}

Code canonical_code(const Tiling& t) {
  Code best;
  for (int d = 0; d < t.num_darts(); ++d) {
    for (bool m : {false, true}) {
      if (best.empty() || compare_code(t, d, m, best) < 0) best = canonical_code(t, d, m);
    }
  }
  return best;
}

bool is_isomorphic(const Tiling& a, const Tiling& b) {
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  if (a.num_darts() == 0) return true;
  if (sorted_sizes(a) != sorted_sizes(b) || sorted_degrees(a) != sorted_degrees(b)) return false;

  // Root a at a dart whose signature is rarest in b.
  std::vector<Signature> sig_b(b.darts.size());
  for (int d = 0; d < b.num_darts(); ++d) sig_b[d] = signature(b, d, false);
  std::vector<Signature> sorted_b = sig_b;
  std::sort(sorted_b.begin(), sorted_b.end());
  int root = 0;
  std::size_t best = sorted_b.size() + 1;
  for (int d = 0; d < a.num_darts(); ++d) {
    const Signature s = signature(a, d, false);
    const auto range = std::equal_range(sorted_b.begin(), sorted_b.end(), s);
    const auto n = static_cast<std::size_t>(range.second - range.first);
    if (n < best) {
      best = n;
      root = d;
    }
  }
  const Code target = canonical_code(a, root, false);
  const Signature want = signature(a, root, false);
  for (bool m : {false, true}) {
    for (int d = 0; d < b.num_darts(); ++d) {
      if (signature(b, d, m) != want) continue;
      if (compare_code(b, d, m, target) == 0) return true;
    }
  }
  return false;
}

}  // namespace hypertile
