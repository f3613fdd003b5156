#include "hypertile/geometry.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <optional>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHardMisfit = 1e-3;

using cplx = std::complex<double>;

// Corners of the regular k-gon with side l centred at the origin, counter-clockwise.
std::vector<HPoint> standard_polygon(int k, double l) {
  const double R = std::asinh(std::sinh(l / 2) / std::sin(kPi / k));
  const double rho = std::tanh(R / 2);
  std::vector<HPoint> pts(k);
  for (int j = 0; j < k; ++j) pts[j] = std::polar(rho, 2 * kPi * j / k);
  return pts;
}

}  // namespace

double interior_angle(int k, double l) {
  if (k < 3) throw PreconditionError("polygon needs at least 3 sides");
  if (!(l >= 0)) throw PreconditionError("side length must be >= 0");
  return 2 * std::asin(std::cos(kPi / k) / std::cosh(l / 2));
}

double total_angle(const VertexType& k, double l) {
  double s = 0;
  for (int e : k.entries()) s += interior_angle(e, l);
  return s;
}

GeomParams side_length(const VertexType& k, double tol) {
  if (!is_hyperbolic(k)) {
    throw PreconditionError("no side length for " + k.to_string() + ": angle-sum " +
                            angle_sum(k).to_string() + " is not > 2");
  }
  auto f = [&](double l) { return total_angle(k, l) - 2 * kPi; };
  GeomParams p;
  p.tolerance = tol;
  double lo = 1e-6;
  double hi = 2 * lo;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > 1e6) throw InternalError("side length bracket did not close");
  }
  if (f(lo) <= 0) throw InternalError("side length below the initial bracket");
  double mid = 0.5 * (lo + hi);
  for (p.iterations = 0; p.iterations < 200; ++p.iterations) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  p.side_length = mid;
  p.residual = f(mid);
  if (std::abs(p.residual) > tol) {
    throw InternalError("side length residual " + std::to_string(p.residual) + " above tolerance");
  }
  return p;
}

double hyperbolic_distance(HPoint z, HPoint w) {
  const double num = 2 * std::norm(z - w);
  const double den = (1 - std::norm(z)) * (1 - std::norm(w));
  return std::acosh(1 + num / den);
}

Isometry::Isometry(cplx a, cplx b, cplx c, cplx d, bool conj) : conj_(conj) {
  const cplx s = std::sqrt(a * d - b * c);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

Isometry Isometry::rotation(double theta) {
  return Isometry(std::polar(1.0, theta / 2), 0.0, 0.0, std::polar(1.0, -theta / 2), false);
}

Isometry Isometry::translation(HPoint z) { return Isometry(1.0, z, std::conj(z), 1.0, false); }

Isometry Isometry::normalize(HPoint p, HPoint q) {
  const Isometry to_origin(1.0, -p, -std::conj(p), 1.0, false);
  return rotation(-std::arg(to_origin(q))) * to_origin;
}

Isometry Isometry::conjugation() { return Isometry(1.0, 0.0, 0.0, 1.0, true); }

HPoint Isometry::apply(HPoint z) const {
  const cplx w = conj_ ? std::conj(z) : z;
  return (a_ * w + b_) / (c_ * w + d_);
}

Isometry Isometry::operator*(const Isometry& g) const {
  cplx ga = g.a_, gb = g.b_, gc = g.c_, gd = g.d_;
  if (conj_) {
    ga = std::conj(ga);
    gb = std::conj(gb);
    gc = std::conj(gc);
    gd = std::conj(gd);
  }
  return Isometry(a_ * ga + b_ * gc, a_ * gb + b_ * gd, c_ * ga + d_ * gc, c_ * gb + d_ * gd,
                  conj_ != g.conj_);
}

Isometry Isometry::inverse() const {
  if (!conj_) return Isometry(d_, -b_, -c_, a_, false);
  return Isometry(std::conj(d_), -std::conj(b_), -std::conj(c_), std::conj(a_), true);
}

Realization realize(const Tiling& t, const GeomParams& params, int seed_face) {
  if (seed_face < 0 || seed_face >= t.num_faces()) {
    throw PreconditionError("seed face out of range");
  }
  const double l = params.side_length;
  if (!(l > 0)) throw PreconditionError("side length must be positive");

  Realization r;
  r.params = params;
  r.seed_face = seed_face;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.coords.assign(t.vertices.size(), HPoint(nan, nan));
  std::vector<char> placed(t.vertices.size(), 0);
  std::map<int, std::vector<HPoint>> shapes;
  auto shape = [&](int k) -> const std::vector<HPoint>& {
    auto it = shapes.find(k);
    if (it == shapes.end()) it = shapes.emplace(k, standard_polygon(k, l)).first;
    return it->second;
  };

  std::vector<std::optional<Isometry>> iso(t.faces.size());
  std::deque<int> queue;
  {
    const auto& P = shape(t.faces[seed_face].size);
    iso[seed_face] = Isometry::normalize(P[0], P[1]);
    queue.push_back(seed_face);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const auto darts = t.face_darts(f);
    const int k = static_cast<int>(darts.size());
    const auto& P = shape(k);
    const Isometry& M = *iso[f];
    for (int j = 0; j < k; ++j) {
      const int v = t.darts[darts[j]].origin;
      const HPoint z = M(P[j]);
      if (!placed[v]) {
        placed[v] = 1;
        r.coords[v] = z;
      } else {
        r.max_misfit = std::max(r.max_misfit, std::abs(z - r.coords[v]));
      }
    }
    for (int j = 0; j < k; ++j) {
      const int back = t.darts[darts[j]].twin;
      const int g = t.darts[back].face;
      if (g == kNone || iso[g]) continue;
      const auto gd = t.face_darts(g);
      const int kg = static_cast<int>(gd.size());
      int m = 0;
      while (gd[m] != back) ++m;
      const auto& Q = shape(kg);
      // corner m of g is the head of darts[j], corner m+1 its origin
      const HPoint zw = M(P[(j + 1) % k]);
      const HPoint zu = M(P[j]);
      iso[g] = Isometry::normalize(zw, zu).inverse() * Isometry::normalize(Q[m], Q[(m + 1) % kg]);
      queue.push_back(g);
    }
  }
  if (r.max_misfit > kHardMisfit) {
    throw InternalError("realization closure misfit " + std::to_string(r.max_misfit));
  }
  return r;
}

bool GeometryReport::passed(double edge_tol, double angle_tol, double misfit_tol) const {
  return max_edge_error <= edge_tol && max_angle_error <= angle_tol && max_misfit <= misfit_tol &&
         max_boundary_angle < 2 * kPi;
}

GeometryReport geometric_checks(const Tiling& t, const Realization& r) {
  GeometryReport rep;
  rep.max_misfit = r.max_misfit;
  const double l = r.params.side_length;
  for (int a = 0; a < t.num_darts(); ++a) {
    const int b = t.darts[a].twin;
    if (b < a) continue;
    const double err =
        std::abs(hyperbolic_distance(r.coords[t.darts[a].origin], r.coords[t.darts[b].origin]) - l);
    if (!(err <= rep.max_edge_error)) {
      rep.max_edge_error = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
      rep.worst_edge = a;
    }
  }
  for (int v = 0; v < t.num_vertices(); ++v) {
    const HPoint p = r.coords[v];
    auto to_origin = [&](HPoint z) { return (z - p) / (1.0 - std::conj(p) * z); };
    double sum = 0;
    for (int a : t.darts_around(v)) {
      if (t.darts[a].face == kNone) continue;
      const double a1 = std::arg(to_origin(r.coords[t.head(a)]));
      const double a2 = std::arg(to_origin(r.coords[t.head(t.darts[a].next_ccw)]));
      double sector = a2 - a1;
      while (sector < 0) sector += 2 * kPi;
      while (sector >= 2 * kPi) sector -= 2 * kPi;
      sum += sector;
    }
    if (t.vertices[v].interior) {
      const double err = std::abs(sum - 2 * kPi);
      if (!(err <= rep.max_angle_error)) {
        rep.max_angle_error = std::isnan(err) ? std::numeric_limits<double>::infinity() : err;
        rep.worst_vertex = v;
      }
    } else {
      rep.max_boundary_angle = std::max(rep.max_boundary_angle, sum);
    }
  }
  return rep;
}

}  // namespace hypertile
