#include <doctest.h>

#include <numeric>

#include "hypertile/construction.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/tiling.hpp"
#include "hypertile/verify.hpp"

using namespace hypertile;

TEST_CASE("initial fan counts") {
  const VertexType k({4, 5, 4, 5});
  const Tiling t = initial_fan(k);
  // V = 1 + sum(k_i - 2), E = d + sum(k_i - 2)
  CHECK(t.num_vertices() == 11);
  CHECK(t.num_edges() == 14);
  CHECK(t.num_faces() == 4);
  CHECK(t.vertex_face_sizes(0) == std::vector<int>{4, 5, 4, 5});
  CHECK(t.vertices[0].interior);
  const BoundaryCycle bc = boundary_cycle(t);
  CHECK(bc.size() == 10);
  CHECK(verify(t).passed());

  const Tiling tri = initial_fan(VertexType(std::vector<int>(7, 3)));
  const BoundaryCycle tbc = boundary_cycle(tri);
  CHECK(tbc.size() == 7);
  for (int val : tbc.valences) CHECK(val == 3);
  CHECK(verify(tri).passed());

  CHECK_THROWS_AS(initial_fan(VertexType({6, 6, 6})), PreconditionError);
}

TEST_CASE("boundary cycle is counter-clockwise and closed") {
  const Tiling t = initial_fan(VertexType({4, 5, 4, 5}));
  const BoundaryCycle bc = boundary_cycle(t);
  for (int i = 0; i < bc.size(); ++i) {
    const int v = bc.vertices[i];
    const int w = bc.vertices[(i + 1) % bc.size()];
    // the inner dart v -> w follows the outer dart at v counter-clockwise
    const int bo = t.boundary_dart_at(v);
    CHECK(t.head(t.darts[bo].next_ccw) == w);
    CHECK(t.degree(v) == bc.valences[i]);
  }
}

TEST_CASE("tiling_from_faces rejects bad input") {
  FaceSetInput twice;
  twice.cycles = {{0, 1, 2}, {0, 1, 3}};
  twice.face_layers = {0, 0};
  twice.vertex_layers = {0, 0, 0, 0};
  CHECK_THROWS_AS(tiling_from_faces(twice), PreconditionError);

  // two triangles sharing only vertex 0
  FaceSetInput pinch;
  pinch.cycles = {{0, 1, 2}, {0, 3, 4}};
  pinch.face_layers = {0, 0};
  pinch.vertex_layers = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS(tiling_from_faces(pinch), PreconditionError);

  FaceSetInput square;
  square.cycles = {{0, 1, 2, 3}};
  square.face_layers = {0};
  square.vertex_layers = {0, 0, 0, 0};
  const Tiling t = tiling_from_faces(square).tiling;
  CHECK(t.num_darts() == 8);
  CHECK(t.face_vertices(0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("sub-patch, ball and core") {
  const BuildResult r = build(VertexType({4, 5, 4, 5}), 2, BuildPolicy::lexicographic());
  const Tiling& t = r.tiling;
  const auto fan = ball_faces(t, 0, 1);
  CHECK(fan.size() == 4);
  const auto core = core_faces(t);
  CHECK_FALSE(core.empty());
  for (int f : core) {
    for (int v : t.face_vertices(f)) CHECK(t.vertices[v].interior);
  }
  const Tiling sub = sub_patch(t, core);
  CHECK(sub.num_faces() == static_cast<int>(core.size()));
  CHECK(verify(sub).passed());
  const auto ball2 = ball_faces(t, 0, 2);
  CHECK(ball2.size() > fan.size());
}
