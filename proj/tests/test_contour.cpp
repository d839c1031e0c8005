// ======================================================================== //
// Copyright 2026 the amriso authors                                        //
//                                                                          //
// Licensed under the Apache License, Version 2.0 (the "License");          //
// you may not use this file except in compliance with the License.         //
// You may obtain a copy of the License at                                  //
//                                                                          //
//     http://www.apache.org/licenses/LICENSE-2.0                           //
//                                                                          //
// Unless required by applicable law or agreed to in writing, software      //
// distributed under the License is distributed on an "AS IS" BASIS,        //
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. //
// See the License for the specific language governing permissions and      //
// limitations under the License.                                           //
// ======================================================================== //

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <tuple>

using namespace amriso;
using namespace amriso::testing;

namespace {

  /// plain unit hex: eight distinct cells at the unit cube corners
  HexInput unit_hex(const std::array<double, 8> &values)
  {
    HexInput hex;
    for (int d = 0; d < 8; d++) {
      hex.cell[d] = CellId{uint32_t(d)};
      hex.pos[d] = {double(d & 1), double((d >> 1) & 1),
                    double((d >> 2) & 1)};
      hex.value[d] = values[d];
    }
    return hex;
  }

  using PosKey = std::tuple<double, double, double>;

  PosKey key_of(const vec3d &p) { return {p.x, p.y, p.z}; }

  std::set<PosKey> face_vertices(const TriangleBatch &batch, int axis,
                                 double plane)
  {
    std::set<PosKey> keys;
    const auto coord = [&](const vec3d &p) {
      return axis == 0 ? p.x : axis == 1 ? p.y : p.z;
    };
    for (int n = 0; n < batch.count; n++) {
      for (const vec3d &v : {batch.tri[n].v0, batch.tri[n].v1,
                             batch.tri[n].v2})
        if (coord(v) == plane) keys.insert(key_of(v));
    }
    return keys;
  }

}

TEST_CASE("mc_case_index uses strict greater-than per slot")
{
  std::array<double, 8> v{};
  CHECK(mc_case_index(v, 0.0) == 0);   // equal is not above
  CHECK(mc_case_index(v, -1.0) == 255);
  v[3] = 1.0;
  CHECK(mc_case_index(v, 0.5) == 8);
  v[0] = 2.0;
  CHECK(mc_case_index(v, 0.5) == 9);
  CHECK(mc_case_index(v, 1.5) == 1);
}

TEST_CASE("interpolate_edge: exact midpoint, clamped range, canonical "
          "order")
{
  const CellId a{0}, b{1};
  const vec3d pa{0, 0, 0}, pb{2, 0, 0};

  const vec3d mid = interpolate_edge(a, b, pa, pb, -1.0, 1.0, 0.0);
  CHECK(mid == vec3d{1.0, 0.0, 0.0});

  // iso exactly at one end lands on that corner
  const vec3d at_a = interpolate_edge(a, b, pa, pb, 0.0, 1.0, 0.0);
  CHECK(at_a == pa);

  // argument order must not matter, bit for bit
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  for (int n = 0; n < 1000; n++) {
    const double va = val(rng);
    double vb = val(rng);
    const double iso =
      std::uniform_real_distribution<double>(std::min(va, vb),
                                             std::max(va, vb))(rng);
    if ((va > iso) == (vb > iso)) vb = 2 * iso - vb;  // force a crossing
    if ((va > iso) == (vb > iso)) continue;
    const vec3d qa{pos(rng), pos(rng), pos(rng)};
    const vec3d qb{pos(rng), pos(rng), pos(rng)};
    const vec3d fwd = interpolate_edge(a, b, qa, qb, va, vb, iso);
    const vec3d rev = interpolate_edge(b, a, qb, qa, vb, va, iso);
    CHECK(fwd == rev);
    // the crossing parameter stays inside [0,1]
    for (int axis = 0; axis < 3; axis++) {
      const double lo = std::min((&qa.x)[axis], (&qb.x)[axis]);
      const double hi = std::max((&qa.x)[axis], (&qb.x)[axis]);
      CHECK((&fwd.x)[axis] >= lo);
      CHECK((&fwd.x)[axis] <= hi);
    }
  }
}

TEST_CASE("interpolate_edge rejects collapsed edges and non-crossings")
{
  const vec3d pa{0, 0, 0}, pb{1, 0, 0};
  CHECK_THROWS_AS(
    interpolate_edge(CellId{3}, CellId{3}, pa, pb, -1.0, 1.0, 0.0),
    std::logic_error);
  CHECK_THROWS_AS(
    interpolate_edge(CellId{0}, CellId{1}, pa, pb, 1.0, 2.0, 0.0),
    std::logic_error);
  CHECK_THROWS_AS(
    interpolate_edge(CellId{0}, CellId{1}, pa, pb, -1.0, 0.0, 0.0),
    std::logic_error);
}

TEST_CASE("contour_hex on plain hexes: case-by-case counts")
{
  CHECK(contour_hex(unit_hex({-1, -1, -1, -1, -1, -1, -1, -1}), 0.0).count
        == 0);
  CHECK(contour_hex(unit_hex({1, 1, 1, 1, 1, 1, 1, 1}), 0.0).count == 0);

  // one corner above: one triangle hugging that corner
  const TriangleBatch one =
    contour_hex(unit_hex({1, -1, -1, -1, -1, -1, -1, -1}), 0.0);
  REQUIRE(one.count == 1);
  for (const vec3d &v : {one.tri[0].v0, one.tri[0].v1, one.tri[0].v2}) {
    CHECK(v.x + v.y + v.z == 0.5);  // midpoints of the three slot-0 edges
  }

  // a half-space split: two triangles forming the mid quad
  const TriangleBatch quad =
    contour_hex(unit_hex({-1, -1, -1, -1, 1, 1, 1, 1}), 0.0);
  CHECK(quad.count == 2);
  for (int n = 0; n < quad.count; n++)
    for (const vec3d &v : {quad.tri[n].v0, quad.tri[n].v1, quad.tri[n].v2})
      CHECK(v.z == 0.5);

  // two opposite corners above
  const TriangleBatch two =
    contour_hex(unit_hex({1, -1, -1, -1, -1, -1, -1, 1}), 0.0);
  CHECK(two.count == 2);
}

TEST_CASE("neighboring hexes agree bitwise on shared-face vertices")
{
  // 3x2x2 level-0 cells, field crossing on the shared face's y edges
  std::vector<CellCoord> cells;
  std::vector<double> scalars;
  for (int32_t k = 0; k < 2; k++)
    for (int32_t j = 0; j < 2; j++)
      for (int32_t i = 0; i < 3; i++) {
        cells.push_back({i, j, k, 0});
        scalars.push_back((j + 0.5) - 0.7 + 0.01 * i + 0.02 * k);
      }
  const CellIndex index = build_index(cells, scalars);

  const auto duals = all_duals(index);
  REQUIRE(duals.size() == 2);
  const TriangleBatch left =
    contour_hex(make_hex_input(index, duals[0]), 0.0);
  const TriangleBatch right =
    contour_hex(make_hex_input(index, duals[1]), 0.0);
  CHECK(left.count > 0);
  CHECK(right.count > 0);

  const auto shared_left = face_vertices(left, 0, 1.5);
  const auto shared_right = face_vertices(right, 0, 1.5);
  CHECK(!shared_left.empty());
  CHECK(shared_left == shared_right);
}

TEST_CASE("coarse/fine stack: shared face vertices agree bitwise")
{
  // lower hex: one coarse cell under four plate cells; upper hex: the
  // same plate under four top cells. The plate values put crossings on
  // the plate's own edges, which both hexes must interpolate alike.
  const double plate[4] = {-1.0, 1.0, 1.0, -1.0};
  HexInput low, up;
  const CellId U{0};
  for (int d = 0; d < 8; d++) {
    const double x = 0.5 + (d & 1 ? 1.0 : 0.0);
    const double y = 0.5 + (d & 2 ? 1.0 : 0.0);
    if (d < 4) {
      low.cell[d] = U;
      low.pos[d] = {1.0, 1.0, -1.0};
      low.value[d] = -2.0;
      up.cell[d] = CellId{uint32_t(1 + d)};
      up.pos[d] = {x, y, 0.5};
      up.value[d] = plate[d];
    } else {
      low.cell[d] = CellId{uint32_t(1 + (d - 4))};
      low.pos[d] = {x, y, 0.5};
      low.value[d] = plate[d - 4];
      up.cell[d] = CellId{uint32_t(5 + (d - 4))};
      up.pos[d] = {x, y, 1.5};
      up.value[d] = 2.0;
    }
  }

  const TriangleBatch below = contour_hex(low, 0.0);
  const TriangleBatch above = contour_hex(up, 0.0);
  CHECK(below.count > 0);
  CHECK(above.count > 0);

  const auto shared_below = face_vertices(below, 2, 0.5);
  const auto shared_above = face_vertices(above, 2, 0.5);
  CHECK(!shared_below.empty());
  CHECK(shared_below == shared_above);
}

TEST_CASE("degenerate pyramid hex: collapsed edges never interpolated")
{
  // one coarse cell fills the bottom four slots
  HexInput hex;
  const CellId U{0};
  for (int d = 0; d < 8; d++) {
    if (d < 4) {
      hex.cell[d] = U;
      hex.pos[d] = {1.0, 1.0, -1.0};
      hex.value[d] = -1.0;
    } else {
      hex.cell[d] = CellId{uint32_t(1 + (d - 4))};
      hex.pos[d] = {0.5 + (d & 1 ? 1.0 : 0.0), 0.5 + (d & 2 ? 1.0 : 0.0),
                    0.5};
      hex.value[d] = 1.0;
    }
  }

  const TriangleBatch batch = contour_hex(hex, 0.0);
  REQUIRE(batch.count == 2);
  std::set<PosKey> distinct;
  for (int n = 0; n < batch.count; n++) {
    const FatTriangle &t = batch.tri[n];
    CHECK(!(t.v0 == t.v1));
    CHECK(!(t.v1 == t.v2));
    CHECK(!(t.v0 == t.v2));
    distinct.insert(key_of(t.v0));
    distinct.insert(key_of(t.v1));
    distinct.insert(key_of(t.v2));
  }
  CHECK(distinct.size() == 4);  // a quad between the four upright edges
}

TEST_CASE("slab hex with paired corners drops all sliver triangles")
{
  // two cells cover the top four slots pairwise: the four upright
  // crossings land on two distinct points only, so every triangle of
  // the case degenerates and is dropped
  HexInput hex;
  for (int d = 0; d < 4; d++) {
    hex.cell[d] = CellId{0};
    hex.pos[d] = {1.0, 1.0, -1.0};
    hex.value[d] = -1.0;
  }
  for (int d = 4; d < 8; d++) {
    const bool right = d & 2;  // split along y only
    hex.cell[d] = CellId{uint32_t(right ? 2 : 1)};
    hex.pos[d] = {1.0, right ? 1.5 : 0.5, 0.5};
    hex.value[d] = 1.0;
  }
  const TriangleBatch batch = contour_hex(hex, 0.0);
  CHECK(batch.count == 0);
}

TEST_CASE("inconsistent input: selected collapsed edge is reported")
{
  // same cell on both ends of an edge but different values; no valid
  // dual produces this, and contour_hex must call it out
  HexInput hex = unit_hex({-1, 1, -1, -1, -1, -1, -1, -1});
  hex.cell[1] = hex.cell[0];
  CHECK_THROWS_AS(contour_hex(hex, 0.0), std::logic_error);
}

TEST_CASE("random degenerate hexes contour without surprises")
{
  std::mt19937 rng(2024);
  for (int n = 0; n < 2000; n++) {
    const HexInput hex = random_degenerate_hex(rng);
    const double iso = unit_scalar(rng);
    const TriangleBatch batch = contour_hex(hex, iso);
    REQUIRE(batch.count >= 0);
    REQUIRE(batch.count <= 5);
    for (int t = 0; t < batch.count; t++) {
      const FatTriangle &tri = batch.tri[t];
      for (const vec3d &v : {tri.v0, tri.v1, tri.v2}) {
        CHECK(std::isfinite(v.x));
        CHECK(std::isfinite(v.y));
        CHECK(std::isfinite(v.z));
        CHECK(v.x >= 0.0);
        CHECK(v.x <= 2.0);
        CHECK(v.y >= 0.0);
        CHECK(v.y <= 2.0);
        CHECK(v.z >= 0.0);
        CHECK(v.z <= 2.0);
      }
      CHECK(!(tri.v0 == tri.v1));
      CHECK(!(tri.v1 == tri.v2));
      CHECK(!(tri.v0 == tri.v2));
    }
  }
}
