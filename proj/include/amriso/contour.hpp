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

#pragma once

#include "amriso/dual.hpp"

namespace amriso {

  /*! one dual hexahedron ready for contouring: per corner slot the
      data cell, its center position, and its scalar. Repeated cells
      (degenerate duals) carry repeated positions and values. */
  struct HexInput {
    std::array<CellId, 8> cell;
    std::array<vec3d, 8> pos;
    std::array<double, 8> value;
  };

  /// triangle with explicit corner positions, prior to welding
  struct FatTriangle {
    vec3d v0, v1, v2;
  };

  /// contour_hex emits at most five triangles per hex
  struct TriangleBatch {
    std::array<FatTriangle, 5> tri;
    int count = 0;
  };

  /*! corner classification mask: bit d is set iff value[d] > iso
      (strictly; a corner exactly at iso counts as outside) */
  int mc_case_index(const std::array<double, 8> &value, double iso);

  /*! iso crossing on the edge between two cell centers. The endpoints
      are ordered by cell key before interpolating, so both hexes
      sharing an edge compute bit-identical positions. Demands a real
      edge (distinct cells) with a sign change across it. */
  vec3d interpolate_edge(CellId a_cell, CellId b_cell,
                         const vec3d &a_pos, const vec3d &b_pos,
                         double a_val, double b_val, double iso);

  /*! marching cubes over one (possibly degenerate) hex. Collapsed
      edges join two copies of the same cell, hence equal values and
      equal classifications, so the case tables never select them;
      hitting one anyway is reported as an internal error. Triangles
      whose three positions are not pairwise distinct are dropped. */
  TriangleBatch contour_hex(const HexInput &hex, double iso);

  /// gather positions and scalars for a dual's corner cells
  HexInput make_hex_input(const CellIndex &index, const DualCell &dual);

} // namespace amriso
