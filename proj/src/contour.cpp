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

#include "amriso/contour.hpp"
#include "amriso/mc_tables.hpp"

namespace amriso {

  int mc_case_index(const std::array<double, 8> &value, double iso)
  {
    int mask = 0;
    for (int d = 0; d < 8; d++)
      if (value[d] > iso) mask |= 1 << d;
    return mask;
  }

  vec3d interpolate_edge(CellId a_cell, CellId b_cell,
                         const vec3d &a_pos, const vec3d &b_pos,
                         double a_val, double b_val, double iso)
  {
    detail::require(a_cell != b_cell,
                    "interpolate_edge: endpoints are the same cell");
    detail::require((a_val > iso) != (b_val > iso),
                    "interpolate_edge: no crossing on this edge");

    // fixed endpoint order, lower cell key first: both hexes sharing an
    // edge then evaluate the exact same expression, and the crossing
    // they compute agrees bit for bit
    if (b_cell < a_cell)
      return interpolate_edge(b_cell, a_cell, b_pos, a_pos, b_val, a_val,
                              iso);

    const double t = (iso - a_val) / (b_val - a_val);
    return {a_pos.x + t * (b_pos.x - a_pos.x),
            a_pos.y + t * (b_pos.y - a_pos.y),
            a_pos.z + t * (b_pos.z - a_pos.z)};
  }

  TriangleBatch contour_hex(const HexInput &hex, double iso)
  {
    TriangleBatch out;
    const int row = mc::to_table_case(mc_case_index(hex.value, iso));
    const int8_t *entry = mc::tri_table[row];
    if (entry[0] < 0) return out;

    // each selected edge is interpolated exactly once
    vec3d on_edge[12];
    bool have[12] = {};
    for (int n = 0; n < 16 && entry[n] >= 0; n++) {
      const int e = entry[n];
      if (have[e]) continue;
      const int u = mc::edge_corner[e][0];
      const int v = mc::edge_corner[e][1];
      // a collapsed edge has equal values at both ends, so both ends
      // classify alike and no case row may select it
      detail::require(hex.cell[u] != hex.cell[v],
                      "contour_hex: case table selected a collapsed edge");
      on_edge[e] = interpolate_edge(hex.cell[u], hex.cell[v], hex.pos[u],
                                    hex.pos[v], hex.value[u], hex.value[v],
                                    iso);
      have[e] = true;
    }

    for (int n = 0; n < 16 && entry[n] >= 0; n += 3) {
      const vec3d &p0 = on_edge[entry[n + 0]];
      const vec3d &p1 = on_edge[entry[n + 1]];
      const vec3d &p2 = on_edge[entry[n + 2]];
      // degenerate hexes can land two crossings on the same point; such
      // slivers carry no area and are dropped
      if (p0 == p1 || p1 == p2 || p0 == p2) continue;
      out.tri[out.count++] = {p0, p1, p2};
    }
    return out;
  }

  HexInput make_hex_input(const CellIndex &index, const DualCell &dual)
  {
    HexInput hex;
    for (int d = 0; d < 8; d++) {
      const CellId id = dual.corners[d];
      hex.cell[d] = id;
      hex.pos[d] = cell_center(index.coord(id));
      hex.value[d] = index.scalar(id);
    }
    return hex;
  }

} // namespace amriso
