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

#include "amriso/synth.hpp"
#include "amriso/mc_tables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace amriso {

  FieldSpec FieldSpec::sphere(const vec3d &center, double radius)
  {
    detail::require(std::isfinite(center.x) && std::isfinite(center.y)
                      && std::isfinite(center.z) && std::isfinite(radius)
                      && radius > 0,
                    "sphere field: center must be finite, radius positive");
    FieldSpec f;
    f.kind = Kind::sphere;
    f.center = center;
    f.radius = radius;
    return f;
  }

  FieldSpec FieldSpec::linear(const vec3d &gradient, double offset)
  {
    detail::require(std::isfinite(gradient.x) && std::isfinite(gradient.y)
                      && std::isfinite(gradient.z) && std::isfinite(offset),
                    "linear field: parameters must be finite");
    FieldSpec f;
    f.kind = Kind::linear;
    f.gradient = gradient;
    f.offset = offset;
    return f;
  }

  FieldSpec FieldSpec::radial_sine(const vec3d &center, double frequency)
  {
    detail::require(std::isfinite(center.x) && std::isfinite(center.y)
                      && std::isfinite(center.z) && std::isfinite(frequency),
                    "radial sine field: parameters must be finite");
    FieldSpec f;
    f.kind = Kind::radial_sine;
    f.center = center;
    f.frequency = frequency;
    return f;
  }

  FieldSpec FieldSpec::parse(const std::string &text)
  {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
      throw LoadError("field '" + text + "': expected kind:p1,p2,...");
    const std::string kind = text.substr(0, colon);

    std::vector<double> p;
    std::istringstream rest(text.substr(colon + 1));
    std::string token;
    while (std::getline(rest, token, ',')) {
      std::istringstream value(token);
      double v;
      std::string extra;
      if (!(value >> v) || value >> extra || !std::isfinite(v))
        throw LoadError("field '" + text + "': bad number '" + token + "'");
      p.push_back(v);
    }

    if (kind == "sphere") {
      if (p.size() != 4)
        throw LoadError("field '" + text + "': sphere needs cx,cy,cz,r");
      if (!(p[3] > 0))
        throw LoadError("field '" + text + "': radius must be positive");
      return sphere({p[0], p[1], p[2]}, p[3]);
    }
    if (kind == "linear") {
      if (p.size() != 4)
        throw LoadError("field '" + text
                        + "': linear needs gx,gy,gz,offset");
      return linear({p[0], p[1], p[2]}, p[3]);
    }
    if (kind == "rsine") {
      if (p.size() != 4)
        throw LoadError("field '" + text + "': rsine needs cx,cy,cz,freq");
      return radial_sine({p[0], p[1], p[2]}, p[3]);
    }
    throw LoadError("field '" + text + "': unknown kind '" + kind
                    + "' (sphere, linear, rsine)");
  }

  double FieldSpec::eval(const vec3d &p) const
  {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    const double dz = p.z - center.z;
    switch (kind) {
    case Kind::sphere:
      return std::sqrt(dx * dx + dy * dy + dz * dz) - radius;
    case Kind::linear:
      return gradient.x * p.x + gradient.y * p.y + gradient.z * p.z + offset;
    case Kind::radial_sine:
      return std::sin(frequency * std::sqrt(dx * dx + dy * dy + dz * dz));
    }
    detail::require(false, "FieldSpec: bad kind");
    return 0;
  }

  CellIndex gen_uniform(int32_t n, const FieldSpec &field)
  {
    detail::require(n >= 1 && n <= 1024, "gen_uniform: n out of range");
    std::vector<CellCoord> cells;
    std::vector<double> scalars;
    cells.reserve(size_t(n) * n * n);
    scalars.reserve(size_t(n) * n * n);
    for (int32_t k = 0; k < n; k++)
      for (int32_t j = 0; j < n; j++)
        for (int32_t i = 0; i < n; i++) {
          const CellCoord c{i, j, k, 0};
          cells.push_back(c);
          scalars.push_back(field.eval(cell_center(c)));
        }
    return build_index(std::move(cells), std::move(scalars));
  }

  namespace {
    /// spread of the field over the eight corners of the cell's box
    double field_range(const FieldSpec &field, const CellCoord &c)
    {
      const Box3l box = cell_box(c);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (int d = 0; d < 8; d++) {
        const vec3d corner{double((d & 1) ? box.hi.x : box.lo.x),
                           double((d & 2) ? box.hi.y : box.lo.y),
                           double((d & 4) ? box.hi.z : box.lo.z)};
        const double v = field.eval(corner);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      return hi - lo;
    }
  }

  CellIndex gen_octree(int32_t depth, const FieldSpec &field,
                       double threshold)
  {
    detail::require(depth >= 0 && depth <= MAX_LEVEL,
                    "gen_octree: depth out of range");
    std::vector<CellCoord> cells;
    std::vector<double> scalars;

    const auto visit = [&](const auto &visit, const CellCoord &c) -> void {
      if (c.level > 0 && field_range(field, c) > threshold) {
        const int32_t half = int32_t(cell_width(c.level) / 2);
        for (int d = 0; d < 8; d++)
          visit(visit, CellCoord{c.i + ((d & 1) ? half : 0),
                                 c.j + ((d & 2) ? half : 0),
                                 c.k + ((d & 4) ? half : 0), c.level - 1});
      } else {
        cells.push_back(c);
        scalars.push_back(field.eval(cell_center(c)));
      }
    };
    visit(visit, CellCoord{0, 0, 0, depth});

    return build_index(std::move(cells), std::move(scalars));
  }

  namespace {
    bool boxes_intersect(const Box3l &a, const Box3l &b)
    {
      return a.lo.x < b.hi.x && b.lo.x < a.hi.x
        &&   a.lo.y < b.hi.y && b.lo.y < a.hi.y
        &&   a.lo.z < b.hi.z && b.lo.z < a.hi.z;
    }
  }

  CellIndex gen_blocks(const std::vector<BlockSpec> &blocks,
                       const FieldSpec &field,
                       const std::vector<Box3l> &holes)
  {
    std::vector<CellCoord> cells;
    std::vector<double> scalars;

    for (size_t b = 0; b < blocks.size(); b++) {
      const BlockSpec &block = blocks[b];
      const std::string where = "block " + std::to_string(b);
      if (block.level < 0 || block.level > MAX_LEVEL)
        throw LoadError(where + ": level out of range");
      const int64_t w = cell_width(block.level);
      if (anchor_mask(block.anchor.x, block.level) != block.anchor.x
          || anchor_mask(block.anchor.y, block.level) != block.anchor.y
          || anchor_mask(block.anchor.z, block.level) != block.anchor.z)
        throw LoadError(where + ": anchor not aligned to its level");
      if (block.size.x <= 0 || block.size.y <= 0 || block.size.z <= 0)
        throw LoadError(where + ": size must be positive");
      constexpr int64_t hi32 = std::numeric_limits<int32_t>::max();
      if (block.anchor.x + block.size.x * w - w > hi32
          || block.anchor.y + block.size.y * w - w > hi32
          || block.anchor.z + block.size.z * w - w > hi32)
        throw LoadError(where + ": cells exceed the 32-bit anchor range");

      for (int32_t cz = 0; cz < block.size.z; cz++)
        for (int32_t cy = 0; cy < block.size.y; cy++)
          for (int32_t cx = 0; cx < block.size.x; cx++) {
            const CellCoord c{int32_t(block.anchor.x + cx * w),
                              int32_t(block.anchor.y + cy * w),
                              int32_t(block.anchor.z + cz * w), block.level};
            const Box3l box = cell_box(c);
            bool in_hole = false;
            for (const Box3l &hole : holes)
              if (boxes_intersect(box, hole)) {
                in_hole = true;
                break;
              }
            if (in_hole) continue;
            cells.push_back(c);
            scalars.push_back(field.eval(cell_center(c)));
          }
    }
    return build_index(std::move(cells), std::move(scalars));
  }

  std::set<DualKey> exhaustive_duals(const CellIndex &index,
                                     const Box3l &bases)
  {
    std::set<DualKey> keys;
    for (int64_t bz = bases.lo.z; bz < bases.hi.z; bz++)
      for (int64_t by = bases.lo.y; by < bases.hi.y; by++)
        for (int64_t bx = bases.lo.x; bx < bases.hi.x; bx++) {
          std::array<CellId, 8> corner;
          bool all_hit = true;
          for (int d = 0; d < 8 && all_hit; d++) {
            const vec3l p{bx + ((d & 1) ? 1 : 0), by + ((d & 2) ? 1 : 0),
                          bz + ((d & 4) ? 1 : 0)};
            if (const auto hit = snap(index, p))
              corner[d] = *hit;
            else
              all_hit = false;
          }
          if (!all_hit) continue;

          bool degenerate = false;
          for (int axis = 0; axis < 3 && !degenerate; axis++) {
            const int bit = 1 << axis;
            bool collapsed = true;
            for (int d = 0; d < 8 && collapsed; d++)
              if (!(d & bit) && corner[d] != corner[d | bit])
                collapsed = false;
            degenerate = collapsed;
          }
          if (degenerate) continue;

          DualKey key;
          for (int d = 0; d < 8; d++)
            key[d] = corner[d].index;
          std::sort(key.begin(), key.end());
          keys.insert(key);
        }
    return keys;
  }

  std::set<DualKey> exhaustive_duals(const CellIndex &index)
  {
    const Box3l &b = index.data.bounds;
    return exhaustive_duals(index, {{b.lo.x - 1, b.lo.y - 1, b.lo.z - 1},
                                    {b.hi.x - 1, b.hi.y - 1, b.hi.z - 1}});
  }

  IndexedMesh uniform_mc_reference(const CellIndex &index, double iso)
  {
    if (index.levels.size() != 1 || index.levels[0] != 0)
      throw std::invalid_argument(
        "uniform_mc_reference: dataset must be pure level 0");

    const Box3l &bounds = index.data.bounds;
    const int64_t nx = bounds.hi.x - bounds.lo.x;
    const int64_t ny = bounds.hi.y - bounds.lo.y;
    const int64_t nz = bounds.hi.z - bounds.lo.z;
    if (nx * ny * nz != int64_t(index.size()))
      throw std::invalid_argument(
        "uniform_mc_reference: dataset must fill its bounds gap-free");

    constexpr uint32_t EMPTY = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> grid(size_t(nx * ny * nz), EMPTY);
    for (size_t n = 0; n < index.size(); n++) {
      const CellCoord &c = index.data.cells[n];
      const size_t slot = size_t(((c.k - bounds.lo.z) * ny
                                  + (c.j - bounds.lo.y)) * nx
                                 + (c.i - bounds.lo.x));
      if (grid[slot] != EMPTY)
        throw std::invalid_argument(
          "uniform_mc_reference: duplicate cell in dataset");
      grid[slot] = uint32_t(n);
    }

    // cube corners and edges in the numbering the case tables use
    static const int corner_off[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0},
                                         {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                                         {1, 1, 1}, {0, 1, 1}};
    static const int edge_end[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                        {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                        {0, 4}, {1, 5}, {2, 6}, {3, 7}};

    std::vector<FatTriangle> fat;
    for (int64_t bz = 0; bz + 1 < nz; bz++)
      for (int64_t by = 0; by + 1 < ny; by++)
        for (int64_t bx = 0; bx + 1 < nx; bx++) {
          uint32_t id[8];
          double val[8];
          for (int c = 0; c < 8; c++) {
            const size_t slot =
              size_t(((bz + corner_off[c][2]) * ny
                      + (by + corner_off[c][1])) * nx
                     + (bx + corner_off[c][0]));
            id[c] = grid[slot];
            val[c] = index.data.scalars[id[c]];
          }

          int row = 0;
          for (int c = 0; c < 8; c++)
            if (val[c] > iso) row |= 1 << c;
          const int8_t *entry = mc::tri_table[row];
          if (entry[0] < 0) continue;

          vec3d on_edge[12];
          for (int n = 0; n < 16 && entry[n] >= 0; n++) {
            const int e = entry[n];
            int a = edge_end[e][0];
            int b = edge_end[e][1];
            // lower cell key first, matching the welded pipeline output
            if (id[b] < id[a]) std::swap(a, b);
            const vec3d a_pos = cell_center(index.data.cells[id[a]]);
            const vec3d b_pos = cell_center(index.data.cells[id[b]]);
            const double t = (iso - val[a]) / (val[b] - val[a]);
            on_edge[e] = {a_pos.x + t * (b_pos.x - a_pos.x),
                          a_pos.y + t * (b_pos.y - a_pos.y),
                          a_pos.z + t * (b_pos.z - a_pos.z)};
          }

          for (int n = 0; n < 16 && entry[n] >= 0; n += 3) {
            const vec3d &p0 = on_edge[entry[n + 0]];
            const vec3d &p1 = on_edge[entry[n + 1]];
            const vec3d &p2 = on_edge[entry[n + 2]];
            if (p0 == p1 || p1 == p2 || p0 == p2) continue;
            fat.push_back({p0, p1, p2});
          }
        }

    return weld(fat);
  }

} // namespace amriso
