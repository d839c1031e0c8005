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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace amriso {

  /*! deepest refinement level we accept; keeps every cell anchor
      representable in 32-bit ints (widths still need 64 bits) */
  inline constexpr int32_t MAX_LEVEL = 30;

  struct vec3i {
    int32_t x = 0, y = 0, z = 0;
    friend bool operator==(const vec3i &, const vec3i &) = default;
  };

  /*! integer point on the finest-level grid; queries and dual-cell
      bases use 64 bits so that arithmetic near the int32 boundary
      cannot wrap */
  struct vec3l {
    int64_t x = 0, y = 0, z = 0;
    friend bool operator==(const vec3l &, const vec3l &) = default;
  };

  struct vec3d {
    double x = 0, y = 0, z = 0;
    friend bool operator==(const vec3d &, const vec3d &) = default;
  };

  inline vec3l to_vec3l(const vec3i &v) { return {v.x, v.y, v.z}; }

  /*! half-open axis-aligned box [lo,hi) on the finest-level grid */
  struct Box3l {
    vec3l lo{0, 0, 0};
    vec3l hi{0, 0, 0};
    bool contains(const vec3l &p) const
    {
      return p.x >= lo.x && p.x < hi.x
        &&   p.y >= lo.y && p.y < hi.y
        &&   p.z >= lo.z && p.z < hi.z;
    }
  };

  /*! raised for malformed input data (files or in-memory cell lists) */
  struct LoadError : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  namespace detail {
    /*! internal consistency check; a failure means a bug in this
        library or its caller, not bad input data */
    inline void require(bool ok, const char *what)
    {
      if (!ok) throw std::logic_error(what);
    }
  }

  /*! one cell of a cell-centered AMR hierarchy.

      A cell on level l covers the half-open cube [anchor,anchor+2^l)^3
      in the index space of the finest (level 0) cells; the anchor
      (i,j,k) is a multiple of 2^l on every axis. Level 0 is the finest
      level. The scalar value lives at the cell center. */
  struct CellCoord {
    int32_t i = 0, j = 0, k = 0;
    int32_t level = 0;

    /// lexicographic (i,j,k,level); doubles as the dataset sort key
    friend auto operator<=>(const CellCoord &, const CellCoord &) = default;
  };

  /// edge length of a level-l cell, in finest-level units
  inline int64_t cell_width(int32_t level)
  {
    detail::require(level >= 0 && level <= MAX_LEVEL,
                    "cell_width: level out of range");
    return int64_t(1) << level;
  }

  /*! round x down to the next multiple of 2^level; two's complement
      makes the mask round toward -inf for negative x as well */
  inline int64_t anchor_mask(int64_t x, int32_t level)
  {
    return x & ~(cell_width(level) - 1);
  }

  /// anchor is a multiple of the cell width on every axis
  inline bool is_aligned(const CellCoord &c)
  {
    return anchor_mask(c.i, c.level) == c.i
      &&   anchor_mask(c.j, c.level) == c.j
      &&   anchor_mask(c.k, c.level) == c.k;
  }

  /// world-space center of the cell, anchor plus half a width per axis
  inline vec3d cell_center(const CellCoord &c)
  {
    const double half = 0.5 * double(cell_width(c.level));
    return {double(c.i) + half, double(c.j) + half, double(c.k) + half};
  }

  /// the half-open region of finest-level index space the cell covers
  inline Box3l cell_box(const CellCoord &c)
  {
    const int64_t w = cell_width(c.level);
    return {{c.i, c.j, c.k}, {c.i + w, c.j + w, c.k + w}};
  }

  inline bool cell_contains(const CellCoord &c, const vec3l &p)
  {
    return cell_box(c).contains(p);
  }

  /// the global order every sorted cell array uses
  inline std::strong_ordering cell_key_compare(const CellCoord &a,
                                               const CellCoord &b)
  {
    return a <=> b;
  }

  /*! a flat list of AMR cells plus one scalar per cell, sorted by
      cell_key_compare. Instances always come out of build_index (or
      the loaders and generators built on top of it), which establishes
      the sort order and validates levels and alignment. */
  struct AmrDataset {
    std::vector<CellCoord> cells;  // sorted by (i,j,k,level)
    std::vector<double> scalars;   // scalars[n] belongs to cells[n]
    int32_t max_level = 0;
    Box3l bounds;                  // hull of all cell boxes
  };

} // namespace amriso
