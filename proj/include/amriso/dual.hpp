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

#include "amriso/locator.hpp"

#include <array>

namespace amriso {

  /*! one cell of the dual mesh: the eight data cells whose centers
      span a (possibly degenerate) hexahedron. Corner slot d encodes
      the offset direction, d = dz*4 + dy*2 + dx with dx fastest, so
      slot 0 is the corner toward -x/-y/-z and slot 7 toward +x/+y/+z.
      Corners may repeat when a coarse cell covers several slots. */
  struct DualCell {
    std::array<CellId, 8> corners;
    vec3l base;     // query corner toward -x/-y/-z, before snapping
    int32_t level;  // level of the owning cell
    CellId owner;   // cell whose rules accepted this dual
  };

  /// why try_build_dual rejected a candidate (or did not)
  enum class DualReject : uint8_t {
    accepted = 0,
    missing_corner,    // rule #1: some query corner hits no cell
    finer_corner,      // rule #2: some corner is finer than the owner
    lower_key_corner,  // rule #3: an equal-level corner with lower key owns it
  };

  struct DualCounters {
    uint64_t accepted = 0;
    uint64_t missing_corner = 0;
    uint64_t finer_corner = 0;
    uint64_t lower_key_corner = 0;

    uint64_t total() const
    {
      return accepted + missing_corner + finer_corner + lower_key_corner;
    }
    void note(DualReject r);
  };

  /*! base of candidate dual delta (in [0,8)) of a cell: the cell
      anchor shifted by -width or 0 per axis, bit d of delta selecting
      the offset on axis d (bit 0 = x) */
  inline vec3l dual_base_of(const CellCoord &c, int delta)
  {
    const int64_t w = cell_width(c.level);
    return {c.i - (delta & 1 ? 0 : w),
            c.j - (delta & 2 ? 0 : w),
            c.k - (delta & 4 ? 0 : w)};
  }

  /// all eight candidate bases, in delta order
  std::array<vec3l, 8> dual_bases_of_cell(const CellCoord &c);

  /*! snap the eight corners of the candidate dual at 'base' (spacing =
      the owner's cell width) and apply the ownership rules:

      #1 reject if any corner hits no cell;
      #2 reject if any corner is on a finer level than the owner;
      #3 reject if any same-level corner has a lower cell key.

      Together the rules hand each constructible dual to exactly one
      owner: the corner cell on the finest participating level with
      the lowest key. */
  std::optional<DualCell> try_build_dual(const CellIndex &index,
                                         const vec3l &base, int32_t level,
                                         CellId self,
                                         DualReject *reject = nullptr);

  /// the candidate duals of 'self' that the rules assign to it
  std::vector<DualCell> duals_of_cell(const CellIndex &index, CellId self,
                                      DualCounters *counters = nullptr);

  /*! corner ids sorted ascending: a canonical name for the dual's
      shape that is independent of which cell owned it */
  using DualKey = std::array<uint32_t, 8>;

  DualKey dual_key(const DualCell &dual);

} // namespace amriso
