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

#include "amriso/core.hpp"

#include <optional>
#include <string>
#include <utility>

namespace amriso {

  /*! position of a cell in the sorted dataset arrays. Because the
      arrays are sorted by cell_key_compare, comparing ids compares
      cell keys. */
  struct CellId {
    uint32_t index = 0;
    friend auto operator<=>(const CellId &, const CellId &) = default;
  };

  /*! query structure over an AmrDataset. The sorted cell array itself
      is the search structure; all point queries are binary searches
      over it, one attempt per level present. */
  struct CellIndex {
    AmrDataset data;
    std::vector<int32_t> levels;  // distinct levels present, finest first

    size_t size() const { return data.cells.size(); }
    const CellCoord &coord(CellId id) const { return data.cells[id.index]; }
    double scalar(CellId id) const { return data.scalars[id.index]; }
  };

  /*! sort cells (with their scalars) by cell_key_compare and wrap them
      in a CellIndex. Rejects empty input, mismatched array lengths,
      levels outside [0,MAX_LEVEL], and anchors that are not multiples
      of their cell width. Duplicates and overlaps are legal here;
      validate_dataset reports them. */
  CellIndex build_index(std::vector<CellCoord> cells,
                        std::vector<double> scalars);

  /// cell with exactly this key, if present
  std::optional<CellId> find_exact(const CellIndex &index,
                                   const CellCoord &coord);

  /*! cell whose box contains the integer point p, if any. Per level l
      the candidate anchor is p with the lower l bits masked off, so
      one exact lookup per level decides containment. hint_level (if
      in [0,MAX_LEVEL]) is probed first; the remaining levels present
      are probed finest to coarsest. On overlapping datasets this
      returns the first hit in that probe order. */
  std::optional<CellId> snap(const CellIndex &index, const vec3l &p,
                             int32_t hint_level = -1);

  /*! pairs of cells that violate the dataset contract: duplicates are
      cells with identical keys, overlaps are distinct cells whose
      boxes intersect (always a finer cell inside a coarser one; the
      finer id comes first in the pair) */
  struct ValidationReport {
    std::vector<std::pair<CellId, CellId>> duplicates;
    std::vector<std::pair<CellId, CellId>> overlaps;

    bool ok() const { return duplicates.empty() && overlaps.empty(); }
    std::string describe(const CellIndex &index) const;
  };

  ValidationReport validate_dataset(const CellIndex &index);

} // namespace amriso
