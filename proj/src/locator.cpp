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

#include "amriso/locator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace amriso {

  CellIndex build_index(std::vector<CellCoord> cells,
                        std::vector<double> scalars)
  {
    if (cells.empty())
      throw LoadError("dataset is empty");
    if (cells.size() != scalars.size())
      throw LoadError("cell count " + std::to_string(cells.size())
                      + " does not match scalar count "
                      + std::to_string(scalars.size()));
    if (cells.size() > size_t(std::numeric_limits<uint32_t>::max()))
      throw LoadError("dataset too large for 32-bit cell ids");

    for (size_t n = 0; n < cells.size(); n++) {
      const CellCoord &c = cells[n];
      if (c.level < 0 || c.level > MAX_LEVEL)
        throw LoadError("record " + std::to_string(n) + ": level "
                        + std::to_string(c.level) + " out of range [0,"
                        + std::to_string(MAX_LEVEL) + "]");
      if (!is_aligned(c))
        throw LoadError("record " + std::to_string(n) + ": anchor ("
                        + std::to_string(c.i) + " " + std::to_string(c.j)
                        + " " + std::to_string(c.k)
                        + ") is not a multiple of the level-"
                        + std::to_string(c.level) + " cell width");
    }

    // sort through a permutation so cells and scalars stay paired; ties
    // (duplicate keys) keep their input order
    std::vector<uint32_t> perm(cells.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
      const auto order = cell_key_compare(cells[a], cells[b]);
      if (order != 0) return order < 0;
      return a < b;
    });

    CellIndex index;
    index.data.cells.reserve(cells.size());
    index.data.scalars.reserve(cells.size());
    for (uint32_t p : perm) {
      index.data.cells.push_back(cells[p]);
      index.data.scalars.push_back(scalars[p]);
    }

    Box3l bounds = cell_box(index.data.cells.front());
    int32_t max_level = 0;
    for (const CellCoord &c : index.data.cells) {
      max_level = std::max(max_level, c.level);
      const Box3l box = cell_box(c);
      bounds.lo.x = std::min(bounds.lo.x, box.lo.x);
      bounds.lo.y = std::min(bounds.lo.y, box.lo.y);
      bounds.lo.z = std::min(bounds.lo.z, box.lo.z);
      bounds.hi.x = std::max(bounds.hi.x, box.hi.x);
      bounds.hi.y = std::max(bounds.hi.y, box.hi.y);
      bounds.hi.z = std::max(bounds.hi.z, box.hi.z);
    }
    index.data.max_level = max_level;
    index.data.bounds = bounds;

    std::vector<bool> present(size_t(max_level) + 1, false);
    for (const CellCoord &c : index.data.cells)
      present[c.level] = true;
    for (int32_t l = 0; l <= max_level; l++)
      if (present[l]) index.levels.push_back(l);

    return index;
  }

  std::optional<CellId> find_exact(const CellIndex &index,
                                   const CellCoord &coord)
  {
    const auto &cells = index.data.cells;
    const auto it = std::lower_bound(cells.begin(), cells.end(), coord);
    if (it == cells.end() || *it != coord) return std::nullopt;
    return CellId{uint32_t(it - cells.begin())};
  }

  namespace {
    /*! the only cell on 'level' that could contain p is the one
        anchored at p with the lower level bits masked off; anchors
        beyond int32 cannot name a stored cell */
    std::optional<CellId> snap_on_level(const CellIndex &index,
                                        const vec3l &p, int32_t level)
    {
      const int64_t ax = anchor_mask(p.x, level);
      const int64_t ay = anchor_mask(p.y, level);
      const int64_t az = anchor_mask(p.z, level);
      constexpr int64_t lo = std::numeric_limits<int32_t>::min();
      constexpr int64_t hi = std::numeric_limits<int32_t>::max();
      if (ax < lo || ax > hi || ay < lo || ay > hi || az < lo || az > hi)
        return std::nullopt;
      return find_exact(index, CellCoord{int32_t(ax), int32_t(ay),
                                         int32_t(az), level});
    }
  }

  std::optional<CellId> snap(const CellIndex &index, const vec3l &p,
                             int32_t hint_level)
  {
    if (hint_level >= 0 && hint_level <= MAX_LEVEL)
      if (const auto hit = snap_on_level(index, p, hint_level))
        return hit;
    for (const int32_t level : index.levels) {
      if (level == hint_level) continue;
      if (const auto hit = snap_on_level(index, p, level))
        return hit;
    }
    return std::nullopt;
  }

  ValidationReport validate_dataset(const CellIndex &index)
  {
    ValidationReport report;
    const auto &cells = index.data.cells;

    for (size_t n = 0; n + 1 < cells.size(); n++)
      if (cells[n] == cells[n + 1])
        report.duplicates.push_back({CellId{uint32_t(n)},
                                     CellId{uint32_t(n + 1)}});

    // any overlap pairs a finer cell with a coarser one whose anchor is
    // the finer anchor masked to the coarser level, so one exact lookup
    // per coarser level present finds them all
    for (size_t n = 0; n < cells.size(); n++) {
      const CellCoord &c = cells[n];
      for (const int32_t level : index.levels) {
        if (level <= c.level) continue;
        const CellCoord probe{int32_t(anchor_mask(c.i, level)),
                              int32_t(anchor_mask(c.j, level)),
                              int32_t(anchor_mask(c.k, level)), level};
        if (const auto hit = find_exact(index, probe))
          report.overlaps.push_back({CellId{uint32_t(n)}, *hit});
      }
    }
    return report;
  }

  std::string ValidationReport::describe(const CellIndex &index) const
  {
    std::ostringstream out;
    const auto print_cell = [&](CellId id) {
      const CellCoord &c = index.coord(id);
      out << "(" << c.i << " " << c.j << " " << c.k << " level " << c.level
          << ")";
    };
    out << duplicates.size() << " duplicate pair(s), " << overlaps.size()
        << " overlap pair(s)";
    constexpr size_t max_listed = 8;
    for (size_t n = 0; n < duplicates.size() && n < max_listed; n++) {
      out << "\n  duplicate cell ";
      print_cell(duplicates[n].first);
    }
    for (size_t n = 0; n < overlaps.size() && n < max_listed; n++) {
      out << "\n  cell ";
      print_cell(overlaps[n].first);
      out << " lies inside ";
      print_cell(overlaps[n].second);
    }
    return out.str();
  }

} // namespace amriso
