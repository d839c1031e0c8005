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

#include "amriso/synth.hpp"

#include <atomic>
#include <filesystem>
#include <random>
#include <unistd.h>

namespace amriso {
  namespace testing {

    inline double unit_scalar(std::mt19937 &rng)
    {
      return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    }

    /*! random mixed-level dataset on a slot grid: slots^3 cubes of
        width 2^max_level each; every slot independently stays empty,
        becomes one cell of some level, or fills with finer cells.
        Slots never overlap, so the result always validates clean. */
    inline CellIndex random_slot_dataset(std::mt19937 &rng, int slots,
                                         int max_level,
                                         double hole_prob = 0.15)
    {
      std::vector<CellCoord> cells;
      std::vector<double> scalars;
      const int64_t W = cell_width(max_level);
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      std::uniform_int_distribution<int> pick_level(0, max_level);

      for (int sz = 0; sz < slots; sz++)
        for (int sy = 0; sy < slots; sy++)
          for (int sx = 0; sx < slots; sx++) {
            if (u01(rng) < hole_prob) continue;
            const int32_t level = pick_level(rng);
            const int64_t w = cell_width(level);
            for (int64_t dz = 0; dz < W; dz += w)
              for (int64_t dy = 0; dy < W; dy += w)
                for (int64_t dx = 0; dx < W; dx += w) {
                  cells.push_back({int32_t(sx * W + dx),
                                   int32_t(sy * W + dy),
                                   int32_t(sz * W + dz), level});
                  scalars.push_back(unit_scalar(rng));
                }
          }

      if (cells.empty()) {
        cells.push_back({0, 0, 0, int32_t(max_level)});
        scalars.push_back(0.5);
      }
      return build_index(std::move(cells), std::move(scalars));
    }

    /// first cell whose box contains p, by linear scan (the slow oracle)
    inline std::optional<CellId> scan_locate(const CellIndex &index,
                                             const vec3l &p)
    {
      for (size_t n = 0; n < index.size(); n++)
        if (cell_contains(index.data.cells[n], p))
          return CellId{uint32_t(n)};
      return std::nullopt;
    }

    /// accepted duals of every cell, in owner-major order
    inline std::vector<DualCell> all_duals(const CellIndex &index,
                                           DualCounters *counters = nullptr)
    {
      std::vector<DualCell> duals;
      for (size_t n = 0; n < index.size(); n++) {
        const auto of_cell =
          duals_of_cell(index, CellId{uint32_t(n)}, counters);
        duals.insert(duals.end(), of_cell.begin(), of_cell.end());
      }
      return duals;
    }

    /*! random degenerate hex: partition the 2x2x2 corner slots into
        axis-aligned boxes (the shapes coarse corner cells produce),
        one fake cell per box with one value and one center, so
        collapsed corners agree in cell, position and value */
    inline HexInput random_degenerate_hex(std::mt19937 &rng)
    {
      struct Bx {
        int lo[3], hi[3];  // half-open in slot units
      };
      std::vector<Bx> boxes{{{0, 0, 0}, {2, 2, 2}}};
      const int splits = int(rng() % 5);
      for (int s = 0; s < splits; s++) {
        const size_t pick = rng() % boxes.size();
        const int axis = int(rng() % 3);
        Bx box = boxes[pick];
        if (box.hi[axis] - box.lo[axis] < 2) continue;
        Bx upper = box;
        box.hi[axis] = upper.lo[axis] = box.lo[axis] + 1;
        boxes[pick] = box;
        boxes.push_back(upper);
      }

      std::vector<double> block_value(boxes.size());
      for (double &v : block_value)
        v = unit_scalar(rng);

      HexInput hex;
      for (int d = 0; d < 8; d++) {
        const int p[3] = {d & 1, (d >> 1) & 1, (d >> 2) & 1};
        for (size_t b = 0; b < boxes.size(); b++) {
          const Bx &box = boxes[b];
          bool inside = true;
          for (int a = 0; a < 3; a++)
            inside = inside && p[a] >= box.lo[a] && p[a] < box.hi[a];
          if (!inside) continue;
          hex.cell[d] = CellId{uint32_t(b)};
          hex.pos[d] = {0.5 * (box.lo[0] + box.hi[0]),
                        0.5 * (box.lo[1] + box.hi[1]),
                        0.5 * (box.lo[2] + box.hi[2])};
          hex.value[d] = block_value[b];
          break;
        }
      }
      return hex;
    }

    /// unique scratch directory, removed on destruction
    struct TempDir {
      std::filesystem::path path;

      TempDir()
      {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path()
               / ("amriso_test_" + std::to_string(getpid()) + "_"
                  + std::to_string(counter++));
        std::filesystem::create_directories(path);
      }
      ~TempDir()
      {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
      }
      std::string file(const std::string &name) const
      {
        return (path / name).string();
      }
    };

  } // namespace testing
} // namespace amriso
