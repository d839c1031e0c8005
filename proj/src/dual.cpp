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

#include "amriso/dual.hpp"

#include <algorithm>

namespace amriso {

  void DualCounters::note(DualReject r)
  {
    switch (r) {
    case DualReject::accepted: accepted++; break;
    case DualReject::missing_corner: missing_corner++; break;
    case DualReject::finer_corner: finer_corner++; break;
    case DualReject::lower_key_corner: lower_key_corner++; break;
    }
  }

  std::array<vec3l, 8> dual_bases_of_cell(const CellCoord &c)
  {
    std::array<vec3l, 8> bases;
    for (int delta = 0; delta < 8; delta++)
      bases[delta] = dual_base_of(c, delta);
    return bases;
  }

  std::optional<DualCell> try_build_dual(const CellIndex &index,
                                         const vec3l &base, int32_t level,
                                         CellId self, DualReject *reject)
  {
    const int64_t w = cell_width(level);
    const auto fail = [&](DualReject r) {
      if (reject) *reject = r;
      return std::nullopt;
    };

    DualCell dual;
    dual.base = base;
    dual.level = level;
    dual.owner = self;
    for (int d = 0; d < 8; d++) {
      const vec3l corner{base.x + ((d & 1) ? w : 0),
                         base.y + ((d & 2) ? w : 0),
                         base.z + ((d & 4) ? w : 0)};
      const auto hit = snap(index, corner, level);
      if (!hit)
        return fail(DualReject::missing_corner);
      const int32_t hit_level = index.coord(*hit).level;
      if (hit_level < level)
        return fail(DualReject::finer_corner);
      // ids are key-ordered, so id comparison is key comparison
      if (hit_level == level && *hit < self)
        return fail(DualReject::lower_key_corner);
      dual.corners[d] = *hit;
    }
    if (reject) *reject = DualReject::accepted;
    return dual;
  }

  std::vector<DualCell> duals_of_cell(const CellIndex &index, CellId self,
                                      DualCounters *counters)
  {
    std::vector<DualCell> duals;
    const CellCoord &c = index.coord(self);
    for (int delta = 0; delta < 8; delta++) {
      DualReject reject;
      const auto dual =
        try_build_dual(index, dual_base_of(c, delta), c.level, self, &reject);
      if (counters) counters->note(reject);
      if (dual) duals.push_back(*dual);
    }
    return duals;
  }

  DualKey dual_key(const DualCell &dual)
  {
    DualKey key;
    for (int d = 0; d < 8; d++)
      key[d] = dual.corners[d].index;
    std::sort(key.begin(), key.end());
    return key;
  }

} // namespace amriso
