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

#include "amriso/weld.hpp"

#include <algorithm>
#include <limits>

namespace amriso {

  namespace {
    struct TaggedCorner {
      vec3d pos;
      uint64_t tag;  // 3 * triangle + corner
    };
  }

  IndexedMesh weld(std::span<const FatTriangle> triangles)
  {
    IndexedMesh mesh;
    if (triangles.empty()) return mesh;
    if (triangles.size() > std::numeric_limits<uint32_t>::max() / 3)
      throw std::length_error("weld: too many triangles for 32-bit indices");

    std::vector<TaggedCorner> corners;
    corners.reserve(triangles.size() * 3);
    for (size_t t = 0; t < triangles.size(); t++) {
      corners.push_back({triangles[t].v0, 3 * t + 0});
      corners.push_back({triangles[t].v1, 3 * t + 1});
      corners.push_back({triangles[t].v2, 3 * t + 2});
    }

    // no NaNs reach the weld (crossing parameters stay in [0,1]), so
    // this comparison is a strict weak order
    std::sort(corners.begin(), corners.end(),
              [](const TaggedCorner &a, const TaggedCorner &b) {
                if (a.pos.x != b.pos.x) return a.pos.x < b.pos.x;
                if (a.pos.y != b.pos.y) return a.pos.y < b.pos.y;
                if (a.pos.z != b.pos.z) return a.pos.z < b.pos.z;
                return a.tag < b.tag;
              });

    mesh.triangles.resize(triangles.size());
    for (size_t n = 0; n < corners.size(); n++) {
      if (n == 0 || !(corners[n].pos == corners[n - 1].pos))
        mesh.vertices.push_back(corners[n].pos);
      const uint64_t tag = corners[n].tag;
      mesh.triangles[tag / 3][tag % 3] = uint32_t(mesh.vertices.size() - 1);
    }
    return mesh;
  }

} // namespace amriso
