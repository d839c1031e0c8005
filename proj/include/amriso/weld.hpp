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

#include "amriso/contour.hpp"

#include <span>

namespace amriso {

  /*! triangle mesh with shared vertices; triangles index into the
      vertex array */
  struct IndexedMesh {
    std::vector<vec3d> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;
  };

  /*! merge bitwise-identical corner positions into shared vertices.
      Tags each of the 3*N corners with its (triangle,corner) slot,
      sorts by position, and assigns vertex ids in sorted order, so
      the vertex array comes out position-sorted and the result is
      independent of the input triangle order up to that renaming.
      Positions that differ in any bit stay distinct vertices. */
  IndexedMesh weld(std::span<const FatTriangle> triangles);

} // namespace amriso
