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

#include <cstdint>

namespace amriso {
  namespace mc {

    /*! the classic 256-case marching cubes tables, in the corner and
        edge numbering they were published with: corner 0 at (0,0,0),
        1 at (1,0,0), 2 at (1,1,0), 3 at (0,1,0), corners 4..7 the
        same ring shifted by +z; edges 0..3 ring the z=0 face, 4..7
        the z=1 face, 8..11 run along z from corner n-8.

        The rest of this library numbers hex corners differently
        (slot d = dz*4 + dy*2 + dx); table_corner and edge_corner
        translate between the two numberings, and to_table_case maps
        a slot-numbered inside/outside mask to the table row. */
    extern const uint16_t edge_table[256];
    extern const int8_t tri_table[256][16];

    /// table corner -> slot-numbered corner
    extern const uint8_t table_corner[8];

    /// table edge -> its two endpoints, slot-numbered
    extern const uint8_t edge_corner[12][2];

    /// slot-numbered corner mask -> table row index
    int to_table_case(int slot_mask);

  } // namespace mc
} // namespace amriso
