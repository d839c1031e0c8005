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

#include "amriso/weld.hpp"

namespace amriso {

  struct IsoParams {
    double iso = 0.0;
    bool emit_dual_mesh = false;
    int thread_count = 0;  // <=0: resolve_thread_count decides
  };

  struct ExtractionStats {
    uint64_t cell_count = 0;

    // candidate duals, split by outcome; the four sum to 8*cell_count
    uint64_t duals_accepted = 0;
    uint64_t duals_missing_corner = 0;
    uint64_t duals_finer_corner = 0;
    uint64_t duals_lower_key_corner = 0;

    uint64_t pass1_triangle_count = 0;  // counted before allocation
    uint64_t fat_triangle_count = 0;    // written in the emit pass

    uint64_t welded_vertex_count = 0;
    uint64_t welded_triangle_count = 0;

    double seconds_sort = 0;   // build_index time, if measured here
    double seconds_pass1 = 0;  // counting pass
    double seconds_pass2 = 0;  // emit pass
    double seconds_weld = 0;
  };

  struct ExtractionResult {
    IndexedMesh mesh;
    ExtractionStats stats;
    std::vector<DualCell> duals;  // filled only if emit_dual_mesh
  };

  /*! full iso-surface extraction over an AMR dataset.

      Runs two identical passes over all 8*N candidate duals: pass 1
      only counts triangles per fixed-size chunk of candidates, a
      prefix sum over the chunk counts assigns each chunk a disjoint
      output range, and pass 2 recomputes the same triangles and
      writes them at those offsets. Output position therefore depends
      only on candidate order, never on thread scheduling, and the
      final mesh is byte-identical for every thread count. */
  ExtractionResult extract_isosurface(const CellIndex &index,
                                      const IsoParams &params);

  /*! just the dual cells, in candidate order (owning cell major,
      delta minor), built with the same two-pass scheme */
  std::vector<DualCell> extract_dual_mesh(const CellIndex &index,
                                          int thread_count = 0);

} // namespace amriso
