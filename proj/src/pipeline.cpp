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

#include "amriso/pipeline.hpp"
#include "amriso/parallel.hpp"

#include <chrono>
#include <limits>

namespace amriso {

  namespace {

    /// candidate duals per chunk; the unit of work distribution
    constexpr uint64_t CHUNK_TASKS = 8192;

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point start)
    {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }

    /*! candidate task t of 8*N is candidate delta (t mod 8) of cell
        (t div 8); visit every candidate of one chunk, reporting each
        accepted dual to 'on_dual' */
    template <typename OnDual>
    void scan_chunk(const CellIndex &index, uint64_t chunk,
                    DualCounters *counters, OnDual &&on_dual)
    {
      const uint64_t tasks = uint64_t(index.size()) * 8;
      const uint64_t begin = chunk * CHUNK_TASKS;
      const uint64_t end = std::min(begin + CHUNK_TASKS, tasks);
      for (uint64_t task = begin; task < end; task++) {
        const CellId self{uint32_t(task >> 3)};
        const int delta = int(task & 7);
        const CellCoord &c = index.coord(self);
        DualReject reject;
        const auto dual = try_build_dual(index, dual_base_of(c, delta),
                                         c.level, self, &reject);
        if (counters) counters->note(reject);
        if (dual) on_dual(*dual);
      }
    }

    uint64_t chunk_count_for(const CellIndex &index)
    {
      const uint64_t tasks = uint64_t(index.size()) * 8;
      return (tasks + CHUNK_TASKS - 1) / CHUNK_TASKS;
    }

  } // namespace

  ExtractionResult extract_isosurface(const CellIndex &index,
                                      const IsoParams &params)
  {
    if (index.size() == 0)
      throw std::invalid_argument("extract_isosurface: empty dataset");

    const int threads = resolve_thread_count(params.thread_count);
    const uint64_t chunks = chunk_count_for(index);

    ExtractionResult result;
    ExtractionStats &stats = result.stats;
    stats.cell_count = index.size();

    // pass 1: count triangles per chunk
    std::vector<uint64_t> chunk_triangles(chunks, 0);
    std::vector<DualCounters> chunk_counters(chunks);
    const auto t_pass1 = Clock::now();
    parallel_chunks(chunks, threads, [&](size_t chunk) {
      uint64_t count = 0;
      scan_chunk(index, chunk, &chunk_counters[chunk],
                 [&](const DualCell &dual) {
                   count += contour_hex(make_hex_input(index, dual),
                                        params.iso).count;
                 });
      chunk_triangles[chunk] = count;
    });
    stats.seconds_pass1 = seconds_since(t_pass1);

    DualCounters counters;
    for (const DualCounters &c : chunk_counters) {
      counters.accepted += c.accepted;
      counters.missing_corner += c.missing_corner;
      counters.finer_corner += c.finer_corner;
      counters.lower_key_corner += c.lower_key_corner;
    }
    stats.duals_accepted = counters.accepted;
    stats.duals_missing_corner = counters.missing_corner;
    stats.duals_finer_corner = counters.finer_corner;
    stats.duals_lower_key_corner = counters.lower_key_corner;
    detail::require(counters.total() == uint64_t(index.size()) * 8,
                    "extract_isosurface: candidate accounting broken");

    // exclusive prefix sum assigns each chunk a disjoint output range
    std::vector<uint64_t> chunk_base(chunks + 1, 0);
    for (uint64_t c = 0; c < chunks; c++)
      chunk_base[c + 1] = chunk_base[c] + chunk_triangles[c];
    const uint64_t total = chunk_base[chunks];
    stats.pass1_triangle_count = total;

    if (total > std::numeric_limits<uint32_t>::max() / 3)
      throw std::length_error(
        "extract_isosurface: mesh too large for 32-bit indices");

    // pass 2: recompute and write at the assigned offsets
    std::vector<FatTriangle> fat(total);
    std::vector<uint64_t> chunk_emitted(chunks, 0);
    const auto t_pass2 = Clock::now();
    parallel_chunks(chunks, threads, [&](size_t chunk) {
      uint64_t at = chunk_base[chunk];
      scan_chunk(index, chunk, nullptr, [&](const DualCell &dual) {
        const TriangleBatch batch =
          contour_hex(make_hex_input(index, dual), params.iso);
        for (int n = 0; n < batch.count; n++) {
          detail::require(at < chunk_base[chunk + 1],
                          "extract_isosurface: pass 2 emitted more "
                          "triangles than pass 1 counted");
          fat[at++] = batch.tri[n];
        }
      });
      detail::require(at == chunk_base[chunk + 1],
                      "extract_isosurface: pass 2 emitted fewer "
                      "triangles than pass 1 counted");
      chunk_emitted[chunk] = at - chunk_base[chunk];
    });
    stats.seconds_pass2 = seconds_since(t_pass2);

    uint64_t emitted = 0;
    for (const uint64_t e : chunk_emitted)
      emitted += e;
    stats.fat_triangle_count = emitted;

    const auto t_weld = Clock::now();
    result.mesh = weld(fat);
    stats.seconds_weld = seconds_since(t_weld);
    stats.welded_vertex_count = result.mesh.vertices.size();
    stats.welded_triangle_count = result.mesh.triangles.size();

    if (params.emit_dual_mesh)
      result.duals = extract_dual_mesh(index, threads);

    return result;
  }

  std::vector<DualCell> extract_dual_mesh(const CellIndex &index,
                                          int thread_count)
  {
    if (index.size() == 0)
      throw std::invalid_argument("extract_dual_mesh: empty dataset");

    const int threads = resolve_thread_count(thread_count);
    const uint64_t chunks = chunk_count_for(index);

    std::vector<uint64_t> chunk_duals(chunks, 0);
    parallel_chunks(chunks, threads, [&](size_t chunk) {
      uint64_t count = 0;
      scan_chunk(index, chunk, nullptr, [&](const DualCell &) { count++; });
      chunk_duals[chunk] = count;
    });

    std::vector<uint64_t> chunk_base(chunks + 1, 0);
    for (uint64_t c = 0; c < chunks; c++)
      chunk_base[c + 1] = chunk_base[c] + chunk_duals[c];

    std::vector<DualCell> duals(chunk_base[chunks]);
    parallel_chunks(chunks, threads, [&](size_t chunk) {
      uint64_t at = chunk_base[chunk];
      scan_chunk(index, chunk, nullptr, [&](const DualCell &dual) {
        detail::require(at < chunk_base[chunk + 1],
                        "extract_dual_mesh: emit count drifted from "
                        "the counting pass");
        duals[at++] = dual;
      });
      detail::require(at == chunk_base[chunk + 1],
                      "extract_dual_mesh: emit count drifted from "
                      "the counting pass");
    });
    return duals;
  }

} // namespace amriso
