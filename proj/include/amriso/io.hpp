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

#include "amriso/pipeline.hpp"

#include <filesystem>
#include <string>

namespace amriso {

  /*! header of the binary cell format: magic "AMRCELL1", then u32
      version (1), u64 cell count, u32 field count (1), all little-
      endian and packed to 24 bytes on disk (the u64 sits at offset
      12, so the file layout cannot be read as this struct directly);
      followed by cell_count records of i32 i,j,k,level plus f64
      scalar */
  struct AmrFileHeader {
    char magic[8];
    uint32_t version = 0;
    uint64_t cell_count = 0;
    uint32_t field_count = 0;
  };

  /*! load a cell dataset. Files ending in ".txt" are parsed as one
      "i j k level scalar" line per cell with '#' comments; anything
      else is read as the binary format. Malformed files raise
      LoadError naming the offending record or line. */
  CellIndex read_amr(const std::filesystem::path &path);

  /// write the dataset back out, format chosen by extension as above
  void write_amr(const CellIndex &index, const std::filesystem::path &path);

  /*! Wavefront OBJ text; numbers are shortest round-trip decimals so
      equal vertex bits always print as equal strings */
  std::string obj_string(const IndexedMesh &mesh);
  void write_obj(const IndexedMesh &mesh, const std::filesystem::path &path);

  /// binary little-endian PLY, float32 positions, uint32 indices
  std::string ply_string(const IndexedMesh &mesh);
  void write_ply(const IndexedMesh &mesh, const std::filesystem::path &path);

  /*! dual cells as text, one line per dual: eight cell centers in
      corner-slot order, then the eight scalars */
  std::string dual_mesh_string(const std::vector<DualCell> &duals,
                               const CellIndex &index);
  void write_dual_mesh(const std::vector<DualCell> &duals,
                       const CellIndex &index,
                       const std::filesystem::path &path);

  /*! write bytes to path via a sibling temp file plus rename, so a
      failed run never leaves a partial file at path */
  void write_file_atomic(const std::filesystem::path &path,
                         const std::string &bytes);

  /// shortest decimal string that parses back to exactly this double
  std::string format_double(double v);

} // namespace amriso
