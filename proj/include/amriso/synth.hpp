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

#include <set>
#include <string>

namespace amriso {

  /*! analytic scalar fields for generating test data: signed distance
      to a sphere, a linear ramp, or a radial sine */
  struct FieldSpec {
    enum class Kind { sphere, linear, radial_sine };

    Kind kind = Kind::sphere;
    vec3d center{0, 0, 0};     // sphere, radial_sine
    double radius = 1;         // sphere
    vec3d gradient{1, 0, 0};   // linear
    double offset = 0;         // linear
    double frequency = 1;      // radial_sine

    static FieldSpec sphere(const vec3d &center, double radius);
    static FieldSpec linear(const vec3d &gradient, double offset);
    static FieldSpec radial_sine(const vec3d &center, double frequency);

    /*! parse "sphere:cx,cy,cz,r", "linear:gx,gy,gz,offset" or
        "rsine:cx,cy,cz,freq"; throws LoadError on anything else */
    static FieldSpec parse(const std::string &text);

    double eval(const vec3d &p) const;
  };

  /// n^3 level-0 cells anchored at the origin, field sampled at centers
  CellIndex gen_uniform(int32_t n, const FieldSpec &field);

  /*! octree-style refinement of a single level-'depth' root cell at
      the origin: any cell whose field range over its eight box corners
      exceeds threshold splits into its eight children, down to level 0 */
  CellIndex gen_octree(int32_t depth, const FieldSpec &field,
                       double threshold);

  /// a grid of same-level cells: size.x*size.y*size.z cells from anchor
  struct BlockSpec {
    vec3i anchor;   // multiple of 2^level per axis
    vec3i size;     // extent in cells, all positive
    int32_t level = 0;
  };

  /*! assemble a dataset from uniform blocks, dropping every cell whose
      box intersects one of the hole regions. The caller is responsible
      for making blocks non-overlapping (validate_dataset checks). */
  CellIndex gen_blocks(const std::vector<BlockSpec> &blocks,
                       const FieldSpec &field,
                       const std::vector<Box3l> &holes = {});

  /*! reference dual enumeration by brute force, for testing the
      per-cell construction: try every unit-spacing corner stencil
      with a base in 'bases' (all eight corners snapped to cells),
      keep stencils where no axis is fully degenerate, and name each
      by its sorted corner ids. An axis is fully degenerate when all
      four corner pairs along it landed in the same cell; such a
      stencil spans zero extent on that axis and no hexahedron over
      these corner cells exists. */
  std::set<DualKey> exhaustive_duals(const CellIndex &index,
                                     const Box3l &bases);

  /// as above with the base range derived from the dataset bounds
  std::set<DualKey> exhaustive_duals(const CellIndex &index);

  /*! reference contouring for fully uniform level-0 datasets: walk the
      dense grid of unit cubes between cell centers directly, with the
      same case tables, interpolation arithmetic and weld as the real
      pipeline but none of its snapping or ownership machinery.
      Requires a gap-free level-0 grid. */
  IndexedMesh uniform_mc_reference(const CellIndex &index, double iso);

} // namespace amriso
