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

#include "amriso/mc_tables.hpp"

#include <doctest.h>

#include <array>
#include <set>

using namespace amriso;

namespace {
  // the published corner and edge numbering, restated independently
  const int corner_off[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  const int edge_end[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                               {4, 5}, {5, 6}, {6, 7}, {7, 4},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}};
}

TEST_CASE("table_corner maps the published corner ring onto slot bits")
{
  std::set<int> seen;
  for (int c = 0; c < 8; c++) {
    const int slot =
      corner_off[c][0] + 2 * corner_off[c][1] + 4 * corner_off[c][2];
    CHECK(mc::table_corner[c] == slot);
    seen.insert(mc::table_corner[c]);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("edge_corner agrees with the published edge endpoints")
{
  for (int e = 0; e < 12; e++) {
    const int u = mc::table_corner[edge_end[e][0]];
    const int v = mc::table_corner[edge_end[e][1]];
    CHECK(mc::edge_corner[e][0] == u);
    CHECK(mc::edge_corner[e][1] == v);
  }
}

TEST_CASE("to_table_case permutes corner bits both ways")
{
  CHECK(mc::to_table_case(0) == 0);
  CHECK(mc::to_table_case(255) == 255);
  for (int row = 0; row < 256; row++) {
    int slot_mask = 0;
    for (int c = 0; c < 8; c++)
      if (row & (1 << c)) slot_mask |= 1 << mc::table_corner[c];
    CHECK(mc::to_table_case(slot_mask) == row);
  }
}

TEST_CASE("triangle rows are well formed")
{
  for (int row = 0; row < 256; row++) {
    const int8_t *entry = mc::tri_table[row];
    int count = 0;
    while (count < 16 && entry[count] >= 0)
      count++;
    CHECK(count % 3 == 0);
    CHECK(count <= 15);  // at most five triangles
    for (int n = count; n < 16; n++)
      CHECK(entry[n] == -1);
    for (int n = 0; n < count; n++)
      CHECK(entry[n] < 12);
  }
  CHECK(mc::tri_table[0][0] == -1);
  CHECK(mc::tri_table[255][0] == -1);
}

TEST_CASE("edge_table lists exactly the edges the triangles use")
{
  for (int row = 0; row < 256; row++) {
    uint16_t used = 0;
    const int8_t *entry = mc::tri_table[row];
    for (int n = 0; n < 16 && entry[n] >= 0; n++)
      used |= uint16_t(1) << entry[n];
    CHECK(mc::edge_table[row] == used);
  }
}

TEST_CASE("every selected edge crosses the classification")
{
  for (int row = 0; row < 256; row++) {
    // row bit c classifies the cell in slot table_corner[c]
    bool above[8] = {};
    for (int c = 0; c < 8; c++)
      above[mc::table_corner[c]] = (row >> c) & 1;

    const int8_t *entry = mc::tri_table[row];
    for (int n = 0; n < 16 && entry[n] >= 0; n++) {
      const int u = mc::edge_corner[entry[n]][0];
      const int v = mc::edge_corner[entry[n]][1];
      CHECK(above[u] != above[v]);
    }
  }
}

TEST_CASE("complementary cases select the same edges")
{
  // the published triangulation patches complementary cases with
  // different triangle counts in the ambiguous configurations, but the
  // crossing edges, and so the generated vertices, always match
  for (int row = 0; row < 256; row++)
    CHECK(mc::edge_table[row] == mc::edge_table[255 - row]);
}
