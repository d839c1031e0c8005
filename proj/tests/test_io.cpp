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

#include "fixtures.hpp"

#include "amriso/io.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

using namespace amriso;
using namespace amriso::testing;

namespace {

  bool same_bits(double a, double b)
  {
    return std::bit_cast<uint64_t>(a) == std::bit_cast<uint64_t>(b);
  }

  void dump(const std::string &path, const std::string &bytes)
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(bool(out));
    out.write(bytes.data(), std::streamsize(bytes.size()));
    REQUIRE(bool(out));
  }

  std::string slurp(const std::string &path)
  {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }

  template <typename T>
  void patch(std::string &bytes, size_t offset, T v)
  {
    REQUIRE(offset + sizeof(T) <= bytes.size());
    std::memcpy(bytes.data() + offset, &v, sizeof(T));
  }

  /// message of the LoadError that reading 'path' raises
  std::string load_error(const std::string &path)
  {
    try {
      read_amr(path);
    } catch (const LoadError &e) {
      return e.what();
    }
    FAIL("expected LoadError from ", path);
    return "";
  }

  bool contains(const std::string &text, const std::string &needle)
  {
    return text.find(needle) != std::string::npos;
  }

  IndexedMesh tiny_mesh()
  {
    IndexedMesh mesh;
    mesh.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.5, 0.5, 1.5}};
    mesh.triangles = {{0, 1, 2}, {1, 3, 2}};
    return mesh;
  }

} // namespace

TEST_CASE("binary cell files round-trip bit for bit")
{
  std::mt19937 rng(99);
  const CellIndex index = random_slot_dataset(rng, 3, 2);
  TempDir dir;
  const std::string path = dir.file("cells.amr");

  write_amr(index, path);
  const CellIndex back = read_amr(path);

  REQUIRE(back.size() == index.size());
  CHECK(back.data.cells == index.data.cells);
  for (size_t n = 0; n < back.size(); n++)
    CHECK(same_bits(back.data.scalars[n], index.data.scalars[n]));
  CHECK(back.data.bounds.lo == index.data.bounds.lo);
  CHECK(back.data.bounds.hi == index.data.bounds.hi);
  CHECK(back.levels == index.levels);

  // the file is exactly header plus one 24-byte record per cell
  CHECK(slurp(path).size() == 24 + 24 * index.size());
}

TEST_CASE("text cell files round-trip bit for bit")
{
  std::vector<CellCoord> cells = {
    {-4, -4, -4, 2}, {0, 0, 0, 1}, {2, 0, 0, 1}};
  std::vector<double> scalars = {0.25, -1.25e-7, 3.0};
  const CellIndex index = build_index(cells, scalars);

  TempDir dir;
  const std::string path = dir.file("cells.txt");
  write_amr(index, path);

  const std::string text = slurp(path);
  CHECK(contains(text, "# amriso cells: 3"));
  CHECK(contains(text, "-4 -4 -4 2 0.25"));
  CHECK(contains(text, "0 0 0 1 -1.25e-07"));

  const CellIndex back = read_amr(path);
  REQUIRE(back.size() == 3);
  CHECK(back.data.cells == index.data.cells);
  for (size_t n = 0; n < 3; n++)
    CHECK(same_bits(back.data.scalars[n], index.data.scalars[n]));
}

TEST_CASE("text parsing: comments, blanks, and rejects with line numbers")
{
  TempDir dir;
  const std::string path = dir.file("cells.txt");

  dump(path,
       "# header comment\n"
       "\n"
       "0 0 0 0 1.5   # inline comment\n"
       "   \t\n"
       "1 0 0 0 -2\n");
  const CellIndex ok = read_amr(path);
  REQUIRE(ok.size() == 2);
  CHECK(ok.data.cells[0] == CellCoord{0, 0, 0, 0});
  CHECK(ok.data.scalars[0] == 1.5);
  CHECK(ok.data.scalars[1] == -2.0);

  dump(path, "0 0 0 0 1\n1 0 0\n");
  CHECK(contains(load_error(path), "line 2: expected 'i j k level scalar'"));

  dump(path, "0 0 0 0 1\nx 0 0 0 1\n");
  CHECK(contains(load_error(path), "line 2: expected"));

  dump(path, "0 0 0 0 1 9\n");
  CHECK(contains(load_error(path), "line 1: trailing characters '9'"));

  dump(path, "# c\n3000000000 0 0 0 1\n");
  CHECK(contains(load_error(path), "line 2: anchor out of 32-bit range"));

  dump(path, "0 0 0 31 1\n");
  CHECK(contains(load_error(path), "line 1: level 31 out of range"));

  // stream extraction refuses the nan spelling outright
  dump(path, "0 0 0 0 nan\n");
  CHECK(contains(load_error(path), "line 1: expected"));

  dump(path, "1 0 0 1 0.5\n");  // misaligned for its level
  CHECK(contains(load_error(path), "not a multiple"));

  dump(path, "# only comments\n\n");
  CHECK(contains(load_error(path), "empty"));
}

TEST_CASE("binary parsing rejects malformed files with clear messages")
{
  const CellIndex index = build_index(
    {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}, {1.0, 2.0, 3.0});
  TempDir dir;
  const std::string good_path = dir.file("good.amr");
  write_amr(index, good_path);
  const std::string good = slurp(good_path);
  const std::string path = dir.file("bad.amr");

  dump(path, good.substr(0, 10));
  CHECK(contains(load_error(path), "shorter than the 24-byte header"));

  std::string bad = good;
  bad[0] = 'X';
  dump(path, bad);
  CHECK(contains(load_error(path), "bad magic"));

  bad = good;
  patch<uint32_t>(bad, 8, 2);
  dump(path, bad);
  CHECK(contains(load_error(path), "unsupported version 2"));

  bad = good;
  patch<uint32_t>(bad, 20, 7);
  dump(path, bad);
  CHECK(contains(load_error(path), "file declares 7"));

  bad = good;
  patch<uint64_t>(bad, 12, 0);
  dump(path, bad);
  CHECK(contains(load_error(path), "zero cells"));

  bad = good;
  patch<uint64_t>(bad, 12, uint64_t(index.size()) + 1);
  dump(path, bad);
  const std::string trunc = load_error(path);
  CHECK(contains(trunc, "truncated"));
  CHECK(contains(trunc, std::to_string(index.size() + 1)));
  CHECK(contains(trunc, std::to_string(index.size())));

  dump(path, good + "xyz");
  CHECK(contains(load_error(path), "3 trailing bytes"));

  bad = good;
  patch<double>(bad, 24 + 24 + 16, std::nan(""));  // record 1 scalar
  dump(path, bad);
  CHECK(contains(load_error(path), "record 1: scalar is not finite"));

  bad = good;
  patch<int32_t>(bad, 24 + 12, 31);  // record 0 level
  dump(path, bad);
  CHECK(contains(load_error(path), "record 0: level 31 out of range"));

  // every message names the file
  CHECK(contains(load_error(path), path));

  CHECK(contains(load_error(dir.file("absent.amr")), "cannot open"));
}

TEST_CASE("shortest round-trip double formatting")
{
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5e-7) == "-2.5e-07");

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-30, 30);
  for (int n = 0; n < 10000; n++) {
    const double v = std::ldexp(mant(rng), expo(rng));
    const std::string s = format_double(v);
    CHECK(same_bits(std::strtod(s.c_str(), nullptr), v));
  }
}

TEST_CASE("OBJ output is exact text with 1-based faces")
{
  const std::string obj = obj_string(tiny_mesh());
  CHECK(obj
        == "# amriso mesh: 4 vertices, 2 triangles\n"
           "v 0 0 0\n"
           "v 1 0 0\n"
           "v 0 1 0\n"
           "v 0.5 0.5 1.5\n"
           "f 1 2 3\n"
           "f 2 4 3\n");
}

TEST_CASE("PLY output: header plus packed little-endian payload")
{
  const IndexedMesh mesh = tiny_mesh();
  const std::string ply = ply_string(mesh);

  const std::string expected_header =
    "ply\n"
    "format binary_little_endian 1.0\n"
    "comment amriso mesh\n"
    "element vertex 4\n"
    "property float x\n"
    "property float y\n"
    "property float z\n"
    "element face 2\n"
    "property list uchar uint vertex_indices\n"
    "end_header\n";
  REQUIRE(ply.substr(0, expected_header.size()) == expected_header);

  const size_t payload = expected_header.size();
  REQUIRE(ply.size() == payload + 4 * 12 + 2 * 13);

  float f;
  std::memcpy(&f, ply.data() + payload, 4);
  CHECK(f == 0.0f);
  std::memcpy(&f, ply.data() + payload + 3 * 12 + 8, 4);  // vertex 3 z
  CHECK(f == 1.5f);

  CHECK(ply[payload + 48] == 3);  // first face list length
  uint32_t idx;
  std::memcpy(&idx, ply.data() + payload + 49, 4);
  CHECK(idx == 0);
  std::memcpy(&idx, ply.data() + payload + 48 + 13 + 1 + 4, 4);
  CHECK(idx == 3);  // second face, second index
}

TEST_CASE("dual mesh text lists centers then scalars per dual")
{
  std::vector<CellCoord> cells;
  std::vector<double> scalars;
  for (int32_t k = 0; k < 2; k++)
    for (int32_t j = 0; j < 2; j++)
      for (int32_t i = 0; i < 2; i++) {
        cells.push_back({i, j, k, 0});
        scalars.push_back(double(i + 2 * j + 4 * k));
      }
  const CellIndex index = build_index(cells, scalars);
  const std::vector<DualCell> duals = all_duals(index);
  REQUIRE(duals.size() == 1);

  const std::string text = dual_mesh_string(duals, index);
  CHECK(contains(text, "# amriso dual cells: 1"));

  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // count comment
  std::getline(lines, line);  // layout comment
  REQUIRE(std::getline(lines, line));
  std::istringstream fields(line);
  std::vector<double> values;
  double v;
  while (fields >> v)
    values.push_back(v);
  REQUIRE(values.size() == 32);
  CHECK(values[0] == 0.5);  // slot 0 center x
  CHECK(values[3] == 1.5);  // slot 1 center x
  for (int d = 0; d < 8; d++)
    CHECK(values[24 + d] == double(d));  // scalars in slot order
}

TEST_CASE("atomic writes replace the target or leave nothing")
{
  TempDir dir;
  const std::string path = dir.file("out.bin");

  write_file_atomic(path, "first");
  CHECK(slurp(path) == "first");
  write_file_atomic(path, "second");
  CHECK(slurp(path) == "second");
  CHECK(!std::filesystem::exists(path + ".tmp"));

  const std::string bad = dir.file("no_such_dir/out.bin");
  CHECK_THROWS_AS(write_file_atomic(bad, "x"), std::runtime_error);
  CHECK(!std::filesystem::exists(bad));
  CHECK(!std::filesystem::exists(bad + ".tmp"));
}
