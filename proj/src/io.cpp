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

#include "amriso/io.hpp"
#include "amriso/locator.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace amriso {

  static_assert(std::endian::native == std::endian::little,
                "file readers and writers assume a little-endian host");

  namespace {

    constexpr char MAGIC[8] = {'A', 'M', 'R', 'C', 'E', 'L', 'L', '1'};
    constexpr size_t HEADER_BYTES = 24;
    constexpr size_t RECORD_BYTES = 24;

    bool is_text_path(const std::filesystem::path &path)
    {
      return path.extension() == ".txt";
    }

    [[noreturn]] void fail(const std::filesystem::path &path,
                           const std::string &what)
    {
      throw LoadError(path.string() + ": " + what);
    }

    std::string slurp(const std::filesystem::path &path)
    {
      std::ifstream in(path, std::ios::binary);
      if (!in) fail(path, "cannot open file");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      if (!in && !in.eof()) fail(path, "read error");
      return std::move(buffer).str();
    }

    template <typename T>
    T take(const char *bytes)
    {
      T v;
      std::memcpy(&v, bytes, sizeof(T));
      return v;
    }

    template <typename T>
    void put(std::string &out, T v)
    {
      char bytes[sizeof(T)];
      std::memcpy(bytes, &v, sizeof(T));
      out.append(bytes, sizeof(T));
    }

    CellIndex read_amr_binary(const std::filesystem::path &path)
    {
      const std::string bytes = slurp(path);
      if (bytes.size() < HEADER_BYTES)
        fail(path, "file shorter than the 24-byte header");

      AmrFileHeader header;
      std::memcpy(header.magic, bytes.data(), sizeof(header.magic));
      header.version = take<uint32_t>(bytes.data() + 8);
      header.cell_count = take<uint64_t>(bytes.data() + 12);
      header.field_count = take<uint32_t>(bytes.data() + 20);
      if (std::memcmp(header.magic, MAGIC, sizeof(MAGIC)) != 0)
        fail(path, "bad magic, not a cell data file");
      if (header.version != 1)
        fail(path, "unsupported version " + std::to_string(header.version));
      if (header.field_count != 1)
        fail(path, "expected exactly 1 field, file declares "
                   + std::to_string(header.field_count));
      if (header.cell_count == 0)
        fail(path, "file declares zero cells");

      const uint64_t expected =
        HEADER_BYTES + header.cell_count * RECORD_BYTES;
      if (bytes.size() < expected)
        fail(path, "truncated: header declares "
                   + std::to_string(header.cell_count) + " cells but only "
                   + std::to_string((bytes.size() - HEADER_BYTES)
                                    / RECORD_BYTES)
                   + " fit in the file");
      if (bytes.size() > expected)
        fail(path, std::to_string(bytes.size() - expected)
                   + " trailing bytes after the last record");

      std::vector<CellCoord> cells(header.cell_count);
      std::vector<double> scalars(header.cell_count);
      for (uint64_t n = 0; n < header.cell_count; n++) {
        const char *at = bytes.data() + HEADER_BYTES + n * RECORD_BYTES;
        CellCoord &c = cells[n];
        c.i = take<int32_t>(at + 0);
        c.j = take<int32_t>(at + 4);
        c.k = take<int32_t>(at + 8);
        c.level = take<int32_t>(at + 12);
        scalars[n] = take<double>(at + 16);
        if (!std::isfinite(scalars[n]))
          fail(path, "record " + std::to_string(n) + ": scalar is not finite");
      }

      try {
        return build_index(std::move(cells), std::move(scalars));
      } catch (const LoadError &e) {
        fail(path, e.what());
      }
    }

    CellIndex read_amr_text(const std::filesystem::path &path)
    {
      const std::string bytes = slurp(path);
      std::istringstream in(bytes);

      std::vector<CellCoord> cells;
      std::vector<double> scalars;
      std::string line;
      for (uint64_t lineno = 1; std::getline(in, line); lineno++) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\v\f") == std::string::npos)
          continue;  // blank or comment-only line

        std::istringstream fields(line);
        long long i, j, k, level;
        double scalar;
        if (!(fields >> i >> j >> k >> level >> scalar))
          fail(path, "line " + std::to_string(lineno)
                     + ": expected 'i j k level scalar'");
        std::string extra;
        if (fields >> extra)
          fail(path, "line " + std::to_string(lineno)
                     + ": trailing characters '" + extra + "'");

        constexpr long long lo = std::numeric_limits<int32_t>::min();
        constexpr long long hi = std::numeric_limits<int32_t>::max();
        if (i < lo || i > hi || j < lo || j > hi || k < lo || k > hi)
          fail(path, "line " + std::to_string(lineno)
                     + ": anchor out of 32-bit range");
        if (level < 0 || level > MAX_LEVEL)
          fail(path, "line " + std::to_string(lineno) + ": level "
                     + std::to_string(level) + " out of range");
        if (!std::isfinite(scalar))
          fail(path, "line " + std::to_string(lineno)
                     + ": scalar is not finite");

        cells.push_back({int32_t(i), int32_t(j), int32_t(k), int32_t(level)});
        scalars.push_back(scalar);
      }

      try {
        return build_index(std::move(cells), std::move(scalars));
      } catch (const LoadError &e) {
        fail(path, e.what());
      }
    }

  } // namespace

  CellIndex read_amr(const std::filesystem::path &path)
  {
    return is_text_path(path) ? read_amr_text(path) : read_amr_binary(path);
  }

  void write_amr(const CellIndex &index, const std::filesystem::path &path)
  {
    const auto &cells = index.data.cells;
    const auto &scalars = index.data.scalars;
    std::string out;

    if (is_text_path(path)) {
      out += "# amriso cells: " + std::to_string(cells.size()) + "\n";
      out += "# i j k level scalar\n";
      for (size_t n = 0; n < cells.size(); n++) {
        const CellCoord &c = cells[n];
        out += std::to_string(c.i) + " " + std::to_string(c.j) + " "
               + std::to_string(c.k) + " " + std::to_string(c.level) + " "
               + format_double(scalars[n]) + "\n";
      }
    } else {
      out.reserve(HEADER_BYTES + cells.size() * RECORD_BYTES);
      out.append(MAGIC, sizeof(MAGIC));
      put<uint32_t>(out, 1);
      put<uint64_t>(out, cells.size());
      put<uint32_t>(out, 1);
      for (size_t n = 0; n < cells.size(); n++) {
        const CellCoord &c = cells[n];
        put<int32_t>(out, c.i);
        put<int32_t>(out, c.j);
        put<int32_t>(out, c.k);
        put<int32_t>(out, c.level);
        put<double>(out, scalars[n]);
      }
    }
    write_file_atomic(path, out);
  }

  std::string format_double(double v)
  {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }

  std::string obj_string(const IndexedMesh &mesh)
  {
    std::string out = "# amriso mesh: "
                      + std::to_string(mesh.vertices.size()) + " vertices, "
                      + std::to_string(mesh.triangles.size())
                      + " triangles\n";
    for (const vec3d &v : mesh.vertices)
      out += "v " + format_double(v.x) + " " + format_double(v.y) + " "
             + format_double(v.z) + "\n";
    for (const auto &t : mesh.triangles)
      out += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1)
             + " " + std::to_string(t[2] + 1) + "\n";
    return out;
  }

  void write_obj(const IndexedMesh &mesh, const std::filesystem::path &path)
  {
    write_file_atomic(path, obj_string(mesh));
  }

  std::string ply_string(const IndexedMesh &mesh)
  {
    std::string out;
    out += "ply\n";
    out += "format binary_little_endian 1.0\n";
    out += "comment amriso mesh\n";
    out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
    out += "property float x\n";
    out += "property float y\n";
    out += "property float z\n";
    out += "element face " + std::to_string(mesh.triangles.size()) + "\n";
    out += "property list uchar uint vertex_indices\n";
    out += "end_header\n";
    for (const vec3d &v : mesh.vertices) {
      put<float>(out, float(v.x));
      put<float>(out, float(v.y));
      put<float>(out, float(v.z));
    }
    for (const auto &t : mesh.triangles) {
      put<uint8_t>(out, 3);
      put<uint32_t>(out, t[0]);
      put<uint32_t>(out, t[1]);
      put<uint32_t>(out, t[2]);
    }
    return out;
  }

  void write_ply(const IndexedMesh &mesh, const std::filesystem::path &path)
  {
    write_file_atomic(path, ply_string(mesh));
  }

  std::string dual_mesh_string(const std::vector<DualCell> &duals,
                               const CellIndex &index)
  {
    std::string out = "# amriso dual cells: " + std::to_string(duals.size())
                      + "\n";
    out += "# per line: 8 corner centers (slot order, x fastest), "
           "then 8 scalars\n";
    for (const DualCell &dual : duals) {
      std::string line;
      for (int d = 0; d < 8; d++) {
        const vec3d p = cell_center(index.coord(dual.corners[d]));
        line += format_double(p.x) + " " + format_double(p.y) + " "
                + format_double(p.z) + " ";
      }
      for (int d = 0; d < 8; d++) {
        line += format_double(index.scalar(dual.corners[d]));
        line += d == 7 ? '\n' : ' ';
      }
      out += line;
    }
    return out;
  }

  void write_dual_mesh(const std::vector<DualCell> &duals,
                       const CellIndex &index,
                       const std::filesystem::path &path)
  {
    write_file_atomic(path, dual_mesh_string(duals, index));
  }

  void write_file_atomic(const std::filesystem::path &path,
                         const std::string &bytes)
  {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out)
        throw std::runtime_error("cannot open " + tmp.string()
                                 + " for writing");
      out.write(bytes.data(), std::streamsize(bytes.size()));
      out.flush();
      if (!out) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw std::runtime_error("write to " + tmp.string() + " failed");
      }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("cannot move " + tmp.string() + " to "
                               + path.string() + ": " + ec.message());
    }
  }

} // namespace amriso
