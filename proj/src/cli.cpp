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

#include "amriso/cli.hpp"
#include "amriso/io.hpp"
#include "amriso/parallel.hpp"
#include "amriso/synth.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace amriso {

  namespace {

    /// user mistakes that surface after flag parsing still exit as usage
    struct UsageError : public std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    void print_stat(const char *key, uint64_t value)
    {
      std::cerr << key << "=" << value << "\n";
    }

    void print_stat_seconds(const char *key, double value)
    {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", value);
      std::cerr << key << "=" << buf << "\n";
    }

    CellIndex load_validated(const std::string &path)
    {
      CellIndex index = read_amr(path);
      const ValidationReport report = validate_dataset(index);
      if (!report.ok())
        throw LoadError(path + ": " + report.describe(index));
      return index;
    }

    enum class MeshFormat { obj, ply };

    MeshFormat mesh_format_for(const std::filesystem::path &path)
    {
      const auto ext = path.extension();
      if (ext == ".obj") return MeshFormat::obj;
      if (ext == ".ply") return MeshFormat::ply;
      throw UsageError("output '" + path.string()
                       + "': use a .obj or .ply extension");
    }

    struct ExtractArgs {
      std::string in, out, dual_out;
      double iso = 0;
      int threads = 0;
      bool stats = false;
    };

    int do_extract(const ExtractArgs &args)
    {
      const auto t0 = std::chrono::steady_clock::now();
      const MeshFormat format = mesh_format_for(args.out);
      const CellIndex index = load_validated(args.in);
      const double seconds_load =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

      IsoParams params;
      params.iso = args.iso;
      params.thread_count = args.threads;
      params.emit_dual_mesh = !args.dual_out.empty();
      ExtractionResult result = extract_isosurface(index, params);
      result.stats.seconds_sort = seconds_load;

      if (format == MeshFormat::obj)
        write_obj(result.mesh, args.out);
      else
        write_ply(result.mesh, args.out);
      if (!args.dual_out.empty())
        write_dual_mesh(result.duals, index, args.dual_out);

      if (args.stats) {
        const ExtractionStats &s = result.stats;
        print_stat("cells", s.cell_count);
        print_stat("duals_accepted", s.duals_accepted);
        print_stat("duals_rejected_missing_corner", s.duals_missing_corner);
        print_stat("duals_rejected_finer_corner", s.duals_finer_corner);
        print_stat("duals_rejected_lower_key", s.duals_lower_key_corner);
        print_stat("pass1_triangles", s.pass1_triangle_count);
        print_stat("fat_triangles", s.fat_triangle_count);
        print_stat("vertices", s.welded_vertex_count);
        print_stat("triangles", s.welded_triangle_count);
        print_stat("threads",
                   uint64_t(resolve_thread_count(params.thread_count)));
        print_stat_seconds("seconds_sort", s.seconds_sort);
        print_stat_seconds("seconds_pass1", s.seconds_pass1);
        print_stat_seconds("seconds_pass2", s.seconds_pass2);
        print_stat_seconds("seconds_weld", s.seconds_weld);
      }
      return 0;
    }

    struct DualArgs {
      std::string in, out;
      int threads = 0;
      bool stats = false;
    };

    int do_dual(const DualArgs &args)
    {
      const CellIndex index = load_validated(args.in);
      const std::vector<DualCell> duals =
        extract_dual_mesh(index, args.threads);
      write_dual_mesh(duals, index, args.out);
      if (args.stats) {
        print_stat("cells", index.size());
        print_stat("duals", duals.size());
        print_stat("threads", uint64_t(resolve_thread_count(args.threads)));
      }
      return 0;
    }

    struct SynthArgs {
      std::string field, out;
      int uniform = 0;
      int octree = -1;
      double threshold = 0;
      bool stats = false;
    };

    int do_synth(const SynthArgs &args)
    {
      const bool want_uniform = args.uniform > 0;
      const bool want_octree = args.octree >= 0;
      if (want_uniform == want_octree)
        throw UsageError("pick exactly one of --uniform N or --octree DEPTH");
      if (want_uniform && args.uniform > 1024)
        throw UsageError("--uniform supports up to 1024 cells per axis");
      if (want_octree && args.octree > MAX_LEVEL)
        throw UsageError("--octree depth must be at most "
                         + std::to_string(MAX_LEVEL));

      FieldSpec field;
      try {
        field = FieldSpec::parse(args.field);
      } catch (const LoadError &e) {
        throw UsageError(e.what());
      }

      const CellIndex index =
        want_uniform ? gen_uniform(args.uniform, field)
                     : gen_octree(args.octree, field, args.threshold);
      write_amr(index, args.out);
      if (args.stats) {
        print_stat("cells", index.size());
        print_stat("max_level", uint64_t(index.data.max_level));
      }
      return 0;
    }

    int do_validate(const std::string &in)
    {
      const CellIndex index = read_amr(in);
      const ValidationReport report = validate_dataset(index);
      if (report.ok()) {
        std::cerr << in << ": ok, " << index.size() << " cells, "
                  << index.levels.size() << " level(s)\n";
        return 0;
      }
      std::cerr << in << ": " << report.describe(index) << "\n";
      return 2;
    }

  } // namespace

  int run_cli(int argc, const char *const *argv)
  {
    CLI::App app{"dual-grid iso-surface extraction for cell-centered "
                 "AMR data"};
    app.require_subcommand(1);

    ExtractArgs ex;
    CLI::App *extract =
      app.add_subcommand("extract", "extract an iso-surface mesh");
    extract->add_option("-i,--input", ex.in, "cell data file (.txt: text)")
      ->required();
    extract->add_option("-o,--output", ex.out, "mesh file, .obj or .ply")
      ->required();
    extract->add_option("--iso", ex.iso, "iso value")->required();
    extract->add_option("--dual-output", ex.dual_out,
                        "also write the dual cells as text");
    extract->add_option("-t,--threads", ex.threads,
                        "worker threads (default: AMRISO_THREADS, else "
                        "all cores)");
    extract->add_flag("--stats", ex.stats,
                      "print key=value stats to stderr");

    DualArgs du;
    CLI::App *dual =
      app.add_subcommand("dual", "write the dual cells of a dataset");
    dual->add_option("-i,--input", du.in, "cell data file")->required();
    dual->add_option("-o,--output", du.out, "dual cell text file")
      ->required();
    dual->add_option("-t,--threads", du.threads, "worker threads");
    dual->add_flag("--stats", du.stats, "print key=value stats to stderr");

    SynthArgs sy;
    CLI::App *synth =
      app.add_subcommand("synth", "generate a synthetic dataset");
    synth->add_option("--field", sy.field,
                      "sphere:cx,cy,cz,r | linear:gx,gy,gz,offset | "
                      "rsine:cx,cy,cz,freq")
      ->required();
    synth->add_option("--uniform", sy.uniform, "N^3 cells on level 0");
    synth->add_option("--octree", sy.octree,
                      "refine one level-DEPTH root cell");
    synth->add_option("--threshold", sy.threshold,
                      "octree split threshold (field range per cell)");
    synth->add_option("-o,--output", sy.out, "cell data file to write")
      ->required();
    synth->add_flag("--stats", sy.stats, "print key=value stats to stderr");

    std::string validate_in;
    CLI::App *validate = app.add_subcommand(
      "validate", "check a dataset for duplicates and overlaps");
    validate->add_option("-i,--input", validate_in, "cell data file")
      ->required();

    try {
      app.parse(argc, argv);
    } catch (const CLI::Success &e) {
      return app.exit(e);
    } catch (const CLI::ParseError &e) {
      std::cerr << "error: " << e.what() << "\n"
                << "run with --help for usage\n";
      return 1;
    }

    try {
      if (extract->parsed()) return do_extract(ex);
      if (dual->parsed()) return do_dual(du);
      if (synth->parsed()) return do_synth(sy);
      if (validate->parsed()) return do_validate(validate_in);
      std::cerr << app.help();
      return 1;
    } catch (const UsageError &e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const LoadError &e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception &e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

} // namespace amriso
