#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsurf/error.hpp"
#include "lsurf/io.hpp"
#include "lsurf/oracle.hpp"
#include "lsurf/pseudosphere.hpp"
#include "lsurf/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2 };

int exit_code_for(lsurf::ErrorCode c) {
  switch (c) {
    case lsurf::ErrorCode::ParseError:
    case lsurf::ErrorCode::MalformedInput:
      return kUsage;
    default:
      return kFailure;
  }
}

json error_json(const std::string& code, const std::string& message) {
  return json{{"schema_version", lsurf::kReportSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw lsurf::Error(lsurf::ErrorCode::InvalidArgument, "cannot create directory '" + dir + "'");
}

std::string join(const std::string& dir, const char* name) { return (fs::path(dir) / name).string(); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

lsurf::Immersion22 load_immersion(const std::string& path) {
  std::istringstream in(lsurf::read_file(path));
  return lsurf::read_immersion_csv(in);
}

struct GenerateArgs {
  std::string config, out;
  double tol_scale = 1.0;
  int refine = 0;
};

int cmd_generate(const GenerateArgs& a) {
  lsurf::ScenarioConfig cfg =
      lsurf::parse_config(lsurf::read_file(a.config), fs::path(a.config).parent_path().string());
  if (a.refine > 0) cfg.grid = cfg.grid.refined(a.refine);
  cfg.tol.scale *= a.tol_scale;
  ensure_dir(a.out);

  const lsurf::ScenarioResult r = lsurf::run_scenario(cfg);
  std::ostringstream csv;
  lsurf::write_immersion_csv(csv, r.immersion);
  lsurf::write_file(join(a.out, "immersion.csv"), csv.str());
  if (r.frames) {
    std::ostringstream frames;
    lsurf::write_frames_csv(frames, *r.frames);
    lsurf::write_file(join(a.out, "frames.csv"), frames.str());
  }
  const json report = lsurf::report_json(cfg, r);
  lsurf::write_file(join(a.out, "report.json"), dump(report));
  std::cout << dump(report);
  return report["pass"].get<bool>() ? kOk : kFailure;
}

int cmd_verify(const std::string& csv, const std::string& out) {
  const lsurf::Immersion22 F = load_immersion(csv);
  const json report{{"schema_version", lsurf::kReportSchemaVersion},
                    {"grid", lsurf::grid_json(F.spec())},
                    {"oracle", lsurf::oracle_json(F)}};
  if (!out.empty()) {
    ensure_dir(out);
    lsurf::write_file(join(out, "verify.json"), dump(report));
  }
  std::cout << dump(report);
  return kOk;
}

int cmd_decompose(const std::string& csv, const std::string& out) {
  std::istringstream in(lsurf::read_file(csv));
  const lsurf::Mat2AField B = lsurf::read_frames_csv(in);
  const lsurf::CurvePair c = lsurf::product_curves_decompose(B);
  ensure_dir(out);
  std::ostringstream s_curve, t_curve;
  lsurf::write_curve_csv(s_curve, c, true);
  lsurf::write_curve_csv(t_curve, c, false);
  lsurf::write_file(join(out, "curve_s.csv"), s_curve.str());
  lsurf::write_file(join(out, "curve_t.csv"), t_curve.str());
  const json summary{{"schema_version", lsurf::kReportSchemaVersion},
                     {"grid", lsurf::grid_json(c.spec)},
                     {"reconstruction_error", c.reconstruction_error}};
  lsurf::write_file(join(out, "decompose.json"), dump(summary));
  std::cout << dump(summary);
  return kOk;
}

int cmd_export_mesh(const std::string& csv, const std::string& out, const std::vector<int>& coords) {
  if (coords.size() != 3) throw lsurf::Error(lsurf::ErrorCode::ParseError, "--coords takes exactly three indices");
  const lsurf::Immersion22 F = load_immersion(csv);
  std::ostringstream obj;
  lsurf::write_obj(obj, F, {coords[0], coords[1], coords[2]});
  lsurf::write_file(out, obj.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz surface construction and verification"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Run a scenario and write immersion.csv and report.json");
  generate->add_option("--config", gen.config, "Scenario JSON")->required();
  generate->add_option("--out", gen.out, "Output directory")->required();
  generate->add_option("--tol-scale", gen.tol_scale, "Multiplier for every tolerance")->check(CLI::PositiveNumber);
  generate->add_option("--refine", gen.refine, "Dyadic grid refinement levels")->check(CLI::Range(0, 6));

  std::string verify_csv, verify_out;
  auto* verify = app.add_subcommand("verify", "Run the geometry oracle on an immersion CSV");
  verify->add_option("immersion", verify_csv, "Immersion CSV")->required();
  verify->add_option("--out", verify_out, "Output directory");

  std::string frames_csv, decompose_out;
  auto* decompose = app.add_subcommand("decompose", "Split a flat frame into two real curves");
  decompose->add_option("frames", frames_csv, "Frames CSV")->required();
  decompose->add_option("--out", decompose_out, "Output directory")->required();

  std::string mesh_csv, mesh_out;
  std::vector<int> coords{1, 2, 3};
  auto* mesh = app.add_subcommand("export-mesh", "Write an OBJ mesh of a 3-coordinate projection");
  mesh->add_option("immersion", mesh_csv, "Immersion CSV")->required();
  mesh->add_option("--out", mesh_out, "Output .obj file")->required();
  mesh->add_option("--coords", coords, "Three coordinate indices in 0..3")->delimiter(',')->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*verify) return cmd_verify(verify_csv, verify_out);
    if (*decompose) return cmd_decompose(frames_csv, decompose_out);
    if (*mesh) return cmd_export_mesh(mesh_csv, mesh_out, coords);
  } catch (const lsurf::Error& e) {
    const json err = error_json(std::string(lsurf::error_name(e.code())), e.what());
    if (*generate && !gen.out.empty() && fs::is_directory(gen.out)) {
      try {
        lsurf::write_file(join(gen.out, "error.json"), dump(err));
      } catch (const lsurf::Error&) {
      }
    }
    std::cerr << dump(err);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << dump(error_json("Internal", e.what()));
    return kFailure;
  }
  return kUsage;
}
