#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsurf/expr.hpp"
#include "lsurf/oracle.hpp"
#include "lsurf/pseudosphere.hpp"

namespace lsurf {

inline constexpr int kReportSchemaVersion = 1;

enum class Mode { Minimal, Dirac, R21, Konderak, AdsFlat, S12Flat };

std::string_view mode_name(Mode m);

/// A scenario input: a closed-form expression or a grid-field CSV file.
struct InputSpec {
  std::optional<Expr> expr;
  std::string csv_path;
};

struct Tolerances {
  double scale = 1.0;
  std::optional<double> residual;  ///< default 10 h^2
  std::optional<double> path;      ///< default 10 h^2
  double nondegeneracy = 1e-8;
  double membership = 1e-8;
};

struct ScenarioConfig {
  Mode mode = Mode::Minimal;
  GridSpec grid;
  std::map<std::string, InputSpec> inputs;
  Vec22 basepoint;
  Tolerances tol;
  int sign = 1;          ///< r21 only
  Mat2A b0;              ///< initial frame of the flat modes
  std::string base_dir;  ///< CSV paths are resolved against this directory
};

/// Throws Error(ParseError) for malformed JSON, unknown keys, missing inputs
/// or unparsable expressions.
ScenarioConfig parse_config(const std::string& json_text, const std::string& base_dir = ".");

struct Invariant {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_least = false;  ///< pass iff value >= threshold (otherwise value <= threshold)
  bool pass = false;
};

struct ScenarioResult {
  Immersion22 immersion;
  std::optional<Mat2AField> frames;
  std::vector<Invariant> invariants;
};

/// Runs the mode's pipeline. Pipeline failures surface as lsurf::Error.
ScenarioResult run_scenario(const ScenarioConfig& cfg);

/// Summary of the geometry oracle on an immersion; identical input gives
/// identical JSON.
nlohmann::json oracle_json(const Immersion22& F);

nlohmann::json grid_json(const GridSpec& g);

/// Full verification report of a generate run.
nlohmann::json report_json(const ScenarioConfig& cfg, const ScenarioResult& r);

bool all_pass(const std::vector<Invariant>& inv);

}  // namespace lsurf
