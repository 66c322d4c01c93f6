#include "lsurf/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "lsurf/error.hpp"
#include "lsurf/io.hpp"

namespace lsurf {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& what) { throw Error(ErrorCode::ParseError, "config: " + what); }

struct ModeEntry {
  std::string_view name;
  Mode mode;
  std::vector<std::string_view> inputs;
};

const std::vector<ModeEntry>& mode_table() {
  static const std::vector<ModeEntry> table{
      {"minimal", Mode::Minimal, {"psi1", "psi2", "phihat1", "phihat2"}},
      {"dirac", Mode::Dirac, {"p", "q", "phi1", "phi2", "psi1", "psi2"}},
      {"r21", Mode::R21, {"p", "phi2", "psi2"}},
      {"konderak", Mode::Konderak, {"chi1", "chi2"}},
      {"ads-flat", Mode::AdsFlat, {"theta", "omega"}},
      {"s12-flat", Mode::S12Flat, {"theta", "omega"}},
  };
  return table;
}

const ModeEntry& entry(Mode m) {
  for (const auto& e : mode_table())
    if (e.mode == m) return e;
  return mode_table().front();
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) bad_config(what + " must be a number");
  return j.get<double>();
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      bad_config("unknown key '" + it.key() + "' in " + where);
}

GridSpec parse_grid(const json& j) {
  if (!j.is_object()) bad_config("'grid' must be an object");
  only_keys(j, {"s0", "s1", "t0", "t1", "ns", "nt"}, "grid");
  GridSpec g;
  for (const char* k : {"s0", "s1", "t0", "t1", "ns", "nt"})
    if (!j.contains(k)) bad_config(std::string("grid.") + k + " is required");
  g.s0 = number(j["s0"], "grid.s0");
  g.s1 = number(j["s1"], "grid.s1");
  g.t0 = number(j["t0"], "grid.t0");
  g.t1 = number(j["t1"], "grid.t1");
  if (!j["ns"].is_number_integer() || !j["nt"].is_number_integer()) bad_config("grid.ns and grid.nt must be integers");
  g.ns = j["ns"].get<int>();
  g.nt = j["nt"].get<int>();
  try {
    g.validate();
  } catch (const Error& e) {
    bad_config(std::string("invalid grid: ") + e.what());
  }
  return g;
}

InputSpec parse_input(const std::string& name, const json& j) {
  InputSpec in;
  if (j.is_string()) {
    in.expr = Expr::parse(j.get<std::string>());
  } else if (j.is_number()) {
    std::ostringstream ss;
    ss << format_double(j.get<double>());
    in.expr = Expr::parse(ss.str());
  } else if (j.is_object() && j.size() == 1 && j.contains("csv") && j["csv"].is_string()) {
    in.csv_path = j["csv"].get<std::string>();
  } else {
    bad_config("input '" + name + "' must be an expression string, a number or {\"csv\": path}");
  }
  return in;
}

double tol_or(const std::optional<double>& v, double fallback) { return v ? *v : fallback; }

Invariant at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, false, std::isfinite(value) && value <= threshold};
}

Invariant at_least(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, true, std::isfinite(value) && value >= threshold};
}

double max_abs(const GridField& f) {
  double m = 0.0;
  for (const auto& x : f.values) m = std::max({m, std::fabs(x.u), std::fabs(x.v)});
  return m;
}

double max_diff(const Immersion22& a, const Immersion22& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.points.values.size(); ++k)
    for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::fabs(a.points.values[k][c] - b.points.values[k][c]));
  return m;
}

ScalarField negated(const ScalarField& f) {
  ScalarField out = f;
  for (double& x : out.values) x = -x;
  return out;
}

// Loads named inputs of a scenario onto its grid.
class Inputs {
 public:
  explicit Inputs(const ScenarioConfig& cfg) : cfg_(cfg) {}

  GridField field(const std::string& name) const {
    const InputSpec& in = cfg_.inputs.at(name);
    if (in.expr) {
      const Expr& e = *in.expr;
      return sample(cfg_.grid, [&](const LorentzNum& a) { return e.at(a); });
    }
    std::filesystem::path path(in.csv_path);
    if (path.is_relative()) path = std::filesystem::path(cfg_.base_dir) / path;
    std::istringstream ss(read_file(path.string()));
    GridField f = read_gridfield_csv(ss);
    if (!(f.spec == cfg_.grid))
      throw Error(ErrorCode::MalformedInput, "grid of '" + path.string() + "' differs from the scenario grid");
    return f;
  }

  ScalarField real_field(const std::string& name) const {
    const GridField f = field(name);
    ScalarField out(f.spec);
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      if (std::fabs(f.values[k].v) > 1e-12 * std::max(1.0, std::fabs(f.values[k].u)))
        throw Error(ErrorCode::ParseError, "config: input '" + name + "' must be real-valued");
      out.values[k] = f.values[k].u;
    }
    return out;
  }

  ConformalMap1D conformal(const std::string& name) const {
    const GridField f = field(name);
    const double tol = 1e-8 * std::max(1.0, max_abs(f));
    const ConformalityReport rep = is_conformal_samples(f, tol);
    if (!rep.conformal)
      throw Error(ErrorCode::NotConformal, "input '" + name + "' is not conformal (d_ahat residual " +
                                               format_double(rep.max_residual) + ")");
    const InputSpec& in = cfg_.inputs.at(name);
    if (in.expr) {
      const Expr e = *in.expr;
      return ConformalMap1D::from_function([e](LorentzNum a) { return e.at(a); }, cfg_.grid.s0, cfg_.grid.t0);
    }
    const GridSpec& g = cfg_.grid;
    std::vector<double> plus(static_cast<std::size_t>(g.ns)), minus(static_cast<std::size_t>(g.nt));
    for (int i = 0; i < g.ns; ++i) plus[static_cast<std::size_t>(i)] = to_split(f(i, 0)).plus;
    for (int j = 0; j < g.nt; ++j) minus[static_cast<std::size_t>(j)] = to_split(f(0, j)).minus;
    return ConformalMap1D::from_samples(g, std::move(plus), std::move(minus));
  }

 private:
  const ScenarioConfig& cfg_;
};

GoursatProfiles profiles(const GridField& phi, const GridField& psi) {
  const GridSpec& g = phi.spec;
  GoursatProfiles p;
  for (int j = 0; j < g.nt; ++j) {
    p.phi_plus.push_back(to_split(phi(0, j)).plus);
    p.psi_minus.push_back(to_split(psi(0, j)).minus);
  }
  for (int i = 0; i < g.ns; ++i) {
    p.psi_plus.push_back(to_split(psi(i, 0)).plus);
    p.phi_minus.push_back(to_split(phi(i, 0)).minus);
  }
  return p;
}

ImmersionOptions immersion_options(const ScenarioConfig& cfg) {
  ImmersionOptions opt;
  opt.residual_tol = tol_or(cfg.tol.residual, -1.0);
  opt.path_tol = tol_or(cfg.tol.path, -1.0);
  opt.tol_scale = cfg.tol.scale;
  opt.nondegeneracy_threshold = cfg.tol.nondegeneracy;
  return opt;
}

double second_order_tol(const ScenarioConfig& cfg) {
  const double h = cfg.grid.h();
  return 10.0 * h * h * cfg.tol.scale;
}

// Checks shared by every pipeline that carries Dirac data.
void dirac_invariants(const ScenarioConfig& cfg, const DiracData& d, const Immersion22& F, std::vector<Invariant>& out) {
  const double tol2 = second_order_tol(cfg);
  const double h = cfg.grid.h();
  out.push_back(at_most("dirac_residual", dirac_residual(d).max_norm, tol_or(cfg.tol.residual, tol2)));
  out.push_back(at_most("path_independence_defect", path_independence_check(d), tol_or(cfg.tol.path, tol2)));
  out.push_back(at_most("imaginary_defect", imaginary_defect(d), 1e-10 * cfg.tol.scale));
  out.push_back(at_least("nondegeneracy", nondegeneracy(d, cfg.tol.nondegeneracy).min_abs_sqnorm, cfg.tol.nondegeneracy));

  const MetricReport m = metric_formula(d);
  const FirstForm ff = first_form(F);
  const double scale = std::max(1e-300, interior_stats(m.lambda_sq).max_abs);
  const double metric_err = std::max({interior_max_abs_diff(ff.E, negated(m.lambda_sq)),
                                      interior_max_abs_diff(ff.G, m.lambda_sq), interior_stats(ff.F).max_abs}) /
                            scale;
  out.push_back(at_most("metric_vs_formula_relative", metric_err, tol2));

  const CurvatureReport cr = curvature_report(F);
  out.push_back(at_most("mean_curvature_vs_formula", interior_max_abs_diff(cr.H_sqnorm, m.H_sqnorm_formula),
                        10.0 * h * cfg.tol.scale));
}

void flat_invariants(const ScenarioConfig& cfg, const Mat2AField& B, const ConformalOneForm& theta,
                     const ConformalOneForm& omega, const Immersion22& F, FlatTarget target,
                     std::vector<Invariant>& out) {
  const double tol2 = second_order_tol(cfg);
  const double radius = target == FlatTarget::AntiDeSitter ? -1.0 : 1.0;
  double membership = 0.0;
  for (const Vec22& x : F.points.values) membership = std::max(membership, std::fabs(scalar(x, x) - radius));
  out.push_back(at_most("membership_defect", membership, cfg.tol.membership));

  double det_defect = 0.0;
  for (const Mat2A& m : B.values) {
    const LorentzNum d = m.det();
    det_defect = std::max({det_defect, std::fabs(d.u - 1.0), std::fabs(d.v)});
  }
  out.push_back(at_most("frame_determinant_defect", det_defect, cfg.tol.membership));

  const GridField th = theta.f.sample(cfg.grid), om = omega.f.sample(cfg.grid);
  const double coeff = 1.0 + max_abs(th) + max_abs(om);
  out.push_back(at_most("frame_equation_residual", frame_equation_residual(B, theta, omega), tol2 * coeff * coeff));

  const FlatMetricShape ms = flat_metric_shape(B, theta, omega, target);
  const FirstForm ff = first_form(F);
  const double metric_err = std::max({interior_max_abs_diff(ff.a, ms.g_ss), interior_max_abs_diff(ff.b, ms.g_st),
                                      interior_max_abs_diff(ff.c, ms.g_tt)});
  out.push_back(at_most("metric_vs_formula", metric_err, tol2 * coeff * coeff));
  out.push_back(at_most("gauss_curvature", interior_stats(gauss_curvature(F)).max_abs, tol2 * coeff * coeff));
}

ScenarioResult run_minimal(const ScenarioConfig& cfg, const Inputs& in) {
  const ConformalMap1D psi1 = in.conformal("psi1"), psi2 = in.conformal("psi2");
  const ConformalMap1D ph1 = in.conformal("phihat1"), ph2 = in.conformal("phihat2");
  ScenarioResult r;
  r.immersion = minimal_immersion(psi1, psi2, ph1, ph2, cfg.basepoint, cfg.grid, cfg.tol.nondegeneracy);

  const DiracData d = minimal_dirac_data(psi1, psi2, ph1, ph2, cfg.grid);
  const Immersion22 general = integrate_immersion(d, cfg.basepoint, immersion_options(cfg));
  r.invariants.push_back(at_most("minimal_vs_general_formula", max_diff(r.immersion, general), 1e-10 * cfg.tol.scale));
  dirac_invariants(cfg, d, r.immersion, r.invariants);

  const double tol2 = second_order_tol(cfg);
  r.invariants.push_back(at_most("mean_curvature_vector", curvature_report(r.immersion).mean_vector_max, tol2));
  const OneFormCriterion c = conformal_1form_criterion(one_form_coefficients(r.immersion));
  r.invariants.push_back(at_most("conformal_one_forms", c.max_residual, c.tolerance * cfg.tol.scale));
  return r;
}

ScenarioResult run_dirac(const ScenarioConfig& cfg, const Inputs& in) {
  const ScalarField p = in.real_field("p"), q = in.real_field("q");
  CharacteristicData init{cfg.grid, {profiles(in.field("phi1"), in.field("psi1")),
                                     profiles(in.field("phi2"), in.field("psi2"))}};
  validate(init);
  const DiracData d = solve_goursat(p, q, init);
  ScenarioResult r;
  r.immersion = integrate_immersion(d, cfg.basepoint, immersion_options(cfg));
  dirac_invariants(cfg, d, r.immersion, r.invariants);
  return r;
}

ScenarioResult run_r21(const ScenarioConfig& cfg, const Inputs& in) {
  const ScalarField p = in.real_field("p");
  const GoursatProfiles lines = profiles(in.field("phi2"), in.field("psi2"));
  CharacteristicData init{cfg.grid, {lines, lines}};
  validate(init);
  const DiracData solved = solve_goursat(p, p, init);
  const GridField& phi2 = solved.phi2;
  const GridField& psi2 = solved.psi2;
  const R21Result red = r21_immersion(phi2, psi2, p, cfg.sign, cfg.basepoint, immersion_options(cfg));
  ScenarioResult r;
  r.immersion = red.immersion;

  const DiracData d = r21_dirac_data(phi2, psi2, p, cfg.sign);
  const Immersion22 full = integrate_immersion(d, cfg.basepoint, immersion_options(cfg));
  double f0 = 0.0;
  for (const Vec22& x : full.points.values) f0 = std::max(f0, std::fabs(x.x0 - cfg.basepoint.x0));
  r.invariants.push_back(at_most("full_pipeline_x0_constant", f0, 1e-10 * cfg.tol.scale));
  r.invariants.push_back(at_most("reduced_vs_full_pipeline", max_diff(red.immersion, full), 1e-10 * cfg.tol.scale));
  dirac_invariants(cfg, d, r.immersion, r.invariants);
  return r;
}

ScenarioResult run_konderak(const ScenarioConfig& cfg, const Inputs& in) {
  const KonderakResult k = konderak_form(in.conformal("chi1"), in.conformal("chi2"), cfg.grid, cfg.basepoint);
  ScenarioResult r;
  r.immersion = k.F_chi;
  double scale = 1.0;
  for (const Vec22& x : k.F_chi.points.values)
    for (std::size_t c = 0; c < 4; ++c) scale = std::max(scale, std::fabs(x[c]));
  r.invariants.push_back(at_most("chi_form_vs_g_phi_form", max_diff(k.F_chi, k.F_g_phi), 1e-10 * scale * cfg.tol.scale));
  double x0 = 0.0;
  for (const Vec22& x : k.F_chi.points.values) x0 = std::max(x0, std::fabs(x.x0 - cfg.basepoint.x0));
  r.invariants.push_back(at_most("x0_constant", x0, 1e-10 * cfg.tol.scale));
  return r;
}

ScenarioResult run_flat(const ScenarioConfig& cfg, const Inputs& in, FlatTarget target, const Mat2A& B0) {
  const ConformalOneForm theta{in.conformal("theta")}, omega{in.conformal("omega")};
  ScenarioResult r;
  Mat2AField B = integrate_frame(theta, omega, B0, cfg.grid);
  r.immersion = target == FlatTarget::AntiDeSitter ? ads_immersion(B, theta, omega, cfg.tol.nondegeneracy)
                                                   : s12_immersion(B, theta, omega, cfg.tol.nondegeneracy);
  flat_invariants(cfg, B, theta, omega, r.immersion, target, r.invariants);
  r.frames = std::move(B);
  return r;
}

json stats_json(const FieldStats& s) {
  return json{{"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"max_abs", s.max_abs}};
}

Mat2A frame_b0(const json& j) {
  if (!j.is_array() || j.size() != 4) bad_config("'B0' must be [[a_u, a_v], [b_u, b_v], [c_u, c_v], [d_u, d_v]]");
  LorentzNum e[4];
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_array() || j[k].size() != 2) bad_config("'B0' entries must be [u, v] pairs");
    e[k] = {number(j[k][0], "B0"), number(j[k][1], "B0")};
  }
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace

std::string_view mode_name(Mode m) { return entry(m).name; }

ScenarioConfig parse_config(const std::string& json_text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_config(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_config("top level must be an object");
  only_keys(j, {"mode", "grid", "inputs", "basepoint", "tolerances", "sign", "B0"}, "config");
  for (const char* k : {"mode", "grid", "inputs"})
    if (!j.contains(k)) bad_config(std::string("'") + k + "' is required");

  ScenarioConfig cfg;
  cfg.base_dir = base_dir;
  if (!j["mode"].is_string()) bad_config("'mode' must be a string");
  const std::string mode = j["mode"].get<std::string>();
  const ModeEntry* me = nullptr;
  for (const auto& e : mode_table())
    if (e.name == mode) me = &e;
  if (!me) bad_config("unknown mode '" + mode + "'");
  cfg.mode = me->mode;
  cfg.grid = parse_grid(j["grid"]);

  const json& inputs = j["inputs"];
  if (!inputs.is_object()) bad_config("'inputs' must be an object");
  for (auto it = inputs.begin(); it != inputs.end(); ++it)
    if (std::find(me->inputs.begin(), me->inputs.end(), it.key()) == me->inputs.end())
      bad_config("mode '" + mode + "' has no input '" + it.key() + "'");
  for (const auto name : me->inputs) {
    const std::string key(name);
    if (!inputs.contains(key)) bad_config("mode '" + mode + "' requires input '" + key + "'");
    cfg.inputs.emplace(key, parse_input(key, inputs[key]));
  }

  if (j.contains("basepoint")) {
    const json& b = j["basepoint"];
    if (!b.is_array() || b.size() != 4) bad_config("'basepoint' must be an array of 4 numbers");
    for (std::size_t k = 0; k < 4; ++k) cfg.basepoint[k] = number(b[k], "basepoint");
  }
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object()) bad_config("'tolerances' must be an object");
    only_keys(t, {"scale", "residual", "path", "nondegeneracy", "membership"}, "tolerances");
    if (t.contains("scale")) cfg.tol.scale = number(t["scale"], "tolerances.scale");
    if (t.contains("residual")) cfg.tol.residual = number(t["residual"], "tolerances.residual");
    if (t.contains("path")) cfg.tol.path = number(t["path"], "tolerances.path");
    if (t.contains("nondegeneracy")) cfg.tol.nondegeneracy = number(t["nondegeneracy"], "tolerances.nondegeneracy");
    if (t.contains("membership")) cfg.tol.membership = number(t["membership"], "tolerances.membership");
    if (!(cfg.tol.scale > 0.0)) bad_config("tolerances.scale must be positive");
  }
  if (j.contains("sign")) {
    if (cfg.mode != Mode::R21) bad_config("'sign' only applies to mode r21");
    if (!j["sign"].is_number_integer() || (j["sign"] != 1 && j["sign"] != -1)) bad_config("'sign' must be 1 or -1");
    cfg.sign = j["sign"].get<int>();
  }
  if (j.contains("B0")) {
    if (cfg.mode != Mode::AdsFlat && cfg.mode != Mode::S12Flat) bad_config("'B0' only applies to the flat modes");
    cfg.b0 = frame_b0(j["B0"]);
  }
  return cfg;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  const Inputs in(cfg);
  switch (cfg.mode) {
    case Mode::Minimal: return run_minimal(cfg, in);
    case Mode::Dirac: return run_dirac(cfg, in);
    case Mode::R21: return run_r21(cfg, in);
    case Mode::Konderak: return run_konderak(cfg, in);
    case Mode::AdsFlat: return run_flat(cfg, in, FlatTarget::AntiDeSitter, cfg.b0);
    case Mode::S12Flat: return run_flat(cfg, in, FlatTarget::PseudoSphere12, cfg.b0);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown mode");
}

json grid_json(const GridSpec& g) {
  return json{{"s0", g.s0}, {"s1", g.s1}, {"t0", g.t0}, {"t1", g.t1}, {"ns", g.ns}, {"nt", g.nt}};
}

json oracle_json(const Immersion22& F) {
  const CurvatureReport cr = curvature_report(F);
  const FirstForm ff = first_form(F);
  return json{{"H_sqnorm", stats_json(cr.H_stats)},
              {"gauss_K", stats_json(cr.K_stats)},
              {"mean_vector_max", cr.mean_vector_max},
              {"conformality_defect", cr.conformal_defect},
              {"null_coordinate_defect", cr.null_defect},
              {"first_form",
               {{"E", stats_json(interior_stats(ff.E))},
                {"F", stats_json(interior_stats(ff.F))},
                {"G", stats_json(interior_stats(ff.G))}}}};
}

json report_json(const ScenarioConfig& cfg, const ScenarioResult& r) {
  json inv = json::array();
  for (const Invariant& i : r.invariants)
    inv.push_back({{"name", i.name},
                   {"value", i.value},
                   {"threshold", i.threshold},
                   {"comparison", i.at_least ? ">=" : "<="},
                   {"pass", i.pass}});
  return json{{"schema_version", kReportSchemaVersion},
              {"mode", mode_name(cfg.mode)},
              {"grid", grid_json(cfg.grid)},
              {"invariants", inv},
              {"oracle", oracle_json(r.immersion)},
              {"pass", all_pass(r.invariants)}};
}

bool all_pass(const std::vector<Invariant>& inv) {
  return std::all_of(inv.begin(), inv.end(), [](const Invariant& i) { return i.pass; });
}

}  // namespace lsurf
