#include "lsurf/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

double resolve(double requested, double fallback, double scale) { return (requested < 0.0 ? fallback : requested) * scale; }

GridField product(const GridField& a, const GridField& b, double k = 1.0) {
  GridField out(a.spec);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = (a.values[i] * b.values[i]) * k;
  return out;
}

GridField hat_field(const GridField& a) {
  GridField out(a.spec);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = hat(a.values[i]);
  return out;
}

double max_split(const GridField& f) {
  double m = 0.0;
  for (const auto& x : f.values) m = std::max(m, split_abs(x));
  return m;
}

std::string num(double x) { return std::to_string(x); }

}  // namespace

GridField integrate_form(const GridField& X, const GridField& Y, bool t_first) {
  X.spec.validate();
  GridField ds(X.spec), dt(X.spec);
  for (std::size_t i = 0; i < ds.values.size(); ++i) {
    const SplitRep x = to_split(X.values[i]);
    const SplitRep y = to_split(Y.values[i]);
    ds.values[i] = from_split(x.plus, y.minus);
    dt.values[i] = from_split(y.plus, x.minus);
  }
  return t_first ? integrate_t_then_s(ds, dt, LorentzNum{}) : integrate_s_then_t(ds, dt, LorentzNum{});
}

GridField integrate_da(const GridField& Z) { return integrate_form(Z, GridField(Z.spec)); }

std::array<GridField, 4> immersion_primitives(const DiracData& d, bool t_first) {
  const GridField phihat1 = hat_field(d.phi1), phihat2 = hat_field(d.phi2);
  const GridField psihat1 = hat_field(d.psi1), psihat2 = hat_field(d.psi2);
  return {
      integrate_form(product(d.psi1, phihat1, -1.0), product(psihat1, d.phi1, -1.0), t_first),
      integrate_form(product(d.psi2, phihat2), product(psihat2, d.phi2), t_first),
      integrate_form(product(d.psi1, phihat2), product(psihat2, d.phi1), t_first),
      integrate_form(product(d.psi2, phihat1), product(psihat1, d.phi2), t_first),
  };
}

double imaginary_defect(const DiracData& d) {
  const auto G = immersion_primitives(d);
  double m = 0.0;
  for (std::size_t i = 0; i < G[0].values.size(); ++i)
    m = std::max({m, std::fabs(G[0].values[i].v), std::fabs(G[1].values[i].v)});
  return m;
}

double path_independence_check(const DiracData& d) {
  const auto a = immersion_primitives(d, false);
  const auto b = immersion_primitives(d, true);
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < a[k].values.size(); ++i)
      m = std::max(m, split_abs(a[k].values[i] - b[k].values[i]));
  return m;
}

Immersion22 integrate_immersion(const DiracData& d, const Vec22& basepoint, const ImmersionOptions& opt) {
  const GridSpec& g = d.spec();
  g.validate();
  const double fallback = default_residual_tolerance(g);

  const double rtol = resolve(opt.residual_tol, fallback, opt.tol_scale);
  const DiracResidual res = dirac_residual(d);
  if (res.max_norm > rtol)
    throw Error(ErrorCode::ResidualTooLarge, "Dirac residual " + num(res.max_norm) + " exceeds " + num(rtol));

  const Nondegeneracy nd = nondegeneracy(d, opt.nondegeneracy_threshold);
  if (!nd.ok)
    throw Error(ErrorCode::DegenerateMetric,
                "spinor wedge is null somewhere: min |lambda^2| = " + num(nd.min_abs_sqnorm));

  const double ptol = resolve(opt.path_tol, fallback, opt.tol_scale);
  const double defect = path_independence_check(d);
  if (defect > ptol)
    throw Error(ErrorCode::PathDependence, "two-path defect " + num(defect) + " exceeds " + num(ptol));

  const auto G = immersion_primitives(d);
  Immersion22 F{VecField(g), basepoint};
  for (std::size_t i = 0; i < F.points.values.size(); ++i) {
    const LorentzNum g1 = G[0].values[i], g2 = G[1].values[i], g3 = G[2].values[i], g4 = G[3].values[i];
    const Vec22 x{0.5 * (g1.u + g2.u), 0.5 * (g1.u - g2.u), 0.5 * (g3.u + g4.u), 0.5 * (g3.v - g4.v)};
    F.points.values[i] = x + basepoint;
  }
  return F;
}

MetricReport metric_formula(const DiracData& d) {
  const GridField w = spinor_wedge(d);
  MetricReport r{ScalarField(w.spec), ScalarField(w.spec), std::numeric_limits<double>::infinity(), true};
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const double l2 = sqnorm(w.values[i]);
    r.lambda_sq.values[i] = l2;
    r.H_sqnorm_formula.values[i] =
        l2 != 0.0 ? 4.0 * d.p.values[i] * d.q.values[i] / l2 : std::numeric_limits<double>::quiet_NaN();
    r.min_lambda_sq = std::min(r.min_lambda_sq, l2);
    if (!(l2 > 0.0)) r.signature_ok = false;
  }
  return r;
}

ScalarField mean_curvature_formula(const DiracData& d, double threshold) {
  const Nondegeneracy nd = nondegeneracy(d, threshold);
  if (!nd.ok)
    throw Error(ErrorCode::DegenerateMetric, "conformal factor vanishes: min |lambda^2| = " + num(nd.min_abs_sqnorm));
  return metric_formula(d).H_sqnorm_formula;
}

DiracData minimal_dirac_data(const ConformalMap1D& psi1, const ConformalMap1D& psi2, const ConformalMap1D& phihat1,
                             const ConformalMap1D& phihat2, const GridSpec& spec) {
  spec.validate();
  return {hat_field(phihat1.sample(spec)), hat_field(phihat2.sample(spec)), psi1.sample(spec), psi2.sample(spec),
          ScalarField(spec, 0.0), ScalarField(spec, 0.0)};
}

Immersion22 minimal_immersion(const ConformalMap1D& psi1, const ConformalMap1D& psi2, const ConformalMap1D& phihat1,
                              const ConformalMap1D& phihat2, const Vec22& basepoint, const GridSpec& spec,
                              double threshold) {
  const DiracData d = minimal_dirac_data(psi1, psi2, phihat1, phihat2, spec);
  const Nondegeneracy nd = nondegeneracy(d, threshold);
  if (!nd.ok)
    throw Error(ErrorCode::DegenerateMetric,
                "psi2 phi1 - psi1 phi2 is null somewhere: min |lambda^2| = " + num(nd.min_abs_sqnorm));

  const GridField a = product(d.psi1, hat_field(d.phi1));
  const GridField b = product(d.psi2, hat_field(d.phi2));
  const GridField c = product(d.psi2, hat_field(d.phi1));
  const GridField e = product(d.psi1, hat_field(d.phi2));

  GridField W0(spec), W1(spec), W2(spec), W3(spec);
  for (std::size_t i = 0; i < W0.values.size(); ++i) {
    W0.values[i] = -a.values[i] + b.values[i];
    W1.values[i] = -a.values[i] - b.values[i];
    W2.values[i] = c.values[i] + e.values[i];
    W3.values[i] = -c.values[i] + e.values[i];
  }
  const GridField I0 = integrate_da(W0), I1 = integrate_da(W1), I2 = integrate_da(W2), I3 = integrate_da(W3);

  Immersion22 F{VecField(spec), basepoint};
  for (std::size_t i = 0; i < F.points.values.size(); ++i)
    F.points.values[i] = Vec22{I0.values[i].u, I1.values[i].u, I2.values[i].u, I3.values[i].v} + basepoint;
  return F;
}

DiracData r21_dirac_data(const GridField& phi2, const GridField& psi2, const ScalarField& p, int sign) {
  const double k = sign < 0 ? -1.0 : 1.0;
  GridField phi1 = hat_field(psi2), psi1 = hat_field(phi2);
  for (auto& x : phi1.values) x *= k;
  for (auto& x : psi1.values) x *= k;
  return {phi1, phi2, psi1, psi2, p, p};
}

R21Result r21_immersion(const GridField& phi2, const GridField& psi2, const ScalarField& p, int sign,
                        const Vec22& basepoint, const ImmersionOptions& opt) {
  const GridSpec& g = phi2.spec;
  g.validate();
  if (!(psi2.spec == g) || !(p.spec == g))
    throw Error(ErrorCode::InvalidArgument, "reduced data sampled on different grids");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");

  const double rtol = resolve(opt.residual_tol, default_residual_tolerance(g), opt.tol_scale);
  GridField rphi = d_a(phi2), rpsi = d_ahat(psi2);
  double res = 0.0;
  for (std::size_t i = 0; i < rphi.values.size(); ++i) {
    rphi.values[i] += p.values[i] * psi2.values[i];
    rpsi.values[i] += p.values[i] * phi2.values[i];
    res = std::max({res, split_abs(rphi.values[i]), split_abs(rpsi.values[i])});
  }
  if (res > rtol) throw Error(ErrorCode::ResidualTooLarge, "reduced Dirac residual " + num(res) + " exceeds " + num(rtol));

  R21Result out{Immersion22{VecField(g), basepoint}, ScalarField(g), ScalarField(g)};
  for (std::size_t i = 0; i < rphi.values.size(); ++i) {
    const double diff = sqnorm(phi2.values[i]) - sqnorm(psi2.values[i]);
    if (std::fabs(diff) <= opt.nondegeneracy_threshold)
      throw Error(ErrorCode::DegenerateMetric, "|phi2|^2 = |psi2|^2 at some node");
    out.lambda_sq.values[i] = diff * diff;
    out.H_sqnorm.values[i] = 4.0 * p.values[i] * p.values[i] / (diff * diff);
  }

  const double k = sign;
  const GridField phihat2 = hat_field(phi2), psihat2 = hat_field(psi2);
  const GridField G1 = integrate_form(product(psi2, phihat2, -1.0), product(psihat2, phi2, -1.0));
  const GridField Gp = integrate_form(product(phihat2, phihat2, k), product(psihat2, psihat2, k));
  const GridField Gm = integrate_form(product(psi2, psi2, k), product(phi2, phi2, k));
  for (std::size_t i = 0; i < G1.values.size(); ++i) {
    const LorentzNum sum = Gp.values[i] + Gm.values[i];
    const LorentzNum diff = Gp.values[i] - Gm.values[i];
    out.immersion.points.values[i] = Vec22{0.0, G1.values[i].u, 0.5 * sum.u, 0.5 * diff.v} + basepoint;
  }
  return out;
}

KonderakResult konderak_form(const ConformalMap1D& chi1, const ConformalMap1D& chi2, const GridSpec& spec,
                             const Vec22& basepoint, double threshold) {
  spec.validate();
  const GridField c1 = chi1.sample(spec), c2 = chi2.sample(spec);
  KonderakResult r{GridField(spec), GridField(spec), Immersion22{VecField(spec), basepoint},
                   Immersion22{VecField(spec), basepoint}};
  for (std::size_t i = 0; i < c1.values.size(); ++i) {
    if (std::fabs(sqnorm(c1.values[i])) <= threshold)
      throw Error(ErrorCode::NullChi1, "chi1 lies on the null cone at some node");
    r.Phi.values[i] = c1.values[i] * c1.values[i];
    r.g.values[i] = c2.values[i] / c1.values[i];
  }

  GridField a1(spec), a2(spec), a3(spec), b1(spec), b2(spec), b3(spec);
  for (std::size_t i = 0; i < c1.values.size(); ++i) {
    const LorentzNum x = c1.values[i], y = c2.values[i];
    a1.values[i] = 0.5 * (x * y);
    a2.values[i] = x * x + y * y;
    a3.values[i] = x * x - y * y;
    const LorentzNum g = r.g.values[i], phi = r.Phi.values[i];
    b1.values[i] = 0.5 * (g * phi);
    b2.values[i] = (1.0 + g * g) * phi;
    b3.values[i] = kSigma * ((1.0 - g * g) * phi);
  }
  const GridField A1 = integrate_da(a1), A2 = integrate_da(a2), A3 = integrate_da(a3);
  const GridField B1 = integrate_da(b1), B2 = integrate_da(b2), B3 = integrate_da(b3);
  for (std::size_t i = 0; i < c1.values.size(); ++i) {
    r.F_chi.points.values[i] = Vec22{0.0, A1.values[i].u, A2.values[i].u, A3.values[i].v} + basepoint;
    r.F_g_phi.points.values[i] = Vec22{0.0, B1.values[i].u, B2.values[i].u, B3.values[i].u} + basepoint;
  }
  return r;
}

std::array<GridField, 4> one_form_coefficients(const Immersion22& F) {
  const GridSpec& g = F.spec();
  g.validate();
  const VecField Fs = diff_s(F.points), Ft = diff_t(F.points);
  std::array<GridField, 4> out{GridField(g), GridField(g), GridField(g), GridField(g)};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < Fs.values.size(); ++i)
      out[k].values[i] = from_split(2.0 * Fs.values[i][k], 2.0 * Ft.values[i][k]);
  return out;
}

OneFormCriterion conformal_1form_criterion(const std::array<GridField, 4>& coeffs, double tol) {
  OneFormCriterion r;
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, max_split(c));
  r.degenerate = scale == 0.0;
  const double h = coeffs[0].spec.h();
  r.tolerance = tol < 0.0 ? 10.0 * h * h * std::max(1.0, scale) : tol;
  r.all_conformal = true;
  for (const auto& c : coeffs) {
    const ConformalityReport rep = is_conformal_samples(c, r.tolerance);
    r.max_residual = std::max(r.max_residual, rep.max_residual);
    r.all_conformal = r.all_conformal && rep.conformal;
  }
  return r;
}

}  // namespace lsurf
