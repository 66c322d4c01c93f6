#include "doctest.h"
#include "lsurf/weierstrass.hpp"
#include "support.hpp"

using namespace lsurf;
using lsurf::test::throws_code;

namespace {

ConformalMap1D cmap(LorentzNum (*f)(LorentzNum)) { return ConformalMap1D::from_function(f); }

LorentzNum one(LorentzNum) { return 1.0; }
LorentzNum zero(LorentzNum) { return 0.0; }
LorentzNum ident(LorentzNum a) { return a; }

Vec22 worked_formula(double u, double v) { return {-(u * u + v * v) / 2.0, -(u * u + v * v) / 2.0, u, v}; }

DiracData goursat_data(int n, double p_value) {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, n, n};
  const CharacteristicData init = characteristic_data(
      g, [](LorentzNum a) { return hat(a); }, one, one, zero);
  const ScalarField p(g, p_value);
  return solve_goursat(p, p, init);
}

double max_diff(const Immersion22& a, const Immersion22& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.points.values.size(); ++k)
    m = std::max(m, test::max_abs_diff(a.points.values[k], b.points.values[k]));
  return m;
}

}  // namespace

TEST_CASE("worked minimal datum") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 33, 33};
  const Vec22 base{1.0, 2.0, 3.0, 4.0};
  const Immersion22 F = minimal_immersion(cmap(one), cmap(zero), cmap(ident), cmap(one), base, g);
  const Vec22 origin = worked_formula(g.u(0, 0), g.v(0, 0));
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Vec22 want = worked_formula(g.u(i, j), g.v(i, j)) - origin + base;
      CHECK(test::max_abs_diff(F.points(i, j), want) < 1e-12);
    }
  CHECK(F.points(0, 0) == base);
}

TEST_CASE("minimal formula agrees with the general Dirac pipeline") {
  const GridSpec g{-0.5, 0.5, -0.25, 0.75, 33, 33};
  auto quad = [](LorentzNum a) { return 0.5 + 0.2 * a * a; };
  const auto psi1 = ConformalMap1D::from_function(quad), psi2 = cmap(ident);
  const auto ph1 = cmap(one), ph2 = ConformalMap1D::from_function([](LorentzNum a) { return kSigma * a - 0.3; });
  const Immersion22 F = minimal_immersion(psi1, psi2, ph1, ph2, {}, g);
  const DiracData d = minimal_dirac_data(psi1, psi2, ph1, ph2, g);
  CHECK(dirac_residual(d).max_norm < 1e-12);
  CHECK(imaginary_defect(d) < 1e-12);
  CHECK(max_diff(F, integrate_immersion(d, {})) < 1e-12);
}

TEST_CASE("degenerate minimal data") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 9, 9};
  CHECK(throws_code([&] { (void)minimal_immersion(cmap(one), cmap(one), cmap(one), cmap(one), {}, g); },
                    ErrorCode::DegenerateMetric));
}

TEST_CASE("metric and curvature formulas") {
  SUBCASE("free data") {
    const DiracData d = goursat_data(17, 0.0);
    const MetricReport m = metric_formula(d);
    CHECK(m.signature_ok);
    CHECK(m.min_lambda_sq == doctest::Approx(1.0));
    for (double h : mean_curvature_formula(d).values) CHECK(h == 0.0);
  }
  SUBCASE("constant potentials") {
    const DiracData d = goursat_data(17, 0.3);
    const MetricReport m = metric_formula(d);
    const ScalarField H = mean_curvature_formula(d);
    for (std::size_t k = 0; k < H.values.size(); ++k)
      CHECK(H.values[k] == doctest::Approx(4.0 * 0.09 / m.lambda_sq.values[k]));
  }
  SUBCASE("null wedge") {
    DiracData d = goursat_data(9, 0.0);
    d.psi1 = GridField(d.spec());
    CHECK(throws_code([&] { (void)mean_curvature_formula(d); }, ErrorCode::DegenerateMetric));
  }
}

TEST_CASE("path independence and its detection") {
  const DiracData d = goursat_data(65, 0.3);
  const double h = d.spec().h();
  CHECK(path_independence_check(d) < 10.0 * h * h);
  CHECK_NOTHROW((void)integrate_immersion(d, {}));

  DiracData bad = d;
  for (int i = 0; i < bad.spec().ns; ++i)
    for (int j = 0; j < bad.spec().nt; ++j) bad.phi1(i, j) = bad.phi1(i, j) + 0.5 * bad.spec().s(i) * bad.spec().t(j);
  CHECK(path_independence_check(bad) > 1e-2);
  CHECK(throws_code([&] { (void)integrate_immersion(bad, {}); }, ErrorCode::ResidualTooLarge));
  ImmersionOptions lax;
  lax.residual_tol = 1e3;
  CHECK(throws_code([&] { (void)integrate_immersion(bad, {}, lax); }, ErrorCode::PathDependence));
}

TEST_CASE("reduction to R^{2,1}") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 33, 33};
  const CharacteristicData lines = characteristic_data(g, zero, one, zero, [](LorentzNum a) { return 0.5 * a; });
  CharacteristicData init{g, {lines.alpha[1], lines.alpha[1]}};
  const ScalarField p(g, 0.4);
  const DiracData solved = solve_goursat(p, p, init);
  for (int sign : {1, -1}) {
    CAPTURE(sign);
    const Vec22 base{0.25, 0.0, 0.0, 0.0};
    const R21Result r = r21_immersion(solved.phi2, solved.psi2, p, sign, base);
    const DiracData full = r21_dirac_data(solved.phi2, solved.psi2, p, sign);
    const Immersion22 F = integrate_immersion(full, base);
    for (const Vec22& x : F.points.values) CHECK(std::fabs(x.x0 - 0.25) < 1e-10);
    CHECK(max_diff(F, r.immersion) < 1e-10);
    const MetricReport m = metric_formula(full);
    for (std::size_t k = 0; k < m.lambda_sq.values.size(); k += 97) {
      CHECK(r.lambda_sq.values[k] == doctest::Approx(m.lambda_sq.values[k]).epsilon(1e-12));
      CHECK(r.H_sqnorm.values[k] == doctest::Approx(m.H_sqnorm_formula.values[k]).epsilon(1e-12));
    }
  }
  CHECK(throws_code([&] { (void)r21_immersion(solved.phi2, solved.psi2, p, 2, {}); }, ErrorCode::InvalidArgument));
}

TEST_CASE("Konderak forms") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 33, 33};
  const KonderakResult k = konderak_form(cmap(one), cmap(ident), g, {0.5, 0.0, 0.0, 0.0});
  double scale = 1.0;
  for (std::size_t n = 0; n < k.F_chi.points.values.size(); ++n) {
    CHECK(test::max_abs_diff(k.F_chi.points.values[n], k.F_g_phi.points.values[n]) < 1e-10);
    CHECK(k.F_chi.points.values[n].x0 == 0.5);
    scale = std::max(scale, std::fabs(k.F_chi.points.values[n].x2));
  }
  CHECK(test::rel_err(k.g(5, 7), g.a(5, 7)) < 1e-15);
  CHECK(k.Phi(5, 7) == LorentzNum{1.0});

  // chi1 = e+ is a zero divisor everywhere
  const auto null_chi = ConformalMap1D::constant(kEPlus);
  CHECK(throws_code([&] { (void)konderak_form(null_chi, cmap(ident), g); }, ErrorCode::NullChi1));
}

TEST_CASE("conformal 1-form criterion") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 33, 33};
  const Immersion22 minimal = minimal_immersion(cmap(one), cmap(zero), cmap(ident), cmap(one), {}, g);
  const OneFormCriterion c = conformal_1form_criterion(one_form_coefficients(minimal));
  CHECK(c.all_conformal);
  CHECK_FALSE(c.degenerate);

  const Immersion22 curved = integrate_immersion(goursat_data(33, 0.3), {});
  CHECK_FALSE(conformal_1form_criterion(one_form_coefficients(curved)).all_conformal);

  Immersion22 flat{VecField(g, Vec22{1.0, 1.0, 1.0, 1.0}), {}};
  const OneFormCriterion d = conformal_1form_criterion(one_form_coefficients(flat));
  CHECK(d.degenerate);
}

TEST_CASE("integrate_da of a polynomial") {
  const GridSpec g{0.0, 1.0, 0.0, 1.0, 17, 17};
  const GridField Z = sample(g, [](const LorentzNum& a) { return 2.0 * a; });
  const GridField I = integrate_da(Z);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) CHECK(test::rel_err(I(i, j), g.a(i, j) * g.a(i, j)) < 1e-13);
}
