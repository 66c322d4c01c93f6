#include "checks.hpp"
#include "doctest.h"
#include "lsurf/dirac.hpp"
#include "lsurf/oracle.hpp"
#include "lsurf/pseudosphere.hpp"
#include "lsurf/weierstrass.hpp"

using namespace lsurf;
using lsurf::test::Sampler;

TEST_CASE("algebra identities over random Lorentz numbers") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Sampler rng(seed);
    CHECK(test::algebra_identity_error(rng, 10000) < 1e-12);
  }
}

TEST_CASE("Clifford relation over random vectors") {
  for (std::uint64_t seed : {11u, 12u}) {
    Sampler rng(seed);
    CHECK(test::clifford_relation_error(rng, 200) < 1e-12);
  }
}

TEST_CASE("vec_of inverts gamma") {
  Sampler rng(21);
  for (int k = 0; k < 200; ++k) {
    const Vec22 x = rng.vec();
    CHECK(test::max_abs_diff(vec_of(gamma(x)), x) == 0.0);
  }
}

TEST_CASE("double cover on random unit spinors") {
  Sampler rng(31);
  const test::DoubleCoverErrors e = test::double_cover_errors(rng, 100);
  CHECK(e.unit < 1e-12);
  CHECK(e.metric < 1e-10);
  CHECK(e.homomorphism < 1e-10);
  CHECK(e.sign == 0.0);
}

TEST_CASE("A0 and A1 identities on random elements") {
  Sampler rng(41);
  CHECK(test::isomorphism_error(rng, 1000) < 1e-11);
}

TEST_CASE("Hermitian model round trip on random vectors") {
  Sampler rng(51);
  for (int k = 0; k < 500; ++k) {
    const Vec22 x = rng.vec();
    const Mat2A X = vec_to_herm(x);
    CHECK(test::max_abs_diff(herm_to_vec(X), x) < 1e-14);
    CHECK(test::rel_err(X.det(), -scalar(x, x)) < 1e-13);
    CHECK(max_abs_diff(real_to_herm(herm_to_real(X)), X) < 1e-14);
  }
}

TEST_CASE("unit spinors act on the Hermitian model as B X B*") {
  // Sl_2(A) frames preserve the determinant, hence the (2,2) product.
  Sampler rng(61);
  for (int k = 0; k < 100; ++k) {
    Mat2A B{rng.lorentz(1.0), rng.lorentz(1.0), rng.lorentz(1.0), LorentzNum{}};
    const auto inv = try_inverse(B.a);
    if (!inv || std::fabs(sqnorm(B.a)) < 0.1) continue;
    B.d = (1.0 + B.b * B.c) * *inv;
    const Vec22 x = rng.vec();
    const Vec22 y = herm_to_vec(B * vec_to_herm(x) * B.star(), 1e-8);
    CHECK(scalar(y, y) == doctest::Approx(scalar(x, x)).epsilon(1e-9));
  }
}

TEST_CASE("random conformal data give path-independent immersions") {
  Sampler rng(71);
  const GridSpec g{-0.4, 0.4, -0.4, 0.4, 33, 33};
  for (int k = 0; k < 5; ++k) {
    const LorentzNum c1 = rng.lorentz(0.5), c2 = rng.lorentz(0.5), c3 = rng.lorentz(0.5);
    const auto psi1 = ConformalMap1D::from_function([=](LorentzNum a) { return 1.0 + c1 * a; });
    const auto psi2 = ConformalMap1D::from_function([=](LorentzNum a) { return c2 * a * a; });
    const auto ph1 = ConformalMap1D::from_function([=](LorentzNum a) { return a + c3; });
    const auto ph2 = ConformalMap1D::constant(1.0);
    const DiracData d = minimal_dirac_data(psi1, psi2, ph1, ph2, g);
    if (!nondegeneracy(d).ok) continue;
    CHECK(path_independence_check(d) < 1e-12);
    CHECK(imaginary_defect(d) < 1e-12);
  }
}

TEST_CASE("Goursat metric agreement converges at second order") {
  std::vector<double> errors;
  for (int n : {33, 65, 129}) {
    const GridSpec g{-0.5, 0.5, -0.5, 0.5, n, n};
    const CharacteristicData init = characteristic_data(
        g, [](LorentzNum a) { return hat(a); }, [](LorentzNum) { return LorentzNum{1.0}; },
        [](LorentzNum) { return LorentzNum{1.0}; }, [](LorentzNum) { return LorentzNum{}; });
    const ScalarField p(g, 0.3);
    const DiracData d = solve_goursat(p, p, init);
    const Immersion22 F = integrate_immersion(d, {});
    const MetricReport m = metric_formula(d);
    ScalarField neg = m.lambda_sq;
    for (double& x : neg.values) x = -x;
    errors.push_back(interior_max_abs_diff(first_form(F).E, neg) / interior_stats(m.lambda_sq).max_abs);
  }
  CHECK(test::observed_order(errors[0], errors[1]) == doctest::Approx(2.0).epsilon(0.15));
  CHECK(test::observed_order(errors[1], errors[2]) == doctest::Approx(2.0).epsilon(0.15));
}
