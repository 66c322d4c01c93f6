#include "doctest.h"
#include "lsurf/calculus.hpp"
#include "lsurf/grid.hpp"
#include "support.hpp"

using namespace lsurf;
using lsurf::test::throws_code;

TEST_CASE("GridSpec geometry") {
  const GridSpec g{-1.0, 1.0, 0.0, 2.0, 5, 9};
  CHECK(g.hs() == 0.5);
  CHECK(g.ht() == 0.25);
  CHECK(g.h() == 0.5);
  CHECK(g.s(4) == 1.0);
  CHECK(g.u(2, 4) == 0.5);   // (0 + 1) / 2
  CHECK(g.v(2, 4) == -0.5);  // (0 - 1) / 2
  CHECK(to_split(g.a(2, 4)) == SplitRep{0.0, 1.0});
  CHECK(g.size() == 45u);

  const GridSpec r = g.refined(2);
  CHECK(r.ns == 17);
  CHECK(r.nt == 33);
  CHECK(r.hs() == 0.125);
}

TEST_CASE("GridSpec validation") {
  CHECK(throws_code([] { GridSpec{0, 1, 0, 1, 2, 5}.validate(); }, ErrorCode::GridTooSmall));
  CHECK(throws_code([] { GridSpec{1, 0, 0, 1, 5, 5}.validate(); }, ErrorCode::InvalidArgument));
  CHECK_NOTHROW(GridSpec{0, 1, 0, 1, 3, 3}.validate());
}

TEST_CASE("finite differences are exact on quadratics") {
  const GridSpec g{-1.0, 1.0, -0.5, 0.5, 9, 7};
  ScalarField f(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) f(i, j) = 3.0 * g.s(i) * g.s(i) - g.s(i) * g.t(j) + 2.0 * g.t(j) * g.t(j);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      CHECK(diff_s(f, i, j) == doctest::Approx(6.0 * g.s(i) - g.t(j)).epsilon(1e-12));
      CHECK(diff_t(f, i, j) == doctest::Approx(-g.s(i) + 4.0 * g.t(j)).epsilon(1e-12));
    }
}

TEST_CASE("staircase primitives of an exact form agree") {
  const GridSpec g{0.0, 1.0, 0.0, 1.0, 11, 11};
  ScalarField P(g), Q(g);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      P(i, j) = g.t(j);  // d(st) = t ds + s dt
      Q(i, j) = g.s(i);
    }
  const ScalarField A = integrate_s_then_t(P, Q, 1.0);
  const ScalarField B = integrate_t_then_s(P, Q, 1.0);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      CHECK(A(i, j) == doctest::Approx(1.0 + g.s(i) * g.t(j)).epsilon(1e-13));
      CHECK(B(i, j) == doctest::Approx(A(i, j)).epsilon(1e-13));
    }
}

TEST_CASE("interior margin") {
  CHECK(interior_margin(GridSpec{0, 1, 0, 1, 3, 3}) == 1);
  CHECK(interior_margin(GridSpec{0, 1, 0, 1, 65, 65}) == 2);
}

TEST_CASE("d_a and d_ahat on polynomials of a") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 9, 9};
  const GridField f = sample(g, [](const LorentzNum& a) { return a * a; });
  const GridField fa = d_a(f), fh = d_ahat(f);
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      CHECK(test::rel_err(fa(i, j), 2.0 * g.a(i, j)) < 1e-13);
      CHECK(split_abs(fh(i, j)) < 1e-13);
    }

  const GridField c = sample(g, [](const LorentzNum& a) { return hat(a); });
  const GridField ch = d_ahat(c);
  CHECK(test::rel_err(ch(4, 4), 1.0) < 1e-13);
}

TEST_CASE("conformality of samples") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 9, 9};
  const GridField conformal = sample(g, [](const LorentzNum& a) { return a * a * a + kSigma; });
  const GridField anti = sample(g, [](const LorentzNum& a) { return hat(a) * a; });
  CHECK(is_conformal_samples(conformal, 1e-10).conformal);
  const ConformalityReport r = is_conformal_samples(anti, 1e-10);
  CHECK_FALSE(r.conformal);
  CHECK(r.max_residual > 0.1);
}

TEST_CASE("ConformalMap1D") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 9, 9};
  SUBCASE("from_function recovers a conformal map") {
    const auto m = ConformalMap1D::from_function([](LorentzNum a) { return a * a + 2.0 * kSigma * a; });
    const GridField f = m.sample(g);
    for (int i = 0; i < g.ns; ++i)
      for (int j = 0; j < g.nt; ++j) {
        const LorentzNum a = g.a(i, j);
        CHECK(test::rel_err(f(i, j), a * a + 2.0 * kSigma * a) < 1e-14);
      }
  }
  SUBCASE("from_samples interpolates cubics exactly") {
    std::vector<double> plus, minus;
    for (int i = 0; i < g.ns; ++i) plus.push_back(g.s(i) * g.s(i) * g.s(i));
    for (int j = 0; j < g.nt; ++j) minus.push_back(1.0 - g.t(j));
    const auto m = ConformalMap1D::from_samples(g, plus, minus);
    CHECK(m.plus(0.1234) == doctest::Approx(0.1234 * 0.1234 * 0.1234).epsilon(1e-13));
    CHECK(m.minus(-0.377) == doctest::Approx(1.377).epsilon(1e-13));
  }
  SUBCASE("from_samples checks lengths") {
    CHECK(throws_code([&] { (void)ConformalMap1D::from_samples(g, {1, 2, 3}, {1, 2, 3}); }, ErrorCode::InvalidArgument));
  }
  SUBCASE("constant") {
    const auto m = ConformalMap1D::constant(LorentzNum{2.0, -1.0});
    CHECK(m(0.3, -0.2) == LorentzNum{2.0, -1.0});
  }
}
