#include "doctest.h"
#include "lsurf/dirac.hpp"
#include "support.hpp"

using namespace lsurf;
using lsurf::test::throws_code;

namespace {

CharacteristicData worked_lines(const GridSpec& g) {
  return characteristic_data(
      g, [](LorentzNum a) { return hat(a); }, [](LorentzNum) { return LorentzNum{1.0}; },
      [](LorentzNum) { return LorentzNum{1.0}; }, [](LorentzNum) { return LorentzNum{}; });
}

}  // namespace

TEST_CASE("characteristic data has the documented shapes") {
  const GridSpec g{-0.5, 0.5, -0.25, 0.25, 5, 7};
  const CharacteristicData d = worked_lines(g);
  CHECK(d.alpha[0].phi_plus.size() == 7u);
  CHECK(d.alpha[0].psi_plus.size() == 5u);
  CHECK(d.alpha[0].phi_minus.size() == 5u);
  CHECK(d.alpha[0].psi_minus.size() == 7u);
  // phi1 = ahat has plus part t and minus part s
  CHECK(d.alpha[0].phi_plus[3] == doctest::Approx(g.t(3)));
  CHECK(d.alpha[0].phi_minus[2] == doctest::Approx(g.s(2)));
  CHECK_NOTHROW(validate(d));
}

TEST_CASE("validate rejects inconsistent data") {
  const GridSpec g{0, 1, 0, 1, 5, 5};
  CharacteristicData d = worked_lines(g);
  d.alpha[1].psi_plus.pop_back();
  CHECK(throws_code([&] { validate(d); }, ErrorCode::InconsistentInitialData));

  d = worked_lines(g);
  d.alpha[0].phi_minus[1] = std::nan("");
  CHECK(throws_code([&] { validate(d); }, ErrorCode::InconsistentInitialData));
}

TEST_CASE("free system propagates the line data unchanged") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 17, 17};
  const ScalarField zero(g, 0.0);
  const DiracData d = solve_goursat(zero, zero, worked_lines(g));
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      CHECK(test::rel_err(d.phi1(i, j), hat(g.a(i, j))) < 1e-14);
      CHECK(d.phi2(i, j) == LorentzNum{1.0});
      CHECK(d.psi1(i, j) == LorentzNum{1.0});
      CHECK(d.psi2(i, j) == LorentzNum{});
    }
  CHECK(dirac_residual(d).max_norm < 1e-13);
}

TEST_CASE("Goursat solver converges at second order") {
  double prev = 0.0;
  for (int n : {33, 65, 129}) {
    const GridSpec g{-0.5, 0.5, -0.5, 0.5, n, n};
    const ScalarField p(g, 0.3);
    const DiracData d = solve_goursat(p, p, worked_lines(g));
    const double r = dirac_residual(d).max_norm;
    CHECK(r < default_residual_tolerance(g));
    if (prev > 0.0) CHECK(test::observed_order(prev, r) == doctest::Approx(2.0).epsilon(0.1));
    prev = r;
  }
}

TEST_CASE("Goursat solver matches the series solution for constant potentials") {
  // With p = q = 1, phi+ = 1 on s = 0 and psi+ = 0 on t = 0, the plus system gives phi_st = phi:
  // phi+ = I0(2 sqrt(st)) and psi+ = -d_s phi+.
  const GridSpec g{0.0, 0.2, 0.0, 0.2, 65, 65};
  const ScalarField p(g, 1.0);
  CharacteristicData init{g, {}};
  for (auto& a : init.alpha) {
    a.phi_plus.assign(static_cast<std::size_t>(g.nt), 1.0);
    a.psi_plus.assign(static_cast<std::size_t>(g.ns), 0.0);
    a.phi_minus.assign(static_cast<std::size_t>(g.ns), 1.0);
    a.psi_minus.assign(static_cast<std::size_t>(g.nt), 0.0);
  }
  const DiracData d = solve_goursat(p, p, init);
  for (const auto& [i, j] : {std::pair{64, 64}, std::pair{32, 48}, std::pair{10, 60}}) {
    const double s = g.s(i), t = g.t(j), st = s * t;
    const double phi_exact = 1.0 + st + st * st / 4.0 + st * st * st / 36.0;
    const double psi_exact = -t * (1.0 + st / 2.0 + st * st / 12.0);
    CHECK(to_split(d.phi1(i, j)).plus == doctest::Approx(phi_exact).epsilon(1e-6));
    CHECK(to_split(d.psi1(i, j)).plus == doctest::Approx(psi_exact).epsilon(1e-6));
    // the minus system is the same problem with s and t exchanged
    const double phi_minus = to_split(d.phi2(j, i)).minus;
    CHECK(phi_minus == doctest::Approx(phi_exact).epsilon(1e-6));
  }
}

TEST_CASE("spinor wedge and nondegeneracy") {
  const GridSpec g{-0.5, 0.5, -0.5, 0.5, 9, 9};
  const ScalarField zero(g, 0.0);
  DiracData d = solve_goursat(zero, zero, worked_lines(g));
  const GridField w = spinor_wedge(d);
  CHECK(test::rel_err(w(3, 5), -1.0) < 1e-15);  // psi2 phi1 - psi1 phi2 = -1
  const Nondegeneracy ok = nondegeneracy(d);
  CHECK(ok.ok);
  CHECK(ok.min_abs_sqnorm == doctest::Approx(1.0));

  d.psi1 = GridField(g);
  CHECK_FALSE(nondegeneracy(d).ok);
}
