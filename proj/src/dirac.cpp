#include "lsurf/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

void check_profile(const std::vector<double>& v, int expected, const char* name) {
  if (static_cast<int>(v.size()) != expected)
    throw Error(ErrorCode::InconsistentInitialData, std::string(name) + " has " + std::to_string(v.size()) +
                                                        " samples, grid expects " + std::to_string(expected));
  for (double x : v)
    if (!std::isfinite(x)) throw Error(ErrorCode::InconsistentInitialData, std::string(name) + " is not finite");
}

// Box scheme for  d_x P = -p S,  d_y S = -q P  on an (nx, ny) lattice where P
// is known on x = 0 and S on y = 0. The accessors map (x, y) to grid slots so
// the same routine handles both split components.
template <class At, class Pot>
void march(int nx, int ny, double hx, double hy, At P, At S, Pot p, Pot q) {
  for (int x = 1; x < nx; ++x)
    P(x, 0) = P(x - 1, 0) - 0.5 * hx * (p(x - 1, 0) * S(x - 1, 0) + p(x, 0) * S(x, 0));
  for (int y = 1; y < ny; ++y)
    S(0, y) = S(0, y - 1) - 0.5 * hy * (q(0, y - 1) * P(0, y - 1) + q(0, y) * P(0, y));
  for (int x = 1; x < nx; ++x)
    for (int y = 1; y < ny; ++y) {
      const double ra = P(x - 1, y) - 0.5 * hx * p(x - 1, y) * S(x - 1, y);
      const double rb = S(x, y - 1) - 0.5 * hy * q(x, y - 1) * P(x, y - 1);
      const double A = 0.5 * hx * p(x, y);
      const double B = 0.5 * hy * q(x, y);
      const double det = 1.0 - A * B;
      if (det == 0.0) throw Error(ErrorCode::InvalidArgument, "box scheme is singular; refine the grid");
      P(x, y) = (ra - A * rb) / det;
      S(x, y) = (rb - B * ra) / det;
    }
}

}  // namespace

CharacteristicData characteristic_data(const GridSpec& spec, const SpinorFn& phi1, const SpinorFn& phi2,
                                       const SpinorFn& psi1, const SpinorFn& psi2) {
  spec.validate();
  CharacteristicData init;
  init.spec = spec;
  const SpinorFn* phis[2] = {&phi1, &phi2};
  const SpinorFn* psis[2] = {&psi1, &psi2};
  for (std::size_t k = 0; k < 2; ++k) {
    GoursatProfiles& g = init.alpha[k];
    for (int j = 0; j < spec.nt; ++j) {
      g.phi_plus.push_back(to_split((*phis[k])(spec.a(0, j))).plus);
      g.psi_minus.push_back(to_split((*psis[k])(spec.a(0, j))).minus);
    }
    for (int i = 0; i < spec.ns; ++i) {
      g.psi_plus.push_back(to_split((*psis[k])(spec.a(i, 0))).plus);
      g.phi_minus.push_back(to_split((*phis[k])(spec.a(i, 0))).minus);
    }
  }
  return init;
}

void validate(const CharacteristicData& init) {
  init.spec.validate();
  for (const auto& g : init.alpha) {
    check_profile(g.phi_plus, init.spec.nt, "phi+ profile");
    check_profile(g.psi_minus, init.spec.nt, "psi- profile");
    check_profile(g.psi_plus, init.spec.ns, "psi+ profile");
    check_profile(g.phi_minus, init.spec.ns, "phi- profile");
  }
}

DiracData solve_goursat(const ScalarField& p, const ScalarField& q, const CharacteristicData& init) {
  validate(init);
  const GridSpec& g = init.spec;
  if (!(p.spec == g) || !(q.spec == g))
    throw Error(ErrorCode::InconsistentInitialData, "potentials are sampled on a different grid");
  for (const auto* f : {&p, &q})
    for (double x : f->values)
      if (!std::isfinite(x)) throw Error(ErrorCode::InconsistentInitialData, "potential is not finite");

  DiracData d{GridField(g), GridField(g), GridField(g), GridField(g), p, q};
  GridField* phis[2] = {&d.phi1, &d.phi2};
  GridField* psis[2] = {&d.psi1, &d.psi2};
  const std::size_t n = g.size();

  for (std::size_t k = 0; k < 2; ++k) {
    const GoursatProfiles& prof = init.alpha[k];
    std::vector<double> phi_p(n), psi_p(n), phi_m(n), psi_m(n);
    auto at = [&](std::vector<double>& v) { return [&v, &g](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(g.nt) + static_cast<std::size_t>(j)]; }; };
    auto pot = [](const ScalarField& f) { return [&f](int i, int j) { return f(i, j); }; };

    auto Pp = at(phi_p), Sp = at(psi_p), Pm = at(phi_m), Sm = at(psi_m);
    for (int j = 0; j < g.nt; ++j) {
      Pp(0, j) = prof.phi_plus[static_cast<std::size_t>(j)];
      Sm(0, j) = prof.psi_minus[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < g.ns; ++i) {
      Sp(i, 0) = prof.psi_plus[static_cast<std::size_t>(i)];
      Pm(i, 0) = prof.phi_minus[static_cast<std::size_t>(i)];
    }

    march(g.ns, g.nt, g.hs(), g.ht(), Pp, Sp, pot(p), pot(q));

    // Minus component: x runs along t, y along s.
    auto swap = [](auto acc) { return [acc](int x, int y) -> decltype(auto) { return acc(y, x); }; };
    march(g.nt, g.ns, g.ht(), g.hs(), swap(Pm), swap(Sm), swap(pot(p)), swap(pot(q)));

    for (std::size_t idx = 0; idx < n; ++idx) {
      phis[k]->values[idx] = from_split(phi_p[idx], phi_m[idx]);
      psis[k]->values[idx] = from_split(psi_p[idx], psi_m[idx]);
    }
  }
  return d;
}

DiracResidual dirac_residual(const DiracData& d) {
  const GridField* phis[2] = {&d.phi1, &d.phi2};
  const GridField* psis[2] = {&d.psi1, &d.psi2};
  DiracResidual r;
  for (std::size_t k = 0; k < 2; ++k) {
    r.r_phi[k] = d_a(*phis[k]);
    r.r_psi[k] = d_ahat(*psis[k]);
    for (std::size_t idx = 0; idx < r.r_phi[k].values.size(); ++idx) {
      r.r_phi[k].values[idx] += d.p.values[idx] * psis[k]->values[idx];
      r.r_psi[k].values[idx] += d.q.values[idx] * phis[k]->values[idx];
      r.max_norm = std::max({r.max_norm, split_abs(r.r_phi[k].values[idx]), split_abs(r.r_psi[k].values[idx])});
    }
  }
  return r;
}

GridField spinor_wedge(const DiracData& d) {
  GridField w(d.spec());
  for (std::size_t idx = 0; idx < w.values.size(); ++idx)
    w.values[idx] = d.psi2.values[idx] * d.phi1.values[idx] - d.psi1.values[idx] * d.phi2.values[idx];
  return w;
}

Nondegeneracy nondegeneracy(const DiracData& d, double threshold) {
  const GridField w = spinor_wedge(d);
  Nondegeneracy out;
  out.threshold = threshold;
  out.min_abs_sqnorm = std::numeric_limits<double>::infinity();
  for (const auto& x : w.values) out.min_abs_sqnorm = std::min(out.min_abs_sqnorm, std::fabs(sqnorm(x)));
  out.ok = out.min_abs_sqnorm > threshold;
  return out;
}

double default_residual_tolerance(const GridSpec& spec) {
  const double h = spec.h();
  return 10.0 * h * h;
}

}  // namespace lsurf
