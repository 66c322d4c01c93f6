#pragma once

#include <array>

#include "lsurf/calculus.hpp"
#include "lsurf/clifford.hpp"
#include "lsurf/dirac.hpp"
#include "lsurf/grid.hpp"

namespace lsurf {

using VecField = Grid<Vec22>;

/// Sampled map into R^{2,2}; points(0, 0) is the basepoint.
struct Immersion22 {
  VecField points;
  Vec22 basepoint;

  const GridSpec& spec() const { return points.spec; }
};

/// Thresholds for the Dirac-data pipeline. Negative values select the
/// defaults (10 h^2 for residual and path defect), all multiplied by tol_scale.
struct ImmersionOptions {
  double residual_tol = -1.0;
  double path_tol = -1.0;
  double tol_scale = 1.0;
  double nondegeneracy_threshold = 1e-8;
};

/// Primitive of X da + Y dahat with value 0 at node (0, 0).
GridField integrate_form(const GridField& X, const GridField& Y, bool t_first = false);
/// Primitive of Z da.
GridField integrate_da(const GridField& Z);

/// The four A-valued primitives G1 = F0 + F1, G2 = F0 - F1,
/// G3, G4 with F2 = Re(G3 + G4)/2 and F3 = Im(G3 - G4)/2.
std::array<GridField, 4> immersion_primitives(const DiracData& d, bool t_first = false);

/// Throws ResidualTooLarge, DegenerateMetric or PathDependence.
Immersion22 integrate_immersion(const DiracData& d, const Vec22& basepoint, const ImmersionOptions& opt = {});

/// Largest sigma-part of the primitives of F0 +- F1 (zero for valid data).
double imaginary_defect(const DiracData& d);

/// Max difference between the s-first and t-first staircase primitives.
double path_independence_check(const DiracData& d);

struct MetricReport {
  ScalarField lambda_sq;         ///< sqnorm(psi2 phi1 - psi1 phi2)
  ScalarField H_sqnorm_formula;  ///< 4 p q / lambda_sq, NaN where lambda_sq = 0
  double min_lambda_sq = 0.0;
  bool signature_ok = false;  ///< lambda_sq > 0 everywhere
};

MetricReport metric_formula(const DiracData& d);

/// Lorentzian square of the mean curvature vector, 4 p q / lambda_sq.
/// Throws DegenerateMetric if the spinor wedge is null somewhere.
ScalarField mean_curvature_formula(const DiracData& d, double threshold = 1e-8);

/// Dirac data with p = q = 0 induced by conformal psi_alpha and phihat_alpha.
DiracData minimal_dirac_data(const ConformalMap1D& psi1, const ConformalMap1D& psi2, const ConformalMap1D& phihat1,
                             const ConformalMap1D& phihat2, const GridSpec& spec);

/// Minimal immersion from four conformal maps:
///   F0 = Re int (-psi1 phihat1 + psi2 phihat2) da,  F1 = Re int (-psi1 phihat1 - psi2 phihat2) da,
///   F2 = Re int ( psi2 phihat1 + psi1 phihat2) da,  F3 = Im int (-psi2 phihat1 + psi1 phihat2) da.
/// Throws DegenerateMetric when psi2 phi1 - psi1 phi2 is null somewhere.
Immersion22 minimal_immersion(const ConformalMap1D& psi1, const ConformalMap1D& psi2, const ConformalMap1D& phihat1,
                              const ConformalMap1D& phihat2, const Vec22& basepoint, const GridSpec& spec,
                              double threshold = 1e-8);

struct R21Result {
  Immersion22 immersion;  ///< x0 stays at the basepoint value
  ScalarField lambda_sq;  ///< (|phi2|^2 - |psi2|^2)^2
  ScalarField H_sqnorm;   ///< 4 p^2 / lambda_sq
};

/// Surfaces in R^{2,1} from the reduced system d_a phi2 = -p psi2, d_ahat psi2 = -p phi2.
/// `sign` is +1 or -1. Throws ResidualTooLarge or DegenerateMetric.
R21Result r21_immersion(const GridField& phi2, const GridField& psi2, const ScalarField& p, int sign,
                        const Vec22& basepoint, const ImmersionOptions& opt = {});

/// Full Dirac data of the reduction psi1 = sign*phihat2, phi1 = sign*psihat2, q = p.
DiracData r21_dirac_data(const GridField& phi2, const GridField& psi2, const ScalarField& p, int sign);

struct KonderakResult {
  GridField Phi;  ///< coefficient chi1^2 of the 1-form Phi = chi1^2 da
  GridField g;    ///< chi2 / chi1
  Immersion22 F_chi;
  Immersion22 F_g_phi;
};

/// Both Weierstrass forms of a surface in R^{2,1} (placed at x0 = basepoint.x0):
///   chi form:   F1 = Re int chi1 chi2 / 2 da, F2 = Re int (chi1^2 + chi2^2) da, F3 = Im int (chi1^2 - chi2^2) da
///   (g, Phi):   F1 = Re int g Phi / 2,        F2 = Re int (1 + g^2) Phi,        F3 = Re int sigma (1 - g^2) Phi
/// Throws NullChi1 if chi1 touches the null cone.
KonderakResult konderak_form(const ConformalMap1D& chi1, const ConformalMap1D& chi2, const GridSpec& spec,
                             const Vec22& basepoint = {}, double threshold = 1e-12);

/// Coefficients c_k of the 1-forms alpha_k = xi_k + sigma xi_k(sigma .) of an
/// immersion, with split parts (2 d_s F_k, 2 d_t F_k).
std::array<GridField, 4> one_form_coefficients(const Immersion22& F);

struct OneFormCriterion {
  bool all_conformal = false;
  bool degenerate = false;  ///< every coefficient vanishes (constant map)
  double max_residual = 0.0;
  double tolerance = 0.0;
};

/// Minimality test: all four alpha_k are conformal 1-forms. A negative tol
/// selects 10 h^2 times the largest coefficient (at least 1).
OneFormCriterion conformal_1form_criterion(const std::array<GridField, 4>& coeffs, double tol = -1.0);

}  // namespace lsurf
