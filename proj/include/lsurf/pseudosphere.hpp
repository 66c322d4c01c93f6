#pragma once

#include <vector>

#include "lsurf/calculus.hpp"
#include "lsurf/clifford.hpp"
#include "lsurf/weierstrass.hpp"

namespace lsurf {

/// The conformal 1-form f da.
struct ConformalOneForm {
  ConformalMap1D f;

  static ConformalOneForm zero() { return {ConformalMap1D::constant(0.0)}; }
  static ConformalOneForm constant(const LorentzNum& c) { return {ConformalMap1D::constant(c)}; }
};

using Mat2AField = Grid<Mat2A>;

/// Which pseudo-sphere a flat frame is pushed into.
enum class FlatTarget { AntiDeSitter, PseudoSphere12 };

/// Solves B^{-1} dB = ((0, theta), (omega, 0)) with B(s0, t0) = B0. The plus
/// part is a real ODE in s and the minus part one in t; each is integrated
/// with classical RK4 followed by projection to unit determinant.
/// Throws NotUnitDeterminant for det B0 != 1 and DetDrift when a projection
/// step corrects the determinant by more than `drift_tol`.
Mat2AField integrate_frame(const ConformalOneForm& theta, const ConformalOneForm& omega, const Mat2A& B0,
                           const GridSpec& spec, double drift_tol = 1e-6);

/// Max over the grid of |B^{-1} d_a B - ((0, f_theta), (f_omega, 0))| and
/// |B^{-1} d_ahat B| with finite-difference derivatives.
double frame_equation_residual(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega);

/// min over the grid of | |theta|^2 - k |omega|^2 | for k = +1 or -1.
double flat_degeneracy(const ConformalOneForm& theta, const ConformalOneForm& omega, const GridSpec& spec, double k);

/// F = B B* in the anti-de Sitter space <x, x> = -1.
/// Throws DegenerateImmersion when |theta|^2 = |omega|^2 somewhere.
Immersion22 ads_immersion(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                          double threshold = 1e-8);

/// F = B diag(-1, 1) B* in the pseudo-sphere <x, x> = +1.
/// Throws DegenerateImmersion when |theta|^2 = -|omega|^2 or |theta|^2 = |omega|^2 somewhere.
Immersion22 s12_immersion(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                          double threshold = 1e-8);

/// Induced metric (as a quadratic form in ds, dt) and the differential of the
/// unit normal, both in closed form from theta and omega.
struct FlatMetricShape {
  ScalarField g_ss, g_st, g_tt;
  Mat2AField normal;             ///< unit normal N in Herm_2(A)
  Mat2AField shape_s, shape_t;   ///< dN(d_s), dN(d_t) in Herm_2(A)
  double imaginary_defect = 0.0;  ///< sigma-part of the metric coefficients
};

FlatMetricShape flat_metric_shape(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                                  FlatTarget target);

/// Real curves with B(s, t) = e+ B1(s) + e- B2(t).
struct CurvePair {
  GridSpec spec;
  std::vector<Mat2R> B1;  ///< indexed by s
  std::vector<Mat2R> B2;  ///< indexed by t
  double reconstruction_error = 0.0;
};

/// Throws NotSplit if the plus part depends on t (or the minus part on s)
/// beyond `tol`, and NotUnitDeterminant if a curve leaves Sl_2(R).
CurvePair product_curves_decompose(const Mat2AField& B, double tol = 1e-8);

/// The anti-de Sitter immersion of a curve pair in the Sl_2(R) model: B1(s) B2(t)^t.
Mat2R sl2r_point(const CurvePair& c, int i, int j);

}  // namespace lsurf
