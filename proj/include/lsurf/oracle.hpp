#pragma once

#include <array>

#include "lsurf/weierstrass.hpp"

namespace lsurf {

/// Tangent and second-derivative fields of a sampled immersion in the null
/// coordinates (s, t). Interior nodes use central differences; boundary nodes
/// use second-order one-sided stencils.
struct Jets {
  VecField Fs, Ft, Fss, Fst, Ftt;
};

Jets jets(const Immersion22& F);

struct FirstForm {
  ScalarField a, b, c;  ///< <F_s,F_s>, <F_s,F_t>, <F_t,F_t>
  ScalarField E, F, G;  ///< the same form in (u, v)
};

/// Throws GridTooSmall below 3x3 samples.
FirstForm first_form(const Immersion22& F);

struct NormalFrame {
  VecField n0;  ///< <n0, n0> = -1
  VecField n1;  ///< <n1, n1> = +1
};

/// Orthonormal frame of the normal plane, propagated continuously from the
/// (0, 0) corner. Throws DegenerateTangent or NullNormalDirection.
NormalFrame normal_frame(const Immersion22& F);

struct FundamentalForms {
  FirstForm first;
  NormalFrame normals;
  /// Second form along n_k in (u, v): e = II(d_u, d_u), f = II(d_u, d_v), g = II(d_v, d_v).
  std::array<ScalarField, 2> e, f, g;
};

FundamentalForms fundamental_forms(const Immersion22& F);

/// H = 1/2 tr_g II as a vector field.
VecField mean_curvature_vector(const Immersion22& F);

/// Intrinsic (Brioschi) Gauss curvature, sign fixed so that the totally
/// geodesic slice of the anti-de Sitter space has K = -1.
/// Throws DegenerateMetric where the first form is singular.
ScalarField gauss_curvature(const Immersion22& F);

/// max over interior nodes of |E + G| and |F| (zero for conformal (u, v)).
double conformality_defect(const Immersion22& F);

/// max over interior nodes of |<F_s,F_s>| and |<F_t,F_t>| (zero when s, t are null).
double null_coordinate_defect(const Immersion22& F);

/// Largest deviation of the Gram matrix of (n0, n1, F_u/l, F_v/l), l^2 = |E|,
/// from diag(-1, 1, -1, 1) over interior nodes.
double frame_orthonormality_defect(const Immersion22& F);

struct FieldStats {
  double min = 0.0, max = 0.0, mean = 0.0, max_abs = 0.0;
};

/// Statistics over nodes at least interior_margin(spec) away from the boundary.
FieldStats interior_stats(const ScalarField& f);
double interior_max_abs_diff(const ScalarField& a, const ScalarField& b);

struct CurvatureReport {
  VecField mean_vector;
  ScalarField H_sqnorm;
  ScalarField gauss_K;
  double conformal_defect = 0.0;
  double null_defect = 0.0;
  FieldStats H_stats, K_stats;
  double mean_vector_max = 0.0;  ///< interior max of the Euclidean size of H
};

CurvatureReport curvature_report(const Immersion22& F);

}  // namespace lsurf
