#include "lsurf/pseudosphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

namespace {

// Generator ((0, th), (om, 0)) of the split ODE.
Mat2R generator(double th, double om) { return {0.0, th, om, 0.0}; }

// dB/dx = B * M(x), marched over a uniform lattice.
std::vector<Mat2R> integrate_curve(const Mat2R& start, double x0, double h, int n,
                                   const ConformalMap1D::Profile& th, const ConformalMap1D::Profile& om,
                                   double drift_tol) {
  std::vector<Mat2R> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(start);
  Mat2R B = start;
  auto rhs = [&](const Mat2R& X, double x) { return X * generator(th(x), om(x)); };
  for (int k = 1; k < n; ++k) {
    const double x = x0 + (k - 1) * h;
    const Mat2R k1 = rhs(B, x);
    const Mat2R k2 = rhs(B + (0.5 * h) * k1, x + 0.5 * h);
    const Mat2R k3 = rhs(B + (0.5 * h) * k2, x + 0.5 * h);
    const Mat2R k4 = rhs(B + h * k3, x + h);
    B = B + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double det = B.det();
    if (!(det > 0.0)) throw Error(ErrorCode::DetDrift, "frame determinant collapsed to " + std::to_string(det));
    const double root = std::sqrt(det);
    if (std::fabs(root - 1.0) > drift_tol)
      throw Error(ErrorCode::DetDrift, "determinant correction " + std::to_string(root - 1.0) + " exceeds tolerance");
    B = (1.0 / root) * B;
    out.push_back(B);
  }
  return out;
}

// Values of a 1-form and its hat on d_s and d_t: f da(d_s) = f e+, f da(d_t) = f e-,
// hat(f da)(d_s) = hat(f) e-, hat(f da)(d_t) = hat(f) e+.
struct OnVectors {
  LorentzNum s, t;
};

OnVectors on_vectors(const LorentzNum& f) { return {f * kEPlus, f * kEMinus}; }
OnVectors hat_on_vectors(const LorentzNum& f) { return {hat(f) * kEMinus, hat(f) * kEPlus}; }

Mat2A off_diag(const LorentzNum& upper, const LorentzNum& lower) { return {LorentzNum{}, upper, lower, LorentzNum{}}; }

constexpr Mat2A kDiagMinus{LorentzNum{-1.0}, LorentzNum{}, LorentzNum{}, LorentzNum{1.0}};

Immersion22 push(const Mat2AField& B, const Mat2A& middle) {
  Immersion22 F{VecField(B.spec), Vec22{}};
  for (std::size_t i = 0; i < B.values.size(); ++i) {
    const Mat2A& b = B.values[i];
    F.points.values[i] = herm_to_vec(b * middle * b.star());
  }
  F.basepoint = F.points.values.front();
  return F;
}

}  // namespace

Mat2AField integrate_frame(const ConformalOneForm& theta, const ConformalOneForm& omega, const Mat2A& B0,
                           const GridSpec& spec, double drift_tol) {
  spec.validate();
  const LorentzNum det = B0.det();
  if (split_abs(det - LorentzNum{1.0}) > 1e-12)
    throw Error(ErrorCode::NotUnitDeterminant, "initial frame does not have unit determinant");
  const Mat2Split b0 = to_split(B0);
  const auto B1 = integrate_curve(
      b0.plus, spec.s0, spec.hs(), spec.ns, [&](double s) { return theta.f.plus(s); },
      [&](double s) { return omega.f.plus(s); }, drift_tol);
  const auto B2 = integrate_curve(
      b0.minus, spec.t0, spec.ht(), spec.nt, [&](double t) { return theta.f.minus(t); },
      [&](double t) { return omega.f.minus(t); }, drift_tol);
  Mat2AField B(spec);
  for (int i = 0; i < spec.ns; ++i)
    for (int j = 0; j < spec.nt; ++j)
      B(i, j) = from_split(B1[static_cast<std::size_t>(i)], B2[static_cast<std::size_t>(j)]);
  return B;
}

double frame_equation_residual(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega) {
  const GridSpec& g = B.spec;
  g.validate();
  double r = 0.0;
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Mat2Split ds = to_split(diff_s(B, i, j));
      const Mat2Split dt = to_split(diff_t(B, i, j));
      const Mat2A da = from_split(ds.plus, dt.minus);
      const Mat2A dahat = from_split(dt.plus, ds.minus);
      const Mat2A inv = inverse(B(i, j));
      const Mat2A expected = off_diag(theta.f(g.s(i), g.t(j)), omega.f(g.s(i), g.t(j)));
      r = std::max({r, max_abs_diff(inv * da, expected), max_abs_diff(inv * dahat, Mat2A::zero())});
    }
  return r;
}

double flat_degeneracy(const ConformalOneForm& theta, const ConformalOneForm& omega, const GridSpec& spec, double k) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spec.ns; ++i)
    for (int j = 0; j < spec.nt; ++j)
      m = std::min(m, std::fabs(sqnorm(theta.f(spec.s(i), spec.t(j))) - k * sqnorm(omega.f(spec.s(i), spec.t(j)))));
  return m;
}

Immersion22 ads_immersion(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                          double threshold) {
  B.spec.validate();
  if (flat_degeneracy(theta, omega, B.spec, 1.0) <= threshold)
    throw Error(ErrorCode::DegenerateImmersion, "|theta|^2 = |omega|^2 somewhere; B B* is not an immersion");
  return push(B, Mat2A::identity());
}

Immersion22 s12_immersion(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                          double threshold) {
  B.spec.validate();
  if (flat_degeneracy(theta, omega, B.spec, -1.0) <= threshold)
    throw Error(ErrorCode::DegenerateImmersion, "|theta|^2 = -|omega|^2 somewhere");
  if (flat_degeneracy(theta, omega, B.spec, 1.0) <= threshold)
    throw Error(ErrorCode::DegenerateImmersion, "|theta|^2 = |omega|^2 somewhere; the induced metric degenerates");
  return push(B, kDiagMinus);
}

FlatMetricShape flat_metric_shape(const Mat2AField& B, const ConformalOneForm& theta, const ConformalOneForm& omega,
                                  FlatTarget target) {
  const GridSpec& g = B.spec;
  g.validate();
  FlatMetricShape out{ScalarField(g), ScalarField(g), ScalarField(g), Mat2AField(g), Mat2AField(g), Mat2AField(g), 0.0};
  const bool ads = target == FlatTarget::AntiDeSitter;
  const double k = ads ? 1.0 : -1.0;
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const LorentzNum ft = theta.f(g.s(i), g.t(j));
      const LorentzNum fo = omega.f(g.s(i), g.t(j));
      const OnVectors th = on_vectors(ft), om = on_vectors(fo);
      const OnVectors thh = hat_on_vectors(ft), omh = hat_on_vectors(fo);

      // dF = B ((0, theta + k omegahat), (k omega + thetahat, 0)) B*.
      const LorentzNum up_s = th.s + k * omh.s, up_t = th.t + k * omh.t;
      const LorentzNum lo_s = k * om.s + thh.s, lo_t = k * om.t + thh.t;
      const LorentzNum gss = up_s * lo_s;
      const LorentzNum gtt = up_t * lo_t;
      const LorentzNum gst = 0.5 * (up_s * lo_t + up_t * lo_s);
      out.g_ss(i, j) = gss.u;
      out.g_tt(i, j) = gtt.u;
      out.g_st(i, j) = gst.u;
      out.imaginary_defect = std::max({out.imaginary_defect, std::fabs(gss.v), std::fabs(gtt.v), std::fabs(gst.v)});

      // dN uses the complementary sign.
      const Mat2A& b = B(i, j);
      const Mat2A bs = b.star();
      out.normal(i, j) = ads ? b * kDiagMinus * bs : b * bs;
      out.shape_s(i, j) = b * off_diag(th.s - k * omh.s, thh.s - k * om.s) * bs;
      out.shape_t(i, j) = b * off_diag(th.t - k * omh.t, thh.t - k * om.t) * bs;
    }
  return out;
}

CurvePair product_curves_decompose(const Mat2AField& B, double tol) {
  const GridSpec& g = B.spec;
  g.validate();
  CurvePair c{g, {}, {}, 0.0};
  for (int i = 0; i < g.ns; ++i) c.B1.push_back(to_split(B(i, 0)).plus);
  for (int j = 0; j < g.nt; ++j) c.B2.push_back(to_split(B(0, j)).minus);

  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Mat2Split sp = to_split(B(i, j));
      if (max_abs_diff(sp.plus, c.B1[static_cast<std::size_t>(i)]) > tol ||
          max_abs_diff(sp.minus, c.B2[static_cast<std::size_t>(j)]) > tol)
        throw Error(ErrorCode::NotSplit, "frame is not of the form e+ B1(s) + e- B2(t) at node (" +
                                             std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  for (const auto* curve : {&c.B1, &c.B2})
    for (const Mat2R& m : *curve)
      if (std::fabs(m.det() - 1.0) > tol)
        throw Error(ErrorCode::NotUnitDeterminant, "curve leaves Sl_2(R): det = " + std::to_string(m.det()));

  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) {
      const Mat2A r = from_split(c.B1[static_cast<std::size_t>(i)], c.B2[static_cast<std::size_t>(j)]);
      c.reconstruction_error = std::max(c.reconstruction_error, max_abs_diff(r, B(i, j)));
    }
  return c;
}

Mat2R sl2r_point(const CurvePair& c, int i, int j) {
  return c.B1[static_cast<std::size_t>(i)] * c.B2[static_cast<std::size_t>(j)].transpose();
}

}  // namespace lsurf
