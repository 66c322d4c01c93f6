#pragma once

#include <algorithm>
#include <cmath>

#include "lsurf/clifford.hpp"
#include "support.hpp"

// Randomized identity checks; each returns the worst error over `n` samples.

namespace lsurf::test {

namespace detail {

inline double rel(const LorentzNum& got, const LorentzNum& want, double scale) {
  return std::max(std::fabs(got.u - want.u), std::fabs(got.v - want.v)) / std::max(1.0, scale);
}

inline double mag(const LorentzNum& a) { return std::max(std::fabs(a.u), std::fabs(a.v)); }

inline double max_abs(const Mat2A& m) { return std::max({mag(m.a), mag(m.b), mag(m.c), mag(m.d)}); }

}  // namespace detail

/// Ring axioms, hat automorphism, sqnorm multiplicativity and the split isomorphism.
inline double algebra_identity_error(Sampler& rng, int n) {
  using detail::mag;
  using detail::rel;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const LorentzNum a = rng.lorentz(), b = rng.lorentz(), c = rng.lorentz();
    const double scale = mag(a) * mag(b) * mag(c) + mag(a) * (mag(b) + mag(c));
    worst = std::max(worst, rel((a * b) * c, a * (b * c), scale));
    worst = std::max(worst, rel(a * b, b * a, scale));
    worst = std::max(worst, rel(a * (b + c), a * b + a * c, scale));
    worst = std::max(worst, rel(a * LorentzNum{1.0}, a, scale));
    worst = std::max(worst, rel(a + (-a), LorentzNum{}, scale));
    worst = std::max(worst, rel(hat(a * b), hat(a) * hat(b), scale));
    worst = std::max(worst, rel(hat(a + b), hat(a) + hat(b), scale));
    worst = std::max(worst, rel(hat(hat(a)), a, scale));
    const double na = sqnorm(a), nb = sqnorm(b);
    worst = std::max(worst, std::fabs(sqnorm(a * b) - na * nb) / std::max(1.0, std::fabs(na * nb) + scale * scale));
    const SplitRep sa = to_split(a), sb = to_split(b), sab = to_split(a * b);
    worst = std::max(worst, std::fabs(sab.plus - sa.plus * sb.plus) / std::max(1.0, scale));
    worst = std::max(worst, std::fabs(sab.minus - sa.minus * sb.minus) / std::max(1.0, scale));
    worst = std::max(worst, rel(from_split(to_split(a)), a, mag(a)));
    if (const auto inv = try_inverse(a); inv && std::fabs(na) > 1e-3)
      worst = std::max(worst, rel(a * *inv, LorentzNum{1.0}, mag(a) * mag(*inv)));
  }
  return worst;
}

/// gamma-block square equals -<x, x> Id.
inline double clifford_relation_error(Sampler& rng, int n) {
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const Vec22 x = rng.vec();
    const double q = scalar(x, x);
    const double scale = std::max(1.0, x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3);
    const CliffordSquare sq = clifford_square(x);
    const H0Elem want{{LorentzNum{-q}, 0.0, 0.0, 0.0}};
    worst = std::max(worst, max_abs_diff(sq.upper, want) / scale);
    worst = std::max(worst, max_abs_diff(sq.lower, want) / scale);
  }
  return worst;
}

struct DoubleCoverErrors {
  double metric = 0.0;    ///< M^t eta M - eta
  double homomorphism = 0.0;
  double sign = 0.0;      ///< Phi(-p) - Phi(p)
  double unit = 0.0;      ///< |H(p, p) - 1| of the sampled spinors
};

inline DoubleCoverErrors double_cover_errors(Sampler& rng, int n) {
  DoubleCoverErrors e;
  const double eta[4] = {-1.0, 1.0, -1.0, 1.0};
  for (int k = 0; k < n; ++k) {
    const H0Elem p1 = rng.unit_spinor(), p2 = rng.unit_spinor();
    e.unit = std::max(e.unit, detail::rel(bilinear_H(p1, p1), LorentzNum{1.0}, 1.0));
    const Mat4 M1 = spin_to_so(p1), M2 = spin_to_so(p2);
    double scale = 1.0;
    for (const auto& row : M1.m)
      for (double x : row) scale = std::max(scale, std::fabs(x));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) {
        double g = 0.0;
        for (std::size_t l = 0; l < 4; ++l) g += M1.m[l][r] * eta[l] * M1.m[l][c];
        e.metric = std::max(e.metric, std::fabs(g - (r == c ? eta[r] : 0.0)) / (scale * scale));
      }
    e.homomorphism = std::max(e.homomorphism, max_abs_diff(spin_to_so(p1 * p2), M1 * M2) / (scale * scale));
    e.sign = std::max(e.sign, max_abs_diff(spin_to_so(-p1), M1) / scale);
  }
  return e;
}

/// H(p,p) = det A0(p), H(q,q) = -det A1(q), A1(sigma i1 p p') = -A0(p) A0(p'),
/// A1(p I p') = A0(p) diag(-1, 1) A0(p').
inline double isomorphism_error(Sampler& rng, int n) {
  using detail::max_abs;
  using detail::rel;
  const Mat2A diag{LorentzNum{-1.0}, LorentzNum{}, LorentzNum{}, LorentzNum{1.0}};
  const H1Elem sigma_i1 = kSigma * h1_basis(0);
  const H1Elem I = h1_basis(1);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const H0Elem p = rng.h0(), pp = rng.h0();
    const H1Elem q = rng.h1();
    const Mat2A Ap = A0(p), App = A0(pp);
    const double sp = max_abs(Ap), spp = max_abs(App);
    worst = std::max(worst, rel(bilinear_H(p, p), Ap.det(), 2.0 * sp * sp));
    worst = std::max(worst, rel(bilinear_H(q, q), -A1(q).det(), 2.0 * std::pow(max_abs(A1(q)), 2)));
    const double prod = 2.0 * sp * spp;
    worst = std::max(worst, max_abs_diff(A1(sigma_i1 * (p * pp)), LorentzNum{-1.0} * (Ap * App)) / std::max(1.0, prod));
    worst = std::max(worst, max_abs_diff(A1(p * I * pp), Ap * diag * App) / std::max(1.0, prod));
  }
  return worst;
}

}  // namespace lsurf::test
