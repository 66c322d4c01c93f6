#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "lsurf/clifford.hpp"
#include "lsurf/error.hpp"
#include "lsurf/lorentz.hpp"

namespace lsurf::test {

inline double rel_err(const LorentzNum& got, const LorentzNum& want) {
  const double scale = std::max({1.0, std::fabs(want.u), std::fabs(want.v)});
  return std::max(std::fabs(got.u - want.u), std::fabs(got.v - want.v)) / scale;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double real(double lo = -2.0, double hi = 2.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  LorentzNum lorentz(double r = 2.0) { return {real(-r, r), real(-r, r)}; }
  Vec22 vec(double r = 2.0) { return {real(-r, r), real(-r, r), real(-r, r), real(-r, r)}; }
  H0Elem h0(double r = 1.0) { return {{lorentz(r), lorentz(r), lorentz(r), lorentz(r)}}; }
  H1Elem h1(double r = 1.0) { return {{lorentz(r), lorentz(r), lorentz(r), lorentz(r)}}; }

  /// Unit spinor exp(alpha iI) exp(beta J) exp(gamma iK) with A-valued angles.
  H0Elem unit_spinor() {
    const LorentzNum alpha = lorentz(0.8), beta = lorentz(1.5), gam = lorentz(0.8);
    const Hyperbolic ha = hyperbolic(alpha), hg = hyperbolic(gam);
    const LorentzNum cb = apply_split(beta, [](double x) { return std::cos(x); });
    const LorentzNum sb = apply_split(beta, [](double x) { return std::sin(x); });
    const H0Elem a{{ha.cosh, ha.sinh, 0.0, 0.0}};
    const H0Elem b{{cb, 0.0, sb, 0.0}};
    const H0Elem c{{hg.cosh, 0.0, 0.0, hg.sinh}};
    return a * b * c;
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const H0Elem& a, const H0Elem& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max({m, std::fabs(a.p[k].u - b.p[k].u), std::fabs(a.p[k].v - b.p[k].v)});
  return m;
}

inline double max_abs_diff(const Vec22& a, const Vec22& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

/// Runs fn and reports the code of the lsurf::Error it throws.
template <class Fn>
bool throws_code(Fn&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

/// Slope of log(err) against log(h) between two refinements.
inline double observed_order(double err_coarse, double err_fine, double ratio = 2.0) {
  return std::log(err_coarse / err_fine) / std::log(ratio);
}

}  // namespace lsurf::test
