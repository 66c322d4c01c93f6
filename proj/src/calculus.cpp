#include "lsurf/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "lsurf/error.hpp"

namespace lsurf {

GridField d_a(const GridField& f) {
  f.spec.validate();
  GridField out(f.spec);
  for (int i = 0; i < f.spec.ns; ++i)
    for (int j = 0; j < f.spec.nt; ++j)
      out(i, j) = from_split(to_split(diff_s(f, i, j)).plus, to_split(diff_t(f, i, j)).minus);
  return out;
}

GridField d_ahat(const GridField& f) {
  f.spec.validate();
  GridField out(f.spec);
  for (int i = 0; i < f.spec.ns; ++i)
    for (int j = 0; j < f.spec.nt; ++j)
      out(i, j) = from_split(to_split(diff_t(f, i, j)).plus, to_split(diff_s(f, i, j)).minus);
  return out;
}

ConformalityReport is_conformal_samples(const GridField& f, double tol) {
  const GridField r = d_ahat(f);
  ConformalityReport report;
  report.tolerance = tol;
  for (const auto& x : r.values) report.max_residual = std::max(report.max_residual, split_abs(x));
  report.conformal = report.max_residual <= tol;
  return report;
}

ConformalMap1D ConformalMap1D::constant(const LorentzNum& c) {
  const SplitRep s = to_split(c);
  return {[v = s.plus](double) { return v; }, [v = s.minus](double) { return v; }};
}

ConformalMap1D ConformalMap1D::from_function(std::function<LorentzNum(LorentzNum)> fn, double s_ref,
                                             double t_ref) {
  auto shared = std::make_shared<std::function<LorentzNum(LorentzNum)>>(std::move(fn));
  return {[shared, t_ref](double s) { return to_split((*shared)(from_split(s, t_ref))).plus; },
          [shared, s_ref](double t) { return to_split((*shared)(from_split(s_ref, t))).minus; }};
}

namespace {

// Cubic Lagrange interpolation on a uniform 1-D lattice, using the four
// nearest nodes (shifted inward at the ends).
struct UniformProfile {
  double x0;
  double h;
  std::vector<double> y;

  double operator()(double x) const {
    const int n = static_cast<int>(y.size());
    const double r = (x - x0) / h;
    int k = static_cast<int>(std::floor(r)) - 1;
    k = std::clamp(k, 0, n - 4);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
      double w = 1.0;
      for (int b = 0; b < 4; ++b)
        if (b != a) w *= (r - (k + b)) / static_cast<double>(a - b);
      acc += w * y[static_cast<std::size_t>(k + a)];
    }
    return acc;
  }
};

}  // namespace

ConformalMap1D ConformalMap1D::from_samples(const GridSpec& spec, std::vector<double> plus,
                                            std::vector<double> minus) {
  spec.validate();
  if (plus.size() != static_cast<std::size_t>(spec.ns) || minus.size() != static_cast<std::size_t>(spec.nt))
    throw Error(ErrorCode::InvalidArgument, "conformal profile lengths do not match the grid");
  if (spec.ns < 4 || spec.nt < 4)
    throw Error(ErrorCode::GridTooSmall, "sampled conformal profiles need at least 4 nodes per axis");
  return {UniformProfile{spec.s0, spec.hs(), std::move(plus)}, UniformProfile{spec.t0, spec.ht(), std::move(minus)}};
}

GridField ConformalMap1D::sample(const GridSpec& spec) const {
  GridField f(spec);
  std::vector<double> p(static_cast<std::size_t>(spec.ns));
  std::vector<double> m(static_cast<std::size_t>(spec.nt));
  for (int i = 0; i < spec.ns; ++i) p[static_cast<std::size_t>(i)] = plus_(spec.s(i));
  for (int j = 0; j < spec.nt; ++j) m[static_cast<std::size_t>(j)] = minus_(spec.t(j));
  for (int i = 0; i < spec.ns; ++i)
    for (int j = 0; j < spec.nt; ++j)
      f(i, j) = from_split(p[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]);
  return f;
}

}  // namespace lsurf
