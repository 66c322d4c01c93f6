#pragma once

#include <functional>
#include <vector>

#include "lsurf/grid.hpp"

namespace lsurf {

/// d_a = e+ d_s + e- d_t on sampled fields.
GridField d_a(const GridField& f);
/// d_ahat = e+ d_t + e- d_s on sampled fields.
GridField d_ahat(const GridField& f);

struct ConformalityReport {
  double max_residual = 0.0;  ///< sup of the split components of d_ahat f
  double tolerance = 0.0;
  bool conformal = false;
};

/// Conformal maps satisfy d_v f = sigma d_u f, i.e. d_ahat f = 0.
ConformalityReport is_conformal_samples(const GridField& f, double tol);

/// A conformal map e+ f+(s) + e- f-(t): two real functions of one variable.
class ConformalMap1D {
 public:
  using Profile = std::function<double(double)>;

  ConformalMap1D() = default;
  ConformalMap1D(Profile plus, Profile minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  /// Constant map.
  static ConformalMap1D constant(const LorentzNum& c);
  /// Restricts an A-valued function of a to its conformal part: plus taken
  /// along t = t_ref, minus along s = s_ref. Exact when fn is conformal.
  static ConformalMap1D from_function(std::function<LorentzNum(LorentzNum)> fn, double s_ref = 0.0,
                                      double t_ref = 0.0);
  /// Sampled profiles on the axes of `spec` (plus has ns entries, minus nt),
  /// interpolated with local cubic Lagrange polynomials between nodes.
  static ConformalMap1D from_samples(const GridSpec& spec, std::vector<double> plus, std::vector<double> minus);

  double plus(double s) const { return plus_(s); }
  double minus(double t) const { return minus_(t); }
  LorentzNum operator()(double s, double t) const { return from_split(plus_(s), minus_(t)); }

  GridField sample(const GridSpec& spec) const;

 private:
  Profile plus_;
  Profile minus_;
};

}  // namespace lsurf
