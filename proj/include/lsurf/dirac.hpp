#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lsurf/calculus.hpp"
#include "lsurf/grid.hpp"

namespace lsurf {

/// Spinor components of a Lorentz surface together with the real potentials
/// p and q of the Dirac system  d_a phi = -p psi,  d_ahat psi = -q phi.
struct DiracData {
  GridField phi1, phi2, psi1, psi2;
  ScalarField p, q;

  const GridSpec& spec() const { return phi1.spec; }
};

/// Goursat data for one index alpha. In null coordinates the system splits into
///   plus:   d_s phi+ = -p psi+,  d_t psi+ = -q phi+
///   minus:  d_t phi- = -p psi-,  d_s psi- = -q phi-
/// so phi+ is prescribed on s = s0 (a function of t), psi+ on t = t0,
/// phi- on t = t0 and psi- on s = s0.
struct GoursatProfiles {
  std::vector<double> phi_plus;   ///< along s = s0, length nt
  std::vector<double> psi_plus;   ///< along t = t0, length ns
  std::vector<double> phi_minus;  ///< along t = t0, length ns
  std::vector<double> psi_minus;  ///< along s = s0, length nt
};

struct CharacteristicData {
  GridSpec spec;
  std::array<GoursatProfiles, 2> alpha;  ///< index 0 is alpha = 1
};

using SpinorFn = std::function<LorentzNum(LorentzNum)>;

/// Restricts closed-form phi_alpha, psi_alpha to the characteristic lines.
CharacteristicData characteristic_data(const GridSpec& spec, const SpinorFn& phi1, const SpinorFn& phi2,
                                       const SpinorFn& psi1, const SpinorFn& psi2);

/// Throws InconsistentInitialData on wrong profile lengths or non-finite samples.
void validate(const CharacteristicData& init);

/// Second-order box scheme along the characteristics.
DiracData solve_goursat(const ScalarField& p, const ScalarField& q, const CharacteristicData& init);

struct DiracResidual {
  std::array<GridField, 2> r_phi;
  std::array<GridField, 2> r_psi;
  double max_norm = 0.0;
};

DiracResidual dirac_residual(const DiracData& d);

/// psi2 phi1 - psi1 phi2, whose squared norm is the conformal factor.
GridField spinor_wedge(const DiracData& d);

struct Nondegeneracy {
  double min_abs_sqnorm = 0.0;
  double threshold = 0.0;
  bool ok = false;
};

Nondegeneracy nondegeneracy(const DiracData& d, double threshold = 1e-8);

/// Default residual pass threshold 10 h^2.
double default_residual_tolerance(const GridSpec& spec);

}  // namespace lsurf
