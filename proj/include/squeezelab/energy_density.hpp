#pragma once

// Vacuum-subtracted energy density <:T00:> of a single massless scalar
// field mode as a function of the plane-wave phase theta = k.x - omega t:
//   <:T00:> = 2 K00 (<a^dag a> - Re(<a^2> e^{2 i theta})).

#include <vector>

#include "squeezelab/config.hpp"
#include "squeezelab/fock.hpp"

namespace squeezelab {

struct EnergyDensityConfig {
  /// K00 = k0^2 / (2 omega L^3) in units c = hbar = 1.
  double k00 = 1.0;
  std::vector<double> theta_grid;

  /// n equally spaced phases 2 pi k / n, k = 0..n-1.
  static EnergyDensityConfig uniform(std::size_t n, double k00 = 1.0);

  /// Throws ErrorKind::invalid_argument unless k00 > 0 and the grid is
  /// strictly increasing inside [0, 2 pi].
  void validate() const;
};

struct EnergyDensityProfile {
  std::vector<double> values;
  double min_value;  // analytic minimum over theta
  double min_theta;  // analytic minimizer in [0, pi)
  bool ever_negative;
};

double t00(const FockState& state, double theta, const EnergyDensityConfig& cfg,
           const Tolerances& tol = default_tolerances());

EnergyDensityProfile t00_profile(const FockState& state,
                                 const EnergyDensityConfig& cfg,
                                 const Tolerances& tol = default_tolerances());

enum class ClosedFormFamily { coherent, even_cat, svs, first_kind_svs_l2 };

/// Closed forms in units of K00; `param` is the real alpha or r.
double closed_form_t00(ClosedFormFamily family, double param, double theta);

struct NegativityReport {
  bool squeezed;
  bool ever_negative;
  bool consistent;  // squeezed == ever_negative
  bool zero_mean;   // |<a>| < 1e-10; consistency is guaranteed only then
};

NegativityReport negativity_report(const FockState& state,
                                   const Tolerances& tol = default_tolerances());

}  // namespace squeezelab
