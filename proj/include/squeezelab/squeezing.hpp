#pragma once

#include <vector>

#include "squeezelab/config.hpp"
#include "squeezelab/fock.hpp"

namespace squeezelab {

/// Vacuum variance of any quadrature, X = (a + a^dag)/2.
inline constexpr double kVacuumVariance = 0.25;
/// Slack used by every strict "below the vacuum benchmark" decision.
inline constexpr double kDecisionSlack = 1e-9;

struct QuadratureReport {
  double var_x;
  double var_p;
  double principal_variance;  // minimum over the quadrature angle
  double principal_angle;     // minimizing angle in [0, pi)
  bool squeezed;
};

struct HigherOrderReport {
  int order;  // 2n
  double moment;  // <(Delta X_phi)^{2n}>
  double vacuum_benchmark;  // (2n-1)!!/4^n
  bool squeezed;
};

struct HilleryReport {
  double var_y1;
  double var_y2;
  double bound;  // <a^dag a> + 1/2
  bool squeezed;
};

/// Variance of X_phi = (a e^{-i phi} + a^dag e^{i phi})/2.
double quadrature_variance(const FockState& state, double phi,
                           const Tolerances& tol = default_tolerances());

QuadratureReport principal_report(const FockState& state,
                                  const Tolerances& tol = default_tolerances());

/// (2n-1)!!/4^n.
double vacuum_benchmark(int order);

/// Hong-Mandel 2n-th order moment of X_phi about its mean, 2 <= n <= 4.
/// Evaluated by applying (X_phi - <X_phi>) as a banded operator.
HigherOrderReport hong_mandel_moment(const FockState& state, int n, double phi,
                                     const Tolerances& tol = default_tolerances());

/// Amplitude-squared squeezing with Y1 = (a^2 + a^dag^2)/2,
/// Y2 = (a^2 - a^dag^2)/(2i) and [Y1, Y2] = i(2 a^dag a + 1).
HilleryReport hillery_report(const FockState& state,
                             const Tolerances& tol = default_tolerances());

// Two-mode effective quadratures
//   X_phi = (a e^{-i phi} + a^dag e^{i phi} + b e^{-i phi} + b^dag e^{i phi}) / 2^{3/2};
// X1 is phi = 0 and X2 is phi = pi/2.

enum class TwoModeQuadrature { x1, x2 };

double two_mode_variance(const TwoModeFockState& state, TwoModeQuadrature which,
                         const Tolerances& tol = default_tolerances());
double two_mode_quadrature_variance(const TwoModeFockState& state, double phi,
                                    const Tolerances& tol = default_tolerances());
/// var_x/var_p hold Var(X1)/Var(X2); the principal fields minimize
/// two_mode_quadrature_variance over phi in closed form.
QuadratureReport two_mode_principal_report(const TwoModeFockState& state,
                                           const Tolerances& tol = default_tolerances());
HigherOrderReport two_mode_hong_mandel_moment(
    const TwoModeFockState& state, int n, double phi,
    const Tolerances& tol = default_tolerances());

// Series evaluations for squeezed-vacuum superpositions (real parameters).
// Each sums until a term drops below 1e-16 and throws
// ErrorKind::non_convergence after 1e5 terms.

/// Quadrature variance of the normalized first-kind superposition of l
/// squeezed vacua, l >= 2.
double first_kind_variance_oracle(double r, int l);

/// X variance of N sum_j a_j |xi(r_j)> with the overlap-kernel normalization.
double generalized_variance_oracle(const std::vector<double>& r_list,
                                   const std::vector<double>& a_list);

/// Var(X1) = Var(X2) of the normalized |xi>_2 + |-xi>_2.
double two_mode_pair_variance_oracle(double r);

}  // namespace squeezelab
