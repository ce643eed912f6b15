#pragma once

#include <functional>
#include <vector>

namespace squeezelab {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double diameter_tol = 1e-10;  // max vertex distance from the best vertex
  double spread_tol = 1e-12;    // f(worst) - f(best)
  int max_iterations = 20000;
  // Reflection, expansion, contraction, shrink.
  double alpha = 1.0;
  double gamma = 2.0;
  double rho = 0.5;
  double sigma = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;
};

/// Downhill simplex minimization of f starting from the axis-aligned
/// simplex {x0, x0 + step e_i}. Non-finite objective values are treated as
/// +infinity.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0,
                             const NelderMeadOptions& opts = {});

}  // namespace squeezelab
