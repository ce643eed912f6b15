#pragma once

// Real weight factors a_j minimizing the X variance of
// N sum_j a_j |xi(r_j)> at fixed squeezing parameters r_j.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace squeezelab {

struct OptimizationProblem {
  std::vector<double> r_list;
  /// Index of the weight pinned to 1; defaults to the last component.
  std::optional<std::size_t> gauge;
  int restarts = 32;
  std::uint64_t seed = 0;

  std::size_t gauge_index() const {
    return gauge.value_or(r_list.empty() ? 0 : r_list.size() - 1);
  }
  /// Throws ErrorKind::invalid_argument on an empty list, r outside
  /// [0, 3], a bad gauge index or restarts < 1.
  void validate() const;
};

enum class Method { simplex, eigen };
std::string_view method_name(Method method) noexcept;

struct OptimizationResult {
  std::vector<double> weights;  // gauge weight is +1
  double variance;
  Method method;
  int iterations;
  bool converged;
};

/// X variance of the normalized superposition with these weights.
double objective(const OptimizationProblem& problem,
                 const std::vector<double>& weights);

/// Multi-start Nelder-Mead over the free weights. Restarts run in parallel
/// and the best result wins, ties going to the lowest restart index.
OptimizationResult minimize_simplex(const OptimizationProblem& problem);

/// Smallest generalized eigenvalue of (A, S) with A_ij = <xi_i|X^2|xi_j> and
/// S_ij = <xi_i|xi_j>: the global minimum of the Rayleigh quotient.
/// Throws ErrorKind::ill_conditioned_overlap when S is numerically singular.
OptimizationResult minimize_eigen(const OptimizationProblem& problem);

struct Table1Row {
  int index;  // 1-based
  std::vector<double> r_list;
  double published_variance;
  std::vector<double> published_weights;
  double objective_at_published;
  OptimizationResult simplex;
  OptimizationResult eigen;
  bool pass;
};

/// Tolerance on variances when comparing with the published table.
inline constexpr double kTable1Tolerance = 5e-4;

/// The four published rows (squeezing parameters, weights, variance).
std::vector<Table1Row> published_table1();

/// Runs both methods on every published row. A row passes when the
/// objective at the published weights and the eigen minimum both sit
/// within kTable1Tolerance of (respectively below) the published variance.
std::vector<Table1Row> reproduce_table1(std::uint64_t seed = 0,
                                        int restarts = 32);

}  // namespace squeezelab
