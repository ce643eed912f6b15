#include "squeezelab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "squeezelab/error.hpp"
#include "squeezelab/nelder_mead.hpp"
#include "squeezelab/squeezing.hpp"
#include "squeezelab/states.hpp"

namespace squeezelab {

namespace {

constexpr double kOverlapFloor = 1e-12;
constexpr double kInitialSpread = 3.0;

// Tail tolerance for the component basis. Combinations may cancel by many
// orders of magnitude, so the components carry far less truncation error
// than a standalone state needs.
constexpr double kBasisTailTol = 1e-24;

// Component squeezed vacua on a common cutoff with their overlap matrix
// S_ij = <xi_i|xi_j> and second-moment matrix A_ij = <X xi_i|X xi_j>, built
// once per problem. Real squeezed vacua have <X> = 0, so the X variance of a
// combination w is the Rayleigh quotient w.A.w / w.S.w.
class ComponentBasis {
 public:
  explicit ComponentBasis(const std::vector<double>& r_list) {
    BuildOptions opts;
    opts.tol.tail_tol = kBasisTailTol;
    std::size_t cutoff = 0;
    std::vector<FockState> states;
    for (double r : r_list) {
      states.push_back(squeezed_vacuum(SqueezeParam(r), opts));
      cutoff = std::max(cutoff, states.back().cutoff());
    }
    const auto l = static_cast<Eigen::Index>(r_list.size());
    Eigen::MatrixXcd v(static_cast<Eigen::Index>(cutoff + 1), l);
    Eigen::MatrixXcd xv(v.rows() + 1, l);
    for (Eigen::Index j = 0; j < l; ++j) {
      const FockState& component = states[static_cast<std::size_t>(j)];
      v.col(j) = component.resized(cutoff).amplitudes();
      const auto down = annihilate(component).resized(cutoff + 1);
      xv.col(j) = 0.5 * (down.amplitudes() + create(component).resized(cutoff + 1).amplitudes());
    }
    overlap_ = (v.adjoint() * v).real();
    second_ = (xv.adjoint() * xv).real();
  }

  const Eigen::MatrixXd& overlap() const { return overlap_; }
  const Eigen::MatrixXd& second() const { return second_; }

  // +inf when the combination is numerically zero.
  double variance(const std::vector<double>& weights) const {
    const Eigen::Map<const Eigen::VectorXd> w(weights.data(),
                                              static_cast<Eigen::Index>(weights.size()));
    const double norm2 = w.dot(overlap_ * w);
    const double scale = w.cwiseAbs().sum();
    if (!(norm2 >= 1e-20 * std::max(1.0, scale * scale))) {
      return std::numeric_limits<double>::infinity();
    }
    return w.dot(second_ * w) / norm2;
  }

 private:
  Eigen::MatrixXd overlap_;
  Eigen::MatrixXd second_;
};

std::vector<double> with_gauge(const std::vector<double>& free, std::size_t gauge) {
  std::vector<double> weights;
  weights.reserve(free.size() + 1);
  for (std::size_t i = 0, k = 0; i <= free.size(); ++i) {
    weights.push_back(i == gauge ? 1.0 : free[k++]);
  }
  return weights;
}

}  // namespace

void OptimizationProblem::validate() const {
  if (r_list.empty()) {
    throw Error(ErrorKind::invalid_argument, "squeezing-parameter list is empty");
  }
  for (double r : r_list) {
    if (!(r >= 0.0 && r <= 3.0)) {
      throw Error(ErrorKind::invalid_argument,
                  "squeezing parameter " + std::to_string(r) + " outside [0, 3]");
    }
  }
  if (gauge_index() >= r_list.size()) {
    throw Error(ErrorKind::invalid_argument, "gauge index out of range");
  }
  if (restarts < 1) throw Error(ErrorKind::invalid_argument, "restarts must be >= 1");
}

std::string_view method_name(Method method) noexcept {
  return method == Method::simplex ? "simplex" : "eigen";
}

double objective(const OptimizationProblem& problem, const std::vector<double>& weights) {
  problem.validate();
  if (weights.size() != problem.r_list.size()) {
    throw Error(ErrorKind::invalid_argument, "weight count does not match components");
  }
  SuperpositionSpec spec{Family::squeezed_vacuum, {}, false};
  for (std::size_t j = 0; j < weights.size(); ++j) {
    spec.components.push_back({Complex(weights[j], 0.0), SqueezeParam(problem.r_list[j])});
  }
  return quadrature_variance(generalized_superposition(spec), 0.0);
}

OptimizationResult minimize_simplex(const OptimizationProblem& problem) {
  problem.validate();
  const ComponentBasis basis(problem.r_list);
  const std::size_t gauge = problem.gauge_index();
  const std::size_t free_dims = problem.r_list.size() - 1;
  if (free_dims == 0) {
    return {{1.0}, basis.variance({1.0}), Method::simplex, 0, true};
  }

  std::mt19937_64 engine(problem.seed);
  std::uniform_real_distribution<double> uniform(-kInitialSpread, kInitialSpread);
  std::vector<std::vector<double>> starts(static_cast<std::size_t>(problem.restarts));
  for (auto& start : starts) {
    start.resize(free_dims);
    for (auto& x : start) x = uniform(engine);
  }

  std::vector<NelderMeadResult> results(starts.size());
  auto run = [&](std::size_t i) {
    results[i] = nelder_mead(
        [&](const std::vector<double>& free) { return basis.variance(with_gauge(free, gauge)); },
        starts[i]);
  };
  const std::size_t workers = std::min<std::size_t>(worker_count(), starts.size());
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < starts.size(); i += workers) run(i);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::size_t winner = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[winner].value) winner = i;
  }
  const auto& best = results[winner];
  return {with_gauge(best.x, gauge), best.value, Method::simplex, best.iterations,
          best.converged};
}

OptimizationResult minimize_eigen(const OptimizationProblem& problem) {
  problem.validate();
  const ComponentBasis basis(problem.r_list);
  const auto l = static_cast<Eigen::Index>(problem.r_list.size());
  const Eigen::MatrixXd& overlap = basis.overlap();
  const Eigen::MatrixXd& second = basis.second();

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> overlap_spectrum(overlap);
  if (overlap_spectrum.eigenvalues().minCoeff() < kOverlapFloor) {
    throw Error(ErrorKind::ill_conditioned_overlap,
                "overlap matrix smallest eigenvalue " +
                    std::to_string(overlap_spectrum.eigenvalues().minCoeff()) +
                    " is below 1e-12");
  }
  const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(second, overlap);
  const Eigen::VectorXd vec = solver.eigenvectors().col(0);
  const auto gauge = static_cast<Eigen::Index>(problem.gauge_index());

  std::vector<double> weights(static_cast<std::size_t>(l));
  if (std::abs(vec[gauge]) > 1e-12 * vec.norm()) {
    for (Eigen::Index j = 0; j < l; ++j) weights[static_cast<std::size_t>(j)] = vec[j] / vec[gauge];
  } else {
    // The optimum does not involve the gauge component; report a unit
    // vector with its largest entry positive instead.
    Eigen::Index top = 0;
    vec.cwiseAbs().maxCoeff(&top);
    const double sign = vec[top] < 0.0 ? -1.0 : 1.0;
    for (Eigen::Index j = 0; j < l; ++j) {
      weights[static_cast<std::size_t>(j)] = sign * vec[j] / vec.norm();
    }
  }
  return {std::move(weights), solver.eigenvalues()[0], Method::eigen, 1, true};
}

std::vector<Table1Row> published_table1() {
  auto row = [](int index, std::vector<double> r, std::vector<double> w, double var) {
    return Table1Row{index, std::move(r), var, std::move(w), 0.0, {}, {}, false};
  };
  return {
      row(1, {1.0}, {1.0}, 0.0338),
      row(2, {0.5, 1.0}, {-0.32678, 1.0}, 0.0268),
      row(3, {0.5, 0.8, 1.0}, {-0.2317, -1.0103, 1.0}, 0.0188),
      row(4, {0.5, 0.7, 0.8, 1.0}, {-0.3464, 2.4050, -2.9717, 1.0}, 0.0151),
  };
}

std::vector<Table1Row> reproduce_table1(std::uint64_t seed, int restarts) {
  auto rows = published_table1();
  for (auto& row : rows) {
    OptimizationProblem problem{row.r_list, std::nullopt, restarts, seed};
    row.objective_at_published = objective(problem, row.published_weights);
    row.simplex = minimize_simplex(problem);
    row.eigen = minimize_eigen(problem);
    row.pass = std::abs(row.objective_at_published - row.published_variance) <= kTable1Tolerance &&
               row.eigen.variance <= row.published_variance + kTable1Tolerance;
  }
  return rows;
}

}  // namespace squeezelab
