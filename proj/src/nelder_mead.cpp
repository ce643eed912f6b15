#include "squeezelab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace squeezelab {

namespace {

using Point = std::vector<double>;

// p = base + scale * (toward - base)
Point blend(const Point& base, const Point& toward, double scale) {
  Point p(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) p[i] = base[i] + scale * (toward[i] - base[i]);
  return p;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
  auto eval = [&f](const Point& x) {
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  const std::size_t dim = x0.size();
  if (dim == 0) return {x0, eval(x0), 0, true};

  std::vector<Point> vertex(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) vertex[i + 1][i] += opts.initial_step;
  std::vector<double> value(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) value[i] = eval(vertex[i]);

  std::vector<std::size_t> order(dim + 1);
  int iter = 0;
  bool converged = false;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    double diameter = 0.0;
    for (std::size_t j = 0; j <= dim; ++j) {
      double d = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        const double delta = vertex[j][i] - vertex[best][i];
        d += delta * delta;
      }
      diameter = std::max(diameter, std::sqrt(d));
    }
    if (diameter < opts.diameter_tol && value[worst] - value[best] < opts.spread_tol) {
      converged = true;
      break;
    }

    Point centroid(dim, 0.0);
    for (std::size_t j = 0; j <= dim; ++j) {
      if (j == worst) continue;
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += vertex[j][i] / static_cast<double>(dim);
    }

    const Point reflected = blend(centroid, vertex[worst], -opts.alpha);
    const double f_reflected = eval(reflected);
    if (f_reflected < value[best]) {
      const Point expanded = blend(centroid, reflected, opts.gamma);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    // Outside contraction when the reflection beat the worst vertex,
    // inside contraction otherwise.
    const bool outside = f_reflected < value[worst];
    const Point contracted =
        outside ? blend(centroid, reflected, opts.rho) : blend(centroid, vertex[worst], opts.rho);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, value[worst])) {
      vertex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }
    for (std::size_t j = 0; j <= dim; ++j) {
      if (j == best) continue;
      vertex[j] = blend(vertex[best], vertex[j], opts.sigma);
      value[j] = eval(vertex[j]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(value.begin(), value.end()) - value.begin());
  return {vertex[best], value[best], iter, converged};
}

}  // namespace squeezelab
