#include "squeezelab/energy_density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "series.hpp"
#include "squeezelab/error.hpp"
#include "squeezelab/squeezing.hpp"

namespace squeezelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegativeFloor = 1e-12;  // in units of K00
constexpr double kZeroMean = 1e-10;

struct ModeMoments {
  double number;
  Complex second;
};

ModeMoments mode_moments(const FockState& state, const Tolerances& tol) {
  return {moment(state, 1, 1, tol).real(), moment(state, 0, 2, tol)};
}

double energy_at(const ModeMoments& m, double theta, double k00) {
  return 2.0 * k00 * (m.number - (m.second * std::polar(1.0, 2.0 * theta)).real());
}

}  // namespace

EnergyDensityConfig EnergyDensityConfig::uniform(std::size_t n, double k00) {
  EnergyDensityConfig cfg;
  cfg.k00 = k00;
  cfg.theta_grid.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    cfg.theta_grid.push_back(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return cfg;
}

void EnergyDensityConfig::validate() const {
  if (!(k00 > 0.0) || !std::isfinite(k00)) {
    throw Error(ErrorKind::invalid_argument, "K00 must be positive and finite");
  }
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    const double theta = theta_grid[i];
    if (!(theta >= 0.0 && theta <= 2.0 * kPi)) {
      throw Error(ErrorKind::invalid_argument,
                  "phase grid entry " + std::to_string(i) + " outside [0, 2pi]");
    }
    if (i > 0 && !(theta > theta_grid[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "phase grid must be strictly increasing");
    }
  }
}

double t00(const FockState& state, double theta, const EnergyDensityConfig& cfg,
           const Tolerances& tol) {
  return energy_at(mode_moments(state, tol), theta, cfg.k00);
}

EnergyDensityProfile t00_profile(const FockState& state, const EnergyDensityConfig& cfg,
                                 const Tolerances& tol) {
  cfg.validate();
  const auto m = mode_moments(state, tol);
  EnergyDensityProfile profile;
  profile.values.reserve(cfg.theta_grid.size());
  for (double theta : cfg.theta_grid) profile.values.push_back(energy_at(m, theta, cfg.k00));
  // Re(<a^2> e^{2i theta}) peaks at |<a^2>| when 2 theta = -arg <a^2>.
  profile.min_value = 2.0 * cfg.k00 * (m.number - std::abs(m.second));
  double theta = std::abs(m.second) == 0.0 ? 0.0 : -0.5 * std::arg(m.second);
  theta = std::fmod(theta, kPi);
  if (theta < 0.0) theta += kPi;
  profile.min_theta = theta >= kPi ? 0.0 : theta;
  profile.ever_negative = profile.min_value < -kNegativeFloor * cfg.k00;
  return profile;
}

double closed_form_t00(ClosedFormFamily family, double param, double theta) {
  const double c2 = std::cos(2.0 * theta);
  switch (family) {
    case ClosedFormFamily::coherent:
      return 2.0 * param * param * (1.0 - c2);
    case ClosedFormFamily::even_cat: {
      const double x = param * param;
      if (x == 0.0) return 0.0;
      return 2.0 * x * std::tanh(x) * (1.0 - c2 / std::tanh(x));
    }
    case ClosedFormFamily::svs:
      return 2.0 * std::sinh(param) * (std::cosh(param) * c2 + std::sinh(param));
    case ClosedFormFamily::first_kind_svs_l2: {
      // Phase independent; the series runs over |4n> with weight
      // (4n)!/((2n)!^2) (tanh r / 2)^{4n}.
      const double h = std::tanh(param) / 2.0;
      if (h == 0.0) return 0.0;
      double log_c = 0.0;  // log of (4n)!/((2n)!^2) * 16^{-n}
      std::size_t last = 0;
      const double series = detail::sum_series(
          [&](std::size_t n) {
            for (; last < n; ++last) {
              const double k = static_cast<double>(last);
              log_c += std::log((4 * k + 1) * (4 * k + 2) * (4 * k + 3) * (4 * k + 4)) -
                       2.0 * std::log((2 * k + 1) * (2 * k + 2)) - std::log(16.0);
            }
            const double nn = static_cast<double>(n);
            return nn * std::exp(log_c + 4.0 * nn * std::log(2.0 * h));
          },
          "first-kind energy density");
      const double sech = 1.0 / std::cosh(param);
      return 16.0 * sech / (1.0 + std::sqrt(1.0 / std::cosh(2.0 * param))) * series;
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown closed-form family");
}

NegativityReport negativity_report(const FockState& state, const Tolerances& tol) {
  NegativityReport report;
  report.squeezed = principal_report(state, tol).squeezed;
  EnergyDensityConfig cfg;
  report.ever_negative = t00_profile(state, cfg, tol).ever_negative;
  report.consistent = report.squeezed == report.ever_negative;
  report.zero_mean = std::abs(moment(state, 0, 1, tol)) < kZeroMean;
  return report;
}

}  // namespace squeezelab
