#include "squeezelab/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "series.hpp"
#include "squeezelab/error.hpp"

namespace squeezelab {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_half_turn(double angle) {
  angle = std::fmod(angle, kPi);
  if (angle < 0.0) angle += kPi;
  return angle >= kPi ? 0.0 : angle;
}

void check_order(int n) {
  if (n < 2 || n > 4) {
    throw Error(ErrorKind::invalid_argument,
                "Hong-Mandel n must be in [2, 4], got " + std::to_string(n));
  }
}

// (X_phi - shift) v with X_phi = (e^{-i phi} a + e^{i phi} a^dag)/2; the
// result has one more level than v.
Eigen::VectorXcd apply_shifted_quadrature(const Eigen::VectorXcd& v, double phi,
                                          double shift) {
  const Complex down = 0.5 * std::polar(1.0, -phi);
  const Complex up = 0.5 * std::polar(1.0, phi);
  const Eigen::Index dim = v.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim + 1);
  for (Eigen::Index n = 0; n < dim; ++n) {
    out[n] -= shift * v[n];
    if (n > 0) out[n - 1] += down * std::sqrt(static_cast<double>(n)) * v[n];
    out[n + 1] += up * std::sqrt(static_cast<double>(n + 1)) * v[n];
  }
  return out;
}

struct TwoModeMoments {
  Complex mean;         // <a + b>
  double number;        // <(a + b)^dag (a + b)>
  Complex second;       // <(a + b)^2>
};

TwoModeMoments two_mode_moments(const TwoModeFockState& state, const Tolerances& tol) {
  using L = Ladder;
  auto m = [&](OperatorWord w) { return two_mode_moment(state, w, tol); };
  TwoModeMoments out;
  out.mean = m({L::a}) + m({L::b});
  out.number = (m({L::a_dag, L::a}) + m({L::b_dag, L::b}) + m({L::a_dag, L::b}) +
                m({L::b_dag, L::a}))
                   .real();
  out.second = m({L::a, L::a}) + 2.0 * m({L::a, L::b}) + m({L::b, L::b});
  return out;
}

}  // namespace

double quadrature_variance(const FockState& state, double phi, const Tolerances& tol) {
  const auto table = MomentTable::build(state, 2, tol);
  const Complex mean = table.mean();
  const double fluct = table.photon_number() - std::norm(mean);
  const Complex z = table.at(0, 2) - mean * mean;
  return 0.25 * (1.0 + 2.0 * fluct + 2.0 * (z * std::polar(1.0, -2.0 * phi)).real());
}

QuadratureReport principal_report(const FockState& state, const Tolerances& tol) {
  const auto table = MomentTable::build(state, 2, tol);
  const Complex mean = table.mean();
  const double fluct = table.photon_number() - std::norm(mean);
  const Complex z = table.at(0, 2) - mean * mean;
  auto variance_at = [&](double phi) {
    return 0.25 * (1.0 + 2.0 * fluct + 2.0 * (z * std::polar(1.0, -2.0 * phi)).real());
  };
  QuadratureReport report;
  report.var_x = variance_at(0.0);
  report.var_p = variance_at(0.5 * kPi);
  report.principal_variance = 0.25 * (1.0 + 2.0 * fluct - 2.0 * std::abs(z));
  // Re(z e^{-2i phi}) = -|z| at 2 phi = arg z + pi.
  report.principal_angle =
      std::abs(z) == 0.0 ? 0.0 : wrap_half_turn(0.5 * (std::arg(z) + kPi));
  report.squeezed = report.principal_variance < kVacuumVariance - kDecisionSlack;
  return report;
}

double vacuum_benchmark(int order) {
  if (order < 2 || order % 2 != 0) {
    throw Error(ErrorKind::invalid_argument, "order must be even and >= 2");
  }
  double value = 1.0;
  for (int k = order - 1; k > 1; k -= 2) value *= k;
  return value / std::pow(4.0, order / 2);
}

HigherOrderReport hong_mandel_moment(const FockState& state, int n, double phi,
                                     const Tolerances& tol) {
  check_order(n);
  check_cutoff(state, 2 * n, tol);
  const double mean = (moment(state, 0, 1, tol) * std::polar(1.0, -phi)).real();
  Eigen::VectorXcd v = state.amplitudes();
  for (int k = 0; k < n; ++k) v = apply_shifted_quadrature(v, phi, mean);
  HigherOrderReport report;
  report.order = 2 * n;
  report.moment = v.squaredNorm();
  report.vacuum_benchmark = vacuum_benchmark(2 * n);
  report.squeezed = report.moment < report.vacuum_benchmark - kDecisionSlack;
  return report;
}

HilleryReport hillery_report(const FockState& state, const Tolerances& tol) {
  const auto table = MomentTable::build(state, 4, tol);
  const double n = table.photon_number();
  const Complex a2 = table.at(0, 2);
  const double a4 = table.at(0, 4).real();
  const double pairs = table.at(2, 2).real();
  // a^2 a^dag^2 = a^dag^2 a^2 + 4 a^dag a + 2
  HilleryReport report;
  report.var_y1 = 0.25 * (2.0 * a4 + 2.0 * pairs + 4.0 * n + 2.0) - a2.real() * a2.real();
  report.var_y2 = 0.25 * (-2.0 * a4 + 2.0 * pairs + 4.0 * n + 2.0) - a2.imag() * a2.imag();
  report.bound = n + 0.5;
  report.squeezed =
      std::min(report.var_y1, report.var_y2) < report.bound - kDecisionSlack;
  return report;
}

double two_mode_quadrature_variance(const TwoModeFockState& state, double phi,
                                    const Tolerances& tol) {
  const auto m = two_mode_moments(state, tol);
  const Complex z = m.second - m.mean * m.mean;
  return 0.25 * (1.0 + (m.number - std::norm(m.mean)) +
                 (z * std::polar(1.0, -2.0 * phi)).real());
}

double two_mode_variance(const TwoModeFockState& state, TwoModeQuadrature which,
                         const Tolerances& tol) {
  return two_mode_quadrature_variance(
      state, which == TwoModeQuadrature::x1 ? 0.0 : 0.5 * kPi, tol);
}

QuadratureReport two_mode_principal_report(const TwoModeFockState& state,
                                           const Tolerances& tol) {
  const auto m = two_mode_moments(state, tol);
  const Complex z = m.second - m.mean * m.mean;
  const double fluct = m.number - std::norm(m.mean);
  auto variance_at = [&](double phi) {
    return 0.25 * (1.0 + fluct + (z * std::polar(1.0, -2.0 * phi)).real());
  };
  QuadratureReport report;
  report.var_x = variance_at(0.0);
  report.var_p = variance_at(0.5 * kPi);
  report.principal_variance = 0.25 * (1.0 + fluct - std::abs(z));
  report.principal_angle =
      std::abs(z) == 0.0 ? 0.0 : wrap_half_turn(0.5 * (std::arg(z) + kPi));
  report.squeezed = report.principal_variance < kVacuumVariance - kDecisionSlack;
  return report;
}

HigherOrderReport two_mode_hong_mandel_moment(const TwoModeFockState& state, int n,
                                              double phi, const Tolerances& tol) {
  check_order(n);
  check_cutoff(state, 2 * n, tol);
  const double scale = 1.0 / std::pow(2.0, 1.5);
  const Complex down = scale * std::polar(1.0, -phi);
  const Complex up = scale * std::polar(1.0, phi);
  const auto padded = state.resized(state.cutoff() + static_cast<std::size_t>(n));
  auto apply_x = [&](const Eigen::MatrixXcd& psi) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(psi.rows(), psi.cols());
    for (auto [letter, coef] : {std::pair{Ladder::a, down}, std::pair{Ladder::b, down},
                                std::pair{Ladder::a_dag, up}, std::pair{Ladder::b_dag, up}}) {
      Eigen::MatrixXcd term = psi;
      apply_ladder(letter, term);
      out += coef * term;
    }
    return out;
  };
  const Eigen::MatrixXcd& psi0 = padded.amplitudes();
  const Eigen::MatrixXcd x_psi = apply_x(psi0);
  const double mean = (psi0.conjugate().cwiseProduct(x_psi)).sum().real();
  Eigen::MatrixXcd v = psi0;
  for (int k = 0; k < n; ++k) v = apply_x(v) - mean * v;
  HigherOrderReport report;
  report.order = 2 * n;
  report.moment = v.squaredNorm();
  report.vacuum_benchmark = vacuum_benchmark(2 * n);
  report.squeezed = report.moment < report.vacuum_benchmark - kDecisionSlack;
  return report;
}

double first_kind_variance_oracle(double r, int l) {
  if (l < 2) throw Error(ErrorKind::invalid_argument, "l must be >= 2");
  if (!(r >= 0.0)) throw Error(ErrorKind::invalid_argument, "r must be >= 0");
  if (r > 3.0) throw Error(ErrorKind::r_too_large, "r exceeds 3");
  const double t = std::tanh(r);
  if (t == 0.0) return kVacuumVariance;
  // T_m = (2lm)!/(2^{2lm} (lm)!^2) t^{2lm}, tracked as a logarithm.
  auto make_terms = [l, t](bool weighted) {
    return [l, t, weighted, log_term = 0.0, last = std::size_t{0}](std::size_t m) mutable {
      for (; last < m; ++last) {
        const auto lo = static_cast<double>(l) * static_cast<double>(last);
        for (int k = 1; k <= 2 * l; ++k) log_term += std::log(2.0 * lo + k);
        for (int k = 1; k <= l; ++k) log_term -= 2.0 * std::log(lo + k);
        log_term += 2.0 * l * (std::log(t) - std::log(2.0));
      }
      const double photons = 2.0 * l * static_cast<double>(m);
      return (weighted ? photons : 1.0) * std::exp(log_term);
    };
  };
  const double norm_sq = 1.0 / detail::sum_series(make_terms(false), "first-kind norm");
  const double weighted = detail::sum_series(make_terms(true), "first-kind variance");
  return 0.25 + 0.5 * norm_sq * weighted;
}

double generalized_variance_oracle(const std::vector<double>& r_list,
                                   const std::vector<double>& a_list) {
  if (r_list.empty() || r_list.size() != a_list.size()) {
    throw Error(ErrorKind::invalid_argument,
                "squeezing and weight lists must be nonempty and equal length");
  }
  const std::size_t l = r_list.size();
  double overlap = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      overlap += a_list[i] * a_list[j] / std::sqrt(std::cosh(r_list[i] - r_list[j]));
    }
  }
  const double norm_sq = 1.0 / overlap;
  if (!std::isfinite(norm_sq) || norm_sq <= 0.0) {
    throw Error(ErrorKind::degenerate_superposition,
                "normalization of the weighted superposition is not finite");
  }
  double bracket = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const double ti = std::tanh(r_list[i]);
      const double tj = std::tanh(r_list[j]);
      const double prefactor =
          a_list[i] * a_list[j] / std::sqrt(std::cosh(r_list[i]) * std::cosh(r_list[j]));
      // c_n = (2n)!/(2^{2n} n!^2) via log accumulation of (2n-1)/(2n).
      double log_c = 0.0;
      std::size_t last = 0;
      bracket += prefactor * detail::sum_series(
                                 [&](std::size_t n) {
                                   for (; last < n; ++last) {
                                     const double k = static_cast<double>(last + 1);
                                     log_c += std::log((2.0 * k - 1.0) / (2.0 * k));
                                   }
                                   const double nn = static_cast<double>(n);
                                   return std::pow(ti * tj, nn) * std::exp(log_c) *
                                          (4.0 * nn - (2.0 * nn + 1.0) * (ti + tj));
                                 },
                                 "generalized variance");
    }
  }
  return 0.25 + 0.25 * norm_sq * bracket;
}

double two_mode_pair_variance_oracle(double r) {
  const double t = std::tanh(r);
  const double q = std::pow(t, 4);
  // (2N / cosh r)^2 from normalizing sum_n tanh^{2n} |2n,2n>.
  const double prefactor_sq =
      1.0 / detail::sum_series([q](std::size_t n) { return std::pow(q, static_cast<double>(n)); },
                               "pair normalization");
  const double sum = detail::sum_series(
      [q](std::size_t n) {
        const double nn = static_cast<double>(n);
        return 4.0 * nn * std::pow(q, nn);
      },
      "pair variance");
  return 0.25 * (1.0 + prefactor_sq * sum);
}

}  // namespace squeezelab
