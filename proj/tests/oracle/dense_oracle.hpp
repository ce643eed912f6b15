#pragma once

// Brute-force reference computations for the test suites. Everything here
// builds explicit operator matrices on a padded Fock space and uses plain
// matrix products, so it shares no code path with the library's banded
// ladder arithmetic.

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;

/// Annihilation operator on levels 0..dim-1.
inline Eigen::MatrixXcd annihilation(Eigen::Index dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline Eigen::VectorXcd padded(const Eigen::VectorXcd& psi, Eigen::Index extra) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size() + extra);
  out.head(psi.size()) = psi;
  return out;
}

/// <psi| a^dag^p a^q |psi> with enough padding that truncation never bites.
inline Complex moment(const Eigen::VectorXcd& psi, int p, int q) {
  const Eigen::VectorXcd v = padded(psi, p + q + 1);
  const Eigen::MatrixXcd a = annihilation(v.size());
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(v.size(), v.size());
  for (int i = 0; i < p; ++i) op = op * a.adjoint();
  for (int i = 0; i < q; ++i) op = op * a;
  return v.dot(op * v);
}

/// X_phi = (a e^{-i phi} + a^dag e^{i phi}) / 2 on a space padded by `extra`.
inline Eigen::MatrixXcd quadrature(Eigen::Index dim, double phi) {
  const Eigen::MatrixXcd a = annihilation(dim);
  const Complex e = std::polar(1.0, phi);
  return 0.5 * (a * std::conj(e) + a.adjoint() * e);
}

/// <(X_phi - <X_phi>)^k>, computed with matrix powers.
inline double central_moment(const Eigen::VectorXcd& psi, double phi, int k) {
  const Eigen::VectorXcd v = padded(psi, k + 2);
  const Eigen::Index dim = v.size();
  const Eigen::MatrixXcd x = quadrature(dim, phi);
  const double mean = v.dot(x * v).real();
  const Eigen::MatrixXcd shifted = x - mean * Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::VectorXcd w = v;
  for (int i = 0; i < k; ++i) w = shifted * w;
  return v.dot(w).real();
}

inline double variance(const Eigen::VectorXcd& psi, double phi) {
  return central_moment(psi, phi, 2);
}

/// Minimum quadrature variance by dense sampling of phi.
inline double sampled_min_variance(const Eigen::VectorXcd& psi, int samples = 720) {
  double best = INFINITY;
  for (int k = 0; k < samples; ++k) {
    best = std::min(best, variance(psi, std::numbers::pi * k / samples));
  }
  return best;
}

/// Squeezed vacuum amplitudes from log-gamma factorials, r and theta real.
inline Eigen::VectorXcd squeezed_vacuum(double r, double theta, Eigen::Index dim) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  const double t = std::tanh(r);
  for (Eigen::Index m = 0; 2 * m < dim; ++m) {
    const double md = static_cast<double>(m);
    const double logmag = 0.5 * std::lgamma(2 * md + 1) - md * std::log(2.0) -
                          std::lgamma(md + 1) + (m > 0 ? md * std::log(t) : 0.0);
    const Complex phase = std::pow(-std::polar(1.0, theta), static_cast<int>(m));
    c(2 * m) = phase * std::exp(logmag) / std::sqrt(std::cosh(r));
  }
  return c;
}

/// Coherent amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
inline Eigen::VectorXcd coherent(Complex alpha, Eigen::Index dim) {
  Eigen::VectorXcd c(dim);
  Complex term = std::exp(-0.5 * std::norm(alpha));
  for (Eigen::Index n = 0; n < dim; ++n) {
    c(n) = term;
    term *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return c;
}

/// a^dag^m applied to a coherent state, then normalized, by explicit matrices.
inline Eigen::VectorXcd photon_added(Complex alpha, int m, Eigen::Index dim) {
  Eigen::VectorXcd v = padded(coherent(alpha, dim), m);
  const Eigen::MatrixXcd adag = annihilation(v.size()).adjoint();
  for (int i = 0; i < m; ++i) v = adag * v;
  return v / v.norm();
}

}  // namespace oracle
