#include "squeezelab/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "series.hpp"
#include "squeezelab/error.hpp"

namespace squeezelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxSqueeze = 3.0;
constexpr double kMaxCoherentAlpha = 20.0;
constexpr double kMaxPacsAlpha = 10.0;
constexpr double kMaxCatAlpha = 10.0;
constexpr int kMaxAddedPhotons = 20;
constexpr double kDegenerateNorm = 1e-10;

// Upper bound on sum_{k>n} |c_k|^2 given |c_n|^2 and a non-increasing bound
// rho on the ratios |c_{k+1}|^2 / |c_k|^2 for k >= n.
double tail_bound(double term_mass, double rho) {
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return term_mass * rho / (1.0 - rho);
}

// Marks the end of the significant support, then lets the generator run on
// for `margin` more levels so the padding holds true amplitudes.
class TailStop {
 public:
  explicit TailStop(const Tolerances& tol) : tol_(tol) {}

  bool done(double term_mass, double rho, std::size_t level) {
    if (!reached_ && tail_bound(term_mass, rho) < tol_.tail_tol) {
      reached_ = true;
      end_ = level;
    }
    return reached_ && level >= end_ + tol_.margin;
  }
  bool in_support() const { return !reached_; }

 private:
  const Tolerances& tol_;
  bool reached_ = false;
  std::size_t end_ = 0;
};

std::size_t series_limit(const BuildOptions& opts, std::size_t cap) {
  return std::max(cap, opts.cutoff.value_or(0));
}

[[noreturn]] void too_long(const char* what, std::size_t limit) {
  throw Error(ErrorKind::cutoff_too_small,
              std::string(what) + " needs more than " + std::to_string(limit) +
                  " Fock levels to reach the tail tolerance");
}

void check_squeeze(const SqueezeParam& xi) {
  if (xi.r > kMaxSqueeze) {
    throw Error(ErrorKind::r_too_large,
                "squeezing parameter " + std::to_string(xi.r) + " exceeds 3");
  }
}

// Analytically normalized amplitudes through the end of the significant
// support plus the margin.

Eigen::VectorXcd raw_coherent(Complex alpha, const Tolerances& tol,
                              std::size_t limit, double alpha_cap) {
  if (!std::isfinite(std::abs(alpha)) || std::abs(alpha) > alpha_cap) {
    throw Error(ErrorKind::alpha_too_large,
                "|alpha| = " + std::to_string(std::abs(alpha)) + " exceeds " +
                    std::to_string(alpha_cap));
  }
  const double mean = std::norm(alpha);
  std::vector<Complex> c{Complex(std::exp(-0.5 * mean), 0.0)};
  TailStop stop(tol);
  for (std::size_t n = 0;; ++n) {
    const double rho = mean / static_cast<double>(n + 1);
    if (stop.done(std::norm(c.back()), rho, n)) break;
    if (stop.in_support() && n + 1 > limit) too_long("coherent state", limit);
    c.push_back(c.back() * alpha / std::sqrt(static_cast<double>(n + 1)));
  }
  return Eigen::Map<Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

Eigen::VectorXcd raw_squeezed_vacuum(const SqueezeParam& xi, const Tolerances& tol,
                                     std::size_t limit) {
  check_squeeze(xi);
  const double t = std::tanh(xi.r);
  const Complex step = -std::polar(t, xi.phase);
  std::vector<Complex> even{Complex(1.0 / std::sqrt(std::cosh(xi.r)), 0.0)};
  TailStop stop(tol);
  for (std::size_t m = 0;; ++m) {
    if (stop.done(std::norm(even.back()), t * t, 2 * m)) break;
    if (stop.in_support() && 2 * (m + 1) > limit) too_long("squeezed vacuum", limit);
    const double k = static_cast<double>(2 * (m + 1));
    even.push_back(even.back() * step * std::sqrt(k * (k - 1.0)) / k);
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(2 * even.size() - 1));
  for (std::size_t m = 0; m < even.size(); ++m) c[static_cast<Eigen::Index>(2 * m)] = even[m];
  return c;
}

Eigen::VectorXcd raw_pacs(const PacsParam& p, const Tolerances& tol, std::size_t limit) {
  if (p.m > kMaxAddedPhotons) {
    throw Error(ErrorKind::invalid_argument,
                "added-photon count " + std::to_string(p.m) + " exceeds 20");
  }
  if (!std::isfinite(std::abs(p.alpha)) || std::abs(p.alpha) > kMaxPacsAlpha) {
    throw Error(ErrorKind::alpha_too_large,
                "|alpha| = " + std::to_string(std::abs(p.alpha)) + " exceeds 10");
  }
  const double mean = std::norm(p.alpha);
  const auto m = static_cast<std::size_t>(p.m);
  std::vector<Complex> c(m, Complex{});
  c.push_back(Complex(std::exp(-0.5 * mean) / std::sqrt(laguerre(p.m, -mean)), 0.0));
  TailStop stop(tol);
  for (std::size_t n = 0;; ++n) {
    const double next = static_cast<double>(n + 1);
    const double rho = mean * (next + static_cast<double>(m)) / (next * next);
    if (stop.done(std::norm(c.back()), rho, n + m)) break;
    if (stop.in_support() && n + m + 1 > limit) too_long("photon-added coherent state", limit);
    c.push_back(c.back() * p.alpha * std::sqrt(next + static_cast<double>(m)) / next);
  }
  return Eigen::Map<Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

// Diagonal amplitudes c_{n,n} of a two-mode squeezed vacuum.
Eigen::VectorXcd raw_tmsv_diagonal(const SqueezeParam& xi, const Tolerances& tol,
                                   std::size_t limit) {
  check_squeeze(xi);
  const double t = std::tanh(xi.r);
  const Complex step = -std::polar(t, xi.phase);
  std::vector<Complex> c{Complex(1.0 / std::cosh(xi.r), 0.0)};
  TailStop stop(tol);
  for (std::size_t n = 0;; ++n) {
    if (stop.done(std::norm(c.back()), t * t, n)) break;
    if (stop.in_support() && n + 1 > limit) too_long("two-mode squeezed vacuum", limit);
    c.push_back(c.back() * step);
  }
  return Eigen::Map<Eigen::VectorXcd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

Eigen::VectorXcd weighted_sum(const std::vector<Eigen::VectorXcd>& parts,
                              const std::vector<Complex>& weights) {
  Eigen::Index size = 0;
  for (const auto& v : parts) size = std::max(size, v.size());
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(size);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    sum.head(parts[j].size()) += weights[j] * parts[j];
  }
  return sum;
}

void require_nondegenerate(const Eigen::VectorXcd& sum,
                           const std::vector<Complex>& weights) {
  double scale = 0.0;
  for (const auto& w : weights) scale += std::abs(w);
  if (!(sum.norm() >= kDegenerateNorm * std::max(scale, 1.0))) {
    throw Error(ErrorKind::degenerate_superposition,
                "superposition norm " + std::to_string(sum.norm()) +
                    " is below 1e-10");
  }
}

// Weighted sum of generated components. A sum that cancels strongly
// inflates the components' tails on normalization, so the parts are then
// regenerated with tail_tol scaled by the cancellation.
template <class MakeParts>
Eigen::VectorXcd superpose(MakeParts make_parts, const std::vector<Complex>& weights,
                           const Tolerances& tol) {
  Eigen::VectorXcd sum = weighted_sum(make_parts(tol), weights);
  require_nondegenerate(sum, weights);
  double scale = 0.0;
  for (const auto& w : weights) scale += std::abs(w);
  const double shrink = sum.squaredNorm() / (scale * scale);
  if (shrink < 1.0) {
    Tolerances tighter = tol;
    tighter.tail_tol *= shrink;
    sum = weighted_sum(make_parts(tighter), weights);
  }
  return sum;
}

// Zeroes the levels that symmetry excludes, n != offset (mod period), so
// rounding left over from cancelling components does not leak into moments.
Eigen::VectorXcd keep_every(Eigen::VectorXcd c, std::size_t period, std::size_t offset) {
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    const auto k = static_cast<std::size_t>(n);
    if (k < offset || (k - offset) % period != 0) c[n] = Complex{};
  }
  return c;
}

// Picks the final cutoff: the generated length (support plus margin), or the
// caller's override if it keeps the mass above cutoff - margin below tail_tol.
Eigen::VectorXcd fit_cutoff(const Eigen::VectorXcd& support, const BuildOptions& opts,
                            std::size_t cap) {
  const std::size_t margin = opts.tol.margin;
  const std::size_t natural = static_cast<std::size_t>(support.size()) - 1;
  std::size_t cutoff = natural;
  if (opts.cutoff) {
    cutoff = *opts.cutoff;
    const double total = support.squaredNorm();
    const auto first_tail = static_cast<Eigen::Index>(cutoff >= margin ? cutoff - margin + 1 : 0);
    const double tail = first_tail < support.size()
                            ? support.tail(support.size() - first_tail).squaredNorm()
                            : 0.0;
    if (tail > opts.tol.tail_tol * total) {
      throw Error(ErrorKind::cutoff_too_small,
                  "cutoff " + std::to_string(cutoff) + " leaves probability " +
                      std::to_string(tail / total) + " in the top " +
                      std::to_string(margin) + " levels");
    }
  } else if (natural > cap) {
    too_long("state", cap);
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cutoff + 1));
  const auto keep = std::min(out.size(), support.size());
  out.head(keep) = support.head(keep);
  return out;
}

// Rotates the largest-magnitude amplitude (lowest index on ties) onto the
// nonnegative real axis.
template <class Amplitudes>
void fix_global_phase(Amplitudes& amps) {
  const double largest = amps.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const Complex c = amps.data()[i];
    if (std::abs(c) >= largest * (1.0 - 1e-12)) {
      amps *= std::conj(c) / std::abs(c);
      return;
    }
  }
}

FockState finish(const Eigen::VectorXcd& support, const BuildOptions& opts) {
  Eigen::VectorXcd amps = fit_cutoff(support, opts, opts.tol.max_cutoff);
  amps = normalize(FockState(std::move(amps)), opts.tol).amplitudes();
  fix_global_phase(amps);
  return FockState(std::move(amps));
}

TwoModeFockState finish_two_mode(const Eigen::VectorXcd& diagonal,
                                 const BuildOptions& opts) {
  const Eigen::VectorXcd d = fit_cutoff(diagonal, opts, opts.tol.max_two_mode_cutoff);
  Eigen::MatrixXcd amps = d.asDiagonal();
  amps = normalize(TwoModeFockState(std::move(amps)), opts.tol).amplitudes();
  fix_global_phase(amps);
  return TwoModeFockState(std::move(amps));
}

Family family_of(const ComponentParams& params) {
  if (std::holds_alternative<SqueezeParam>(params)) return Family::squeezed_vacuum;
  if (std::holds_alternative<PacsParam>(params)) return Family::pacs;
  return Family::coherent_cat;
}

void validate_spec(const SuperpositionSpec& spec) {
  if (spec.components.empty()) {
    throw Error(ErrorKind::invalid_argument, "superposition has no components");
  }
  const Family expected = spec.family == Family::two_mode_squeezed_vacuum
                              ? Family::squeezed_vacuum
                              : spec.family;
  bool any_weight = false;
  for (const auto& c : spec.components) {
    if (family_of(c.params) != expected) {
      throw Error(ErrorKind::invalid_argument,
                  "component parameters do not match the superposition family");
    }
    if (!std::isfinite(c.weight.real()) || !std::isfinite(c.weight.imag())) {
      throw Error(ErrorKind::invalid_argument, "non-finite weight");
    }
    any_weight = any_weight || c.weight != Complex{};
    if (expected == Family::squeezed_vacuum && !spec.allow_complex) {
      const auto& xi = std::get<SqueezeParam>(c.params);
      const bool real_phase = std::abs(xi.phase) < 1e-12 ||
                              std::abs(xi.phase - std::numbers::pi) < 1e-12;
      if (c.weight.imag() != 0.0 || !real_phase) {
        throw Error(ErrorKind::invalid_argument,
                    "complex weights or squeeze phases need allow_complex");
      }
    }
  }
  if (!any_weight) {
    throw Error(ErrorKind::degenerate_superposition, "all weights are zero");
  }
}

Eigen::VectorXcd raw_component(const ComponentParams& params, const Tolerances& tol,
                               std::size_t limit) {
  return std::visit(
      [&](const auto& p) -> Eigen::VectorXcd {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SqueezeParam>) {
          return raw_squeezed_vacuum(p, tol, limit);
        } else if constexpr (std::is_same_v<T, PacsParam>) {
          return raw_pacs(p, tol, limit);
        } else {
          return raw_coherent(p.alpha, tol, limit, kMaxCatAlpha);
        }
      },
      params);
}

}  // namespace

SqueezeParam::SqueezeParam(double r_, double phase_) : r(r_), phase(phase_) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorKind::invalid_argument,
                "squeezing parameter must be finite and nonnegative");
  }
  if (!std::isfinite(phase)) {
    throw Error(ErrorKind::invalid_argument, "squeeze phase must be finite");
  }
  phase = std::fmod(phase, kTwoPi);
  if (phase < 0.0) phase += kTwoPi;
  if (phase >= kTwoPi) phase = 0.0;
}

PacsParam::PacsParam(Complex alpha_, int m_) : alpha(alpha_), m(m_) {
  if (m < 0) {
    throw Error(ErrorKind::invalid_argument, "added-photon count must be >= 0");
  }
}

double laguerre(int m, double x) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "negative Laguerre order");
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 - x;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

FockState coherent(Complex alpha, const BuildOptions& opts) {
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  return finish(raw_coherent(alpha, opts.tol, limit, kMaxCoherentAlpha), opts);
}

FockState squeezed_vacuum(const SqueezeParam& xi, const BuildOptions& opts) {
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  return finish(raw_squeezed_vacuum(xi, opts.tol, limit), opts);
}

FockState pacs(const PacsParam& p, const BuildOptions& opts) {
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  return finish(raw_pacs(p, opts.tol, limit), opts);
}

FockState cat(Complex alpha, CatKind kind, const BuildOptions& opts) {
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  const Complex relative = kind == CatKind::even  ? Complex(1.0, 0.0)
                           : kind == CatKind::odd ? Complex(-1.0, 0.0)
                                                  : Complex(0.0, 1.0);
  if (kind == CatKind::odd && alpha == Complex{}) {
    throw Error(ErrorKind::zero_state, "the odd cat vanishes at alpha = 0");
  }
  auto parts = [&](const Tolerances& tol) {
    return std::vector<Eigen::VectorXcd>{raw_coherent(alpha, tol, limit, kMaxCatAlpha),
                                         raw_coherent(-alpha, tol, limit, kMaxCatAlpha)};
  };
  Eigen::VectorXcd sum = superpose(parts, {Complex(1.0, 0.0), relative}, opts.tol);
  if (kind != CatKind::yurke_stoler) sum = keep_every(std::move(sum), 2, kind == CatKind::odd ? 1 : 0);
  return finish(sum, opts);
}

FockState first_kind_superposition(const FirstKindBase& base, int l,
                                   const BuildOptions& opts) {
  if (l < 1) {
    throw Error(ErrorKind::invalid_argument, "superposition order l must be >= 1");
  }
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  auto parts = [&](const Tolerances& tol) {
    std::vector<Eigen::VectorXcd> out;
    for (int j = 0; j < l; ++j) {
      const double turn = kTwoPi * j / l;
      if (const auto* xi = std::get_if<SqueezeParam>(&base)) {
        out.push_back(raw_squeezed_vacuum(SqueezeParam(xi->r, xi->phase + turn), tol, limit));
      } else {
        const auto& p = std::get<PacsParam>(base);
        out.push_back(raw_pacs(PacsParam(p.alpha * std::polar(1.0, turn), p.m), tol, limit));
      }
    }
    return out;
  };
  const std::vector<Complex> weights(static_cast<std::size_t>(l), Complex(1.0, 0.0));
  Eigen::VectorXcd sum = superpose(parts, weights, opts.tol);
  // Rotating xi by 2 pi j / l keeps n = 0 (mod 2l); rotating alpha keeps
  // n - m = 0 (mod l).
  const auto period = static_cast<std::size_t>(l);
  if (std::holds_alternative<SqueezeParam>(base)) {
    sum = keep_every(std::move(sum), 2 * period, 0);
  } else {
    sum = keep_every(std::move(sum), period, static_cast<std::size_t>(std::get<PacsParam>(base).m));
  }
  return finish(sum, opts);
}

FockState generalized_superposition(const SuperpositionSpec& spec,
                                    const BuildOptions& opts) {
  if (spec.family == Family::two_mode_squeezed_vacuum) {
    throw Error(ErrorKind::invalid_argument,
                "two-mode family: use generalized_two_mode_superposition");
  }
  validate_spec(spec);
  const auto limit = series_limit(opts, opts.tol.max_cutoff);
  std::vector<Complex> weights;
  for (const auto& c : spec.components) weights.push_back(c.weight);
  auto parts = [&](const Tolerances& tol) {
    std::vector<Eigen::VectorXcd> out;
    for (const auto& c : spec.components) out.push_back(raw_component(c.params, tol, limit));
    return out;
  };
  return finish(superpose(parts, weights, opts.tol), opts);
}

TwoModeFockState two_mode_squeezed_vacuum(const SqueezeParam& xi,
                                          const BuildOptions& opts) {
  const auto limit = series_limit(opts, opts.tol.max_two_mode_cutoff);
  return finish_two_mode(raw_tmsv_diagonal(xi, opts.tol, limit), opts);
}

TwoModeFockState two_mode_first_kind(const SqueezeParam& xi, int l,
                                     const BuildOptions& opts) {
  if (l < 1 || l > 4) {
    throw Error(ErrorKind::invalid_argument, "two-mode superposition order must be 1..4");
  }
  const auto limit = series_limit(opts, opts.tol.max_two_mode_cutoff);
  auto parts = [&](const Tolerances& tol) {
    std::vector<Eigen::VectorXcd> out;
    for (int j = 0; j < l; ++j) {
      out.push_back(raw_tmsv_diagonal(SqueezeParam(xi.r, xi.phase + kTwoPi * j / l), tol, limit));
    }
    return out;
  };
  const std::vector<Complex> weights(static_cast<std::size_t>(l), Complex(1.0, 0.0));
  return finish_two_mode(
      keep_every(superpose(parts, weights, opts.tol), static_cast<std::size_t>(l), 0), opts);
}

TwoModeFockState generalized_two_mode_superposition(const SuperpositionSpec& spec,
                                                    const BuildOptions& opts) {
  if (spec.family != Family::two_mode_squeezed_vacuum) {
    throw Error(ErrorKind::invalid_argument,
                "single-mode family: use generalized_superposition");
  }
  validate_spec(spec);
  const auto limit = series_limit(opts, opts.tol.max_two_mode_cutoff);
  std::vector<Complex> weights;
  for (const auto& c : spec.components) weights.push_back(c.weight);
  auto parts = [&](const Tolerances& tol) {
    std::vector<Eigen::VectorXcd> out;
    for (const auto& c : spec.components) {
      out.push_back(raw_tmsv_diagonal(std::get<SqueezeParam>(c.params), tol, limit));
    }
    return out;
  };
  return finish_two_mode(superpose(parts, weights, opts.tol), opts);
}

double svs_overlap_oracle(double r1, double r2) {
  return 1.0 / std::sqrt(std::cosh(r1 - r2));
}

double first_kind_normalization_oracle(double r, int l) {
  if (l < 1) throw Error(ErrorKind::invalid_argument, "l must be >= 1");
  const double t = std::tanh(r);
  if (t == 0.0) return 1.0;
  // log of (2lm)!/(2^{2lm} (lm)!^2) t^{2lm}, advanced one m at a time.
  double log_term = 0.0;
  std::size_t last = 0;
  const double sum = detail::sum_series(
      [&](std::size_t m) {
        for (; last < m; ++last) {
          const auto lo = static_cast<double>(l) * static_cast<double>(last);
          for (int k = 1; k <= 2 * l; ++k) log_term += std::log(2.0 * lo + k);
          for (int k = 1; k <= l; ++k) log_term -= 2.0 * std::log(lo + k);
          log_term += 2.0 * l * (std::log(t) - std::log(2.0));
        }
        return std::exp(log_term);
      },
      "first-kind normalization");
  return 1.0 / std::sqrt(sum);
}

Complex first_kind_svs_coefficient_oracle(const SqueezeParam& xi, int l, int m) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "negative index");
  const double n_l = first_kind_normalization_oracle(xi.r, l);
  const double lm = static_cast<double>(l) * m;
  if (lm == 0.0) return {n_l, 0.0};
  const double t = std::tanh(xi.r);
  if (t == 0.0) return {};
  const double log_mag = lm * std::log(t) + 0.5 * std::lgamma(2.0 * lm + 1.0) -
                         lm * std::log(2.0) - std::lgamma(lm + 1.0);
  // (-e^{i theta})^{lm}
  const Complex phase = std::polar(1.0, lm * (xi.phase + std::numbers::pi));
  return n_l * std::exp(log_mag) * phase;
}

}  // namespace squeezelab
