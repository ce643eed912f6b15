#include "squeezelab/fock.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <string>

#include "squeezelab/error.hpp"

namespace squeezelab {

namespace {

void require_finite(const Complex* data, Eigen::Index size) {
  for (Eigen::Index i = 0; i < size; ++i) {
    if (!std::isfinite(data[i].real()) || !std::isfinite(data[i].imag())) {
      throw Error(ErrorKind::invalid_argument,
                  "non-finite amplitude at index " + std::to_string(i));
    }
  }
}

// sqrt(n!/(n-q)! * (n-q+p)!/(n-q)!), the matrix element of a^dag^p a^q
// between <n-q+p| and |n>.
double ladder_factor(std::size_t n, int p, int q) {
  double f = 1.0;
  for (int i = 0; i < q; ++i) f *= static_cast<double>(n - i);
  const std::size_t base = n - static_cast<std::size_t>(q);
  for (int i = 1; i <= p; ++i) f *= static_cast<double>(base + i);
  return std::sqrt(f);
}

}  // namespace

FockState::FockState(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorKind::invalid_argument, "empty amplitude vector");
  }
  require_finite(amplitudes_.data(), amplitudes_.size());
}

FockState FockState::vacuum(std::size_t margin) { return number(0, margin); }

FockState FockState::number(std::size_t n, std::size_t margin) {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n + margin + 1));
  amps[static_cast<Eigen::Index>(n)] = 1.0;
  return FockState(std::move(amps));
}

FockState FockState::resized(std::size_t cutoff) const {
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cutoff + 1));
  const auto keep = std::min<Eigen::Index>(amps.size(), amplitudes_.size());
  amps.head(keep) = amplitudes_.head(keep);
  return FockState(std::move(amps));
}

TwoModeFockState::TwoModeFockState(Eigen::MatrixXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0 || amplitudes_.rows() != amplitudes_.cols()) {
    throw Error(ErrorKind::invalid_argument,
                "two-mode amplitudes must be a non-empty square matrix");
  }
  require_finite(amplitudes_.data(), amplitudes_.size());
}

TwoModeFockState TwoModeFockState::resized(std::size_t cutoff) const {
  const auto dim = static_cast<Eigen::Index>(cutoff + 1);
  Eigen::MatrixXcd amps = Eigen::MatrixXcd::Zero(dim, dim);
  const auto keep = std::min(dim, amplitudes_.rows());
  amps.topLeftCorner(keep, keep) = amplitudes_.topLeftCorner(keep, keep);
  return TwoModeFockState(std::move(amps));
}

FockState normalize(const FockState& state, const Tolerances& tol) {
  const auto& amps = state.amplitudes();
  if (amps.cwiseAbs().maxCoeff() < tol.zero_floor) {
    throw Error(ErrorKind::zero_state, "cannot normalize the zero vector");
  }
  return FockState(amps / amps.norm());
}

TwoModeFockState normalize(const TwoModeFockState& state,
                           const Tolerances& tol) {
  const auto& amps = state.amplitudes();
  if (amps.cwiseAbs().maxCoeff() < tol.zero_floor) {
    throw Error(ErrorKind::zero_state, "cannot normalize the zero vector");
  }
  return TwoModeFockState(amps / amps.norm());
}

Complex inner_product(const FockState& s1, const FockState& s2) {
  const auto n = std::min(s1.amplitudes().size(), s2.amplitudes().size());
  return s1.amplitudes().head(n).dot(s2.amplitudes().head(n));
}

Complex inner_product(const TwoModeFockState& s1, const TwoModeFockState& s2) {
  const auto n = std::min(s1.amplitudes().rows(), s2.amplitudes().rows());
  const auto a = s1.amplitudes().topLeftCorner(n, n);
  const auto b = s2.amplitudes().topLeftCorner(n, n);
  return (a.conjugate().cwiseProduct(b)).sum();
}

void check_cutoff(const FockState& state, int order, const Tolerances& tol) {
  if (order <= 0) return;
  const auto& amps = state.amplitudes();
  const auto top = std::min<Eigen::Index>(order, amps.size());
  const double mass = amps.tail(top).squaredNorm();
  if (mass > tol.tail_tol) {
    throw Error(ErrorKind::cutoff_too_small,
                "probability " + std::to_string(mass) + " in the top " +
                    std::to_string(top) + " levels at cutoff " +
                    std::to_string(state.cutoff()));
  }
}

void check_cutoff(const TwoModeFockState& state, int order,
                  const Tolerances& tol) {
  if (order <= 0) return;
  const auto& amps = state.amplitudes();
  const auto dim = amps.rows();
  const auto top = std::min<Eigen::Index>(order, dim);
  // Rows or columns in the top band, counting the corner once.
  const double mass = amps.bottomRows(top).squaredNorm() +
                      amps.topRightCorner(dim - top, top).squaredNorm();
  if (mass > tol.tail_tol) {
    throw Error(ErrorKind::cutoff_too_small,
                "probability " + std::to_string(mass) + " in the top " +
                    std::to_string(top) + " levels of a mode at cutoff " +
                    std::to_string(state.cutoff()));
  }
}

Complex moment(const FockState& state, int p, int q, const Tolerances& tol) {
  if (p < 0 || q < 0 || p + q > tol.max_moment_order) {
    throw Error(ErrorKind::invalid_argument,
                "moment order out of range: p=" + std::to_string(p) +
                    " q=" + std::to_string(q));
  }
  check_cutoff(state, p + q, tol);
  const auto& c = state.amplitudes();
  const std::size_t cutoff = state.cutoff();
  Complex sum{};
  for (std::size_t n = static_cast<std::size_t>(q); n <= cutoff; ++n) {
    const std::size_t k = n - static_cast<std::size_t>(q) + static_cast<std::size_t>(p);
    if (k > cutoff) break;
    sum += std::conj(c[static_cast<Eigen::Index>(k)]) * ladder_factor(n, p, q) *
           c[static_cast<Eigen::Index>(n)];
  }
  return sum;
}

FockState annihilate(const FockState& state) {
  const auto& c = state.amplitudes();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(c.size());
  for (Eigen::Index n = 1; n < c.size(); ++n) {
    out[n - 1] = std::sqrt(static_cast<double>(n)) * c[n];
  }
  return FockState(std::move(out));
}

FockState create(const FockState& state) {
  const auto& c = state.amplitudes();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(c.size() + 1);
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    out[n + 1] = std::sqrt(static_cast<double>(n + 1)) * c[n];
  }
  return FockState(std::move(out));
}

std::vector<double> photon_number_distribution(const FockState& state) {
  const auto& c = state.amplitudes();
  std::vector<double> p(static_cast<std::size_t>(c.size()));
  for (Eigen::Index n = 0; n < c.size(); ++n) p[static_cast<std::size_t>(n)] = std::norm(c[n]);
  return p;
}

std::uint64_t fingerprint(const FockState& state) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
      h ^= p[i];
      h *= 1099511628211ULL;
    }
  };
  const std::uint64_t cutoff = state.cutoff();
  mix(&cutoff, sizeof cutoff);
  const auto& c = state.amplitudes();
  mix(c.data(), static_cast<std::size_t>(c.size()) * sizeof(Complex));
  return h;
}

MomentTable MomentTable::build(const FockState& state, int max_order,
                               const Tolerances& tol) {
  if (max_order < 0 || max_order > tol.max_moment_order) {
    throw Error(ErrorKind::invalid_argument,
                "moment table order out of range: " + std::to_string(max_order));
  }
  const auto side = static_cast<std::size_t>(max_order + 1);
  std::vector<Complex> entries(side * side);
  for (int p = 0; p <= max_order; ++p) {
    for (int q = p; p + q <= max_order; ++q) {
      const Complex value = moment(state, p, q, tol);
      entries[static_cast<std::size_t>(p) * side + static_cast<std::size_t>(q)] = value;
      entries[static_cast<std::size_t>(q) * side + static_cast<std::size_t>(p)] =
          p == q ? Complex(value.real(), 0.0) : std::conj(value);
    }
  }
  return MomentTable(max_order, squeezelab::fingerprint(state), std::move(entries));
}

Complex MomentTable::at(int p, int q) const {
  if (p < 0 || q < 0 || p + q > max_order_) {
    throw Error(ErrorKind::invalid_argument,
                "moment (" + std::to_string(p) + "," + std::to_string(q) +
                    ") not in table of order " + std::to_string(max_order_));
  }
  const auto side = static_cast<std::size_t>(max_order_ + 1);
  return entries_[static_cast<std::size_t>(p) * side + static_cast<std::size_t>(q)];
}

OperatorWord parse_operator_word(std::string_view text) {
  OperatorWord word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Ladder letter;
    if (token == "a") {
      letter = Ladder::a;
    } else if (token == "b") {
      letter = Ladder::b;
    } else if (token == "a\xE2\x80\xA0" || token == "ad" || token == "a+" ||
               token == "adag") {
      letter = Ladder::a_dag;
    } else if (token == "b\xE2\x80\xA0" || token == "bd" || token == "b+" ||
               token == "bdag") {
      letter = Ladder::b_dag;
    } else {
      throw Error(ErrorKind::invalid_argument,
                  "unknown ladder operator '" + token + "'");
    }
    word.push_back(letter);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return word;
}

OperatorWord adjoint(const OperatorWord& word) {
  OperatorWord out(word.rbegin(), word.rend());
  for (auto& letter : out) {
    switch (letter) {
      case Ladder::a: letter = Ladder::a_dag; break;
      case Ladder::a_dag: letter = Ladder::a; break;
      case Ladder::b: letter = Ladder::b_dag; break;
      case Ladder::b_dag: letter = Ladder::b; break;
    }
  }
  return out;
}

void apply_ladder(Ladder letter, Eigen::MatrixXcd& psi) {
  const Eigen::Index dim = psi.rows();
  switch (letter) {
    case Ladder::a:
      for (Eigen::Index n = 0; n + 1 < dim; ++n) {
        psi.row(n) = std::sqrt(static_cast<double>(n + 1)) * psi.row(n + 1);
      }
      psi.row(dim - 1).setZero();
      break;
    case Ladder::a_dag:
      for (Eigen::Index n = dim - 1; n > 0; --n) {
        psi.row(n) = std::sqrt(static_cast<double>(n)) * psi.row(n - 1);
      }
      psi.row(0).setZero();
      break;
    case Ladder::b:
      for (Eigen::Index m = 0; m + 1 < dim; ++m) {
        psi.col(m) = std::sqrt(static_cast<double>(m + 1)) * psi.col(m + 1);
      }
      psi.col(dim - 1).setZero();
      break;
    case Ladder::b_dag:
      for (Eigen::Index m = dim - 1; m > 0; --m) {
        psi.col(m) = std::sqrt(static_cast<double>(m)) * psi.col(m - 1);
      }
      psi.col(0).setZero();
      break;
  }
}

Complex two_mode_moment(const TwoModeFockState& state, const OperatorWord& word,
                        const Tolerances& tol) {
  if (static_cast<int>(word.size()) > tol.max_moment_order) {
    throw Error(ErrorKind::invalid_argument,
                "operator word longer than " + std::to_string(tol.max_moment_order));
  }
  check_cutoff(state, static_cast<int>(word.size()), tol);
  const auto padded = state.resized(state.cutoff() + word.size());
  Eigen::MatrixXcd psi = padded.amplitudes();
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_ladder(*it, psi);
  return (padded.amplitudes().conjugate().cwiseProduct(psi)).sum();
}

}  // namespace squeezelab
