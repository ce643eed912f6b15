#pragma once

// Truncated single- and two-mode Fock space: state containers, ladder
// operators, inner products and normally ordered moments.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "squeezelab/config.hpp"

namespace squeezelab {

using Complex = std::complex<double>;

/// Single-mode state as dense amplitudes c_n for n = 0..cutoff.
class FockState {
 public:
  /// Throws ErrorKind::invalid_argument for an empty or non-finite vector.
  explicit FockState(Eigen::VectorXcd amplitudes);

  static FockState vacuum(std::size_t margin = default_tolerances().margin);
  /// |n> padded with `margin` empty levels above n.
  static FockState number(std::size_t n,
                          std::size_t margin = default_tolerances().margin);

  std::size_t cutoff() const noexcept {
    return static_cast<std::size_t>(amplitudes_.size()) - 1;
  }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }

  /// c_n, or zero for n beyond the cutoff.
  Complex operator[](std::size_t n) const noexcept {
    return n <= cutoff() ? amplitudes_[static_cast<Eigen::Index>(n)]
                         : Complex{};
  }

  double norm() const noexcept { return amplitudes_.norm(); }

  /// Zero-pads or truncates to the given cutoff. No tail check.
  FockState resized(std::size_t cutoff) const;

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Two-mode state with amplitudes c_{n,m}; rows index mode a, columns mode b.
class TwoModeFockState {
 public:
  explicit TwoModeFockState(Eigen::MatrixXcd amplitudes);

  std::size_t cutoff() const noexcept {
    return static_cast<std::size_t>(amplitudes_.rows()) - 1;
  }
  const Eigen::MatrixXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex operator()(std::size_t n, std::size_t m) const noexcept {
    return (n <= cutoff() && m <= cutoff())
               ? amplitudes_(static_cast<Eigen::Index>(n),
                             static_cast<Eigen::Index>(m))
               : Complex{};
  }
  double norm() const noexcept { return amplitudes_.norm(); }
  TwoModeFockState resized(std::size_t cutoff) const;

 private:
  Eigen::MatrixXcd amplitudes_;
};

/// Rescales to unit norm by a positive real factor; the global phase is kept.
/// Throws ErrorKind::zero_state when every amplitude is below the zero floor.
FockState normalize(const FockState& state,
                    const Tolerances& tol = default_tolerances());
TwoModeFockState normalize(const TwoModeFockState& state,
                           const Tolerances& tol = default_tolerances());

/// <s1|s2>; the shorter state is zero-padded.
Complex inner_product(const FockState& s1, const FockState& s2);
Complex inner_product(const TwoModeFockState& s1, const TwoModeFockState& s2);

/// Throws ErrorKind::cutoff_too_small if the top `order` levels carry more
/// than tail_tol probability, i.e. an operator word of that length could
/// reach past the represented space.
void check_cutoff(const FockState& state, int order,
                  const Tolerances& tol = default_tolerances());
void check_cutoff(const TwoModeFockState& state, int order,
                  const Tolerances& tol = default_tolerances());

/// <a^dag^p a^q>, exact on the truncated space.
Complex moment(const FockState& state, int p, int q,
               const Tolerances& tol = default_tolerances());

/// a|psi> (cutoff unchanged) and a^dag|psi> (cutoff grows by one).
FockState annihilate(const FockState& state);
FockState create(const FockState& state);

/// p_n = |c_n|^2.
std::vector<double> photon_number_distribution(const FockState& state);

/// Normally ordered moments <a^dag^p a^q> for p + q <= max_order.
class MomentTable {
 public:
  static MomentTable build(const FockState& state, int max_order,
                           const Tolerances& tol = default_tolerances());

  int max_order() const noexcept { return max_order_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  /// Throws ErrorKind::invalid_argument when p + q exceeds max_order().
  Complex at(int p, int q) const;

  Complex mean() const { return at(0, 1); }
  double photon_number() const { return at(1, 1).real(); }

 private:
  MomentTable(int max_order, std::uint64_t fingerprint,
              std::vector<Complex> entries)
      : max_order_(max_order),
        fingerprint_(fingerprint),
        entries_(std::move(entries)) {}

  int max_order_;
  std::uint64_t fingerprint_;
  std::vector<Complex> entries_;  // (max_order+1)^2, row-major in (p, q)
};

/// FNV-1a hash over cutoff and amplitude bits.
std::uint64_t fingerprint(const FockState& state) noexcept;

enum class Ladder { a, a_dag, b, b_dag };
using OperatorWord = std::vector<Ladder>;

/// Parses a whitespace- or '*'-separated word such as "a† b" or "ad*b".
/// Accepted tokens: a, b and their adjoints spelled x†, xd, x+ or xdag.
OperatorWord parse_operator_word(std::string_view text);

/// Adjoint word: reversed with every letter conjugated.
OperatorWord adjoint(const OperatorWord& word);

/// Applies one ladder operator in place to two-mode amplitudes (rows are
/// mode a). The caller leaves headroom: the top row/column is dropped.
void apply_ladder(Ladder letter, Eigen::MatrixXcd& psi);

/// <psi| w_0 w_1 ... w_{k-1} |psi>, the operators applied right to left.
Complex two_mode_moment(const TwoModeFockState& state, const OperatorWord& word,
                        const Tolerances& tol = default_tolerances());

}  // namespace squeezelab
