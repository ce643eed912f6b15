#pragma once

// Constructors for the state families (coherent, squeezed vacuum,
// photon-added coherent, cat, two-mode squeezed vacuum) and their
// superpositions, plus closed-form series used to cross-check them.

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "squeezelab/config.hpp"
#include "squeezelab/fock.hpp"

namespace squeezelab {

/// xi = r e^{i phase}; the phase is wrapped into [0, 2pi).
struct SqueezeParam {
  SqueezeParam(double r, double phase = 0.0);

  double r;
  double phase;

  Complex xi() const { return std::polar(r, phase); }
};

struct PacsParam {
  PacsParam(Complex alpha, int m);

  Complex alpha;
  int m;  // added photons
};

struct CoherentParam {
  Complex alpha;
};

enum class Family {
  squeezed_vacuum,
  pacs,
  coherent_cat,
  two_mode_squeezed_vacuum,
};

using ComponentParams = std::variant<SqueezeParam, PacsParam, CoherentParam>;

struct Component {
  Complex weight;
  ComponentParams params;
};

/// Weighted superposition sum_j a_j |Phi_j> of one family.
struct SuperpositionSpec {
  Family family;
  std::vector<Component> components;
  /// Squeezed-vacuum superpositions default to real weights and squeeze
  /// phases in {0, pi}; set this to allow arbitrary complex parameters.
  bool allow_complex = false;
};

/// Cutoff selection shared by the constructors. With no override the
/// smallest cutoff whose truncated tail is below tol.tail_tol is used (plus
/// tol.margin empty levels), capped at tol.max_cutoff.
struct BuildOptions {
  std::optional<std::size_t> cutoff;
  Tolerances tol = default_tolerances();
};

enum class CatKind { even, odd, yurke_stoler };

FockState coherent(Complex alpha, const BuildOptions& opts = {});
FockState squeezed_vacuum(const SqueezeParam& xi, const BuildOptions& opts = {});
FockState pacs(const PacsParam& p, const BuildOptions& opts = {});
FockState cat(Complex alpha, CatKind kind, const BuildOptions& opts = {});

using FirstKindBase = std::variant<SqueezeParam, PacsParam>;

/// Equal-weight sum of the base state with its parameter rotated by the
/// l-th roots of unity (xi for squeezed vacua, alpha for PACS).
FockState first_kind_superposition(const FirstKindBase& base, int l,
                                   const BuildOptions& opts = {});

/// Single-mode families only; see generalized_two_mode_superposition.
FockState generalized_superposition(const SuperpositionSpec& spec,
                                    const BuildOptions& opts = {});

TwoModeFockState two_mode_squeezed_vacuum(const SqueezeParam& xi,
                                          const BuildOptions& opts = {});
/// l in {1, 2, 3, 4}.
TwoModeFockState two_mode_first_kind(const SqueezeParam& xi, int l,
                                     const BuildOptions& opts = {});
TwoModeFockState generalized_two_mode_superposition(
    const SuperpositionSpec& spec, const BuildOptions& opts = {});

/// L_m(x) by the three-term recurrence.
double laguerre(int m, double x);

// Closed-form series for squeezed vacua with real parameters.

/// <xi(r1)|xi(r2)> = 1/sqrt(cosh(r1 - r2)).
double svs_overlap_oracle(double r1, double r2);

/// Normalization of sum_m (-e^{i theta} tanh r)^{lm} sqrt((2lm)!)/(2^{lm}(lm)!) |2lm>,
/// i.e. (sum_m (2lm)!/(2^{2lm} (lm)!^2) tanh^{2lm} r)^{-1/2}.
double first_kind_normalization_oracle(double r, int l);

/// Amplitude of |2lm> in the normalized first-kind squeezed-vacuum
/// superposition, before the global phase convention is applied.
Complex first_kind_svs_coefficient_oracle(const SqueezeParam& xi, int l, int m);

}  // namespace squeezelab
