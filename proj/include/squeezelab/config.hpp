#pragma once

#include <cstddef>

namespace squeezelab {

/// Numerical tolerances shared by every module. Defaults are part of the
/// public contract and are pinned by the tests.
struct Tolerances {
  double norm_tol = 1e-12;    // |<psi|psi> - 1| after normalization
  double moment_tol = 1e-9;   // agreement of moments across cutoffs
  double tail_tol = 1e-12;    // probability mass allowed past the cutoff
  double zero_floor = 1e-300; // amplitudes below this count as zero
  std::size_t max_cutoff = 4096;
  std::size_t max_two_mode_cutoff = 1024;
  /// Zero-padded amplitudes kept above the support of a constructed state,
  /// so ladder-operator words up to this length stay inside the space.
  std::size_t margin = 8;
  int max_moment_order = 8;
};

inline const Tolerances& default_tolerances() noexcept {
  static const Tolerances tol{};
  return tol;
}

/// Worker threads for parallel sections. Reads SQUEEZELAB_THREADS
/// (0 or unset = hardware concurrency).
unsigned worker_count();

}  // namespace squeezelab
