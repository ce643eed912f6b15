#include <cstdlib>
#include <string>
#include <thread>

#include "squeezelab/config.hpp"
#include "squeezelab/error.hpp"

namespace squeezelab {

std::string_view error_tag(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::zero_state: return "ZeroState";
    case ErrorKind::cutoff_too_small: return "CutoffTooSmall";
    case ErrorKind::alpha_too_large: return "AlphaTooLarge";
    case ErrorKind::r_too_large: return "RTooLarge";
    case ErrorKind::degenerate_superposition: return "DegenerateSuperposition";
    case ErrorKind::non_convergence: return "NonConvergence";
    case ErrorKind::ill_conditioned_overlap: return "IllConditionedOverlap";
    case ErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("SQUEEZELAB_THREADS")) {
    try {
      requested = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace squeezelab
