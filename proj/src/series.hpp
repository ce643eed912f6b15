#pragma once

// Summation of slowly decaying positive-envelope series used by the
// closed-form oracles.

#include <cmath>
#include <cstddef>
#include <string>

#include "squeezelab/error.hpp"

namespace squeezelab::detail {

inline constexpr double kSeriesTermTol = 1e-16;
inline constexpr std::size_t kSeriesMaxTerms = 100000;

/// Sums term(0) + term(1) + ... until three consecutive terms fall below
/// kSeriesTermTol relative to max(1, |sum|). Leading zero terms are allowed.
template <class Term>
double sum_series(Term&& term, const char* what) {
  double sum = 0.0;
  int quiet = 0;
  for (std::size_t n = 0; n < kSeriesMaxTerms; ++n) {
    const double t = term(n);
    if (!std::isfinite(t)) {
      throw Error(ErrorKind::non_convergence,
                  std::string(what) + ": non-finite term at n=" + std::to_string(n));
    }
    sum += t;
    if (std::abs(t) <= kSeriesTermTol * std::max(1.0, std::abs(sum))) {
      if (++quiet == 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw Error(ErrorKind::non_convergence,
              std::string(what) + ": no convergence in " +
                  std::to_string(kSeriesMaxTerms) + " terms");
}

}  // namespace squeezelab::detail
