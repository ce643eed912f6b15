#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace squeezelab {

enum class ErrorKind {
  invalid_argument,
  zero_state,
  cutoff_too_small,
  alpha_too_large,
  r_too_large,
  degenerate_superposition,
  non_convergence,
  ill_conditioned_overlap,
  io_error,
};

/// Stable, machine-parsable name of an error kind (e.g. "CutoffTooSmall").
std::string_view error_tag(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view tag() const noexcept { return error_tag(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace squeezelab
