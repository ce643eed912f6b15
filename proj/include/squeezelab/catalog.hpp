#pragma once

// Named state grids used by the consistency sweep and acceptance checks.

#include <string>
#include <vector>

#include "squeezelab/fock.hpp"

namespace squeezelab {

struct CatalogEntry {
  std::string name;
  std::string family;
  FockState state;
};

/// Squeezed vacua, first-kind superpositions, cats, generalized
/// superpositions and photon-added coherent states (with their first-kind
/// superpositions) over the standard parameter grids.
std::vector<CatalogEntry> single_mode_catalog();

inline const std::vector<double> kSqueezeGrid{0.25, 0.5, 0.75, 1.0, 1.25, 1.5};
inline const std::vector<double> kAlphaGrid{0.25, 0.5, 1.0, 1.5};
inline const std::vector<int> kSuperpositionOrders{2, 3, 4};

/// Real alpha values in {0.25, 0.5, ..., 2.0} for which the m-photon-added
/// coherent state is quadrature squeezed.
std::vector<double> squeezed_pacs_alphas(int m);

}  // namespace squeezelab
