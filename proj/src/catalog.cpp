#include "squeezelab/catalog.hpp"

#include <cstdio>

#include "squeezelab/optimizer.hpp"
#include "squeezelab/squeezing.hpp"
#include "squeezelab/states.hpp"

namespace squeezelab {

namespace {

std::string label(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string label(const char* fmt, double x, int k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x, k);
  return buf;
}

std::string label(const char* fmt, double x, int k, int j) {
  char buf[80];
  std::snprintf(buf, sizeof buf, fmt, x, k, j);
  return buf;
}

FockState generalized(const std::vector<double>& r_list, const std::vector<double>& weights) {
  SuperpositionSpec spec{Family::squeezed_vacuum, {}, false};
  for (std::size_t j = 0; j < r_list.size(); ++j) {
    spec.components.push_back({Complex(weights[j], 0.0), SqueezeParam(r_list[j])});
  }
  return generalized_superposition(spec);
}

}  // namespace

std::vector<double> squeezed_pacs_alphas(int m) {
  std::vector<double> alphas;
  for (int k = 1; k <= 8; ++k) {
    const double alpha = 0.25 * k;
    if (principal_report(pacs(PacsParam(alpha, m))).squeezed) alphas.push_back(alpha);
  }
  return alphas;
}

std::vector<CatalogEntry> single_mode_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"vacuum", "vacuum", FockState::vacuum()});
  for (double r : kSqueezeGrid) {
    out.push_back({label("svs r=%g", r), "svs", squeezed_vacuum(SqueezeParam(r))});
    for (int l : kSuperpositionOrders) {
      out.push_back({label("first-kind-svs r=%g l=%d", r, l), "first-kind-svs",
                     first_kind_superposition(SqueezeParam(r), l)});
    }
  }
  for (double alpha : kAlphaGrid) {
    out.push_back({label("coherent alpha=%g", alpha), "coherent", coherent(alpha)});
    out.push_back({label("even-cat alpha=%g", alpha), "even-cat", cat(alpha, CatKind::even)});
    out.push_back({label("odd-cat alpha=%g", alpha), "odd-cat", cat(alpha, CatKind::odd)});
    out.push_back({label("yurke-stoler alpha=%g", alpha), "yurke-stoler",
                   cat(alpha, CatKind::yurke_stoler)});
  }
  for (const auto& row : published_table1()) {
    out.push_back({label("generalized-svs row=%g published", static_cast<double>(row.index)), "generalized-svs",
                   generalized(row.r_list, row.published_weights)});
    const auto best = minimize_eigen({row.r_list, std::nullopt, 1, 0});
    out.push_back({label("generalized-svs row=%g optimal", static_cast<double>(row.index)), "generalized-svs",
                   generalized(row.r_list, best.weights)});
  }
  for (int m = 1; m <= 5; ++m) {
    for (double alpha : squeezed_pacs_alphas(m)) {
      out.push_back({label("pacs alpha=%g m=%d", alpha, m), "pacs", pacs(PacsParam(alpha, m))});
      for (int l : kSuperpositionOrders) {
        out.push_back({label("first-kind-pacs alpha=%g m=%d l=%d", alpha, m, l),
                       "first-kind-pacs", first_kind_superposition(PacsParam(alpha, m), l)});
      }
    }
  }
  return out;
}

}  // namespace squeezelab
