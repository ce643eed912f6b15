#include <doctest.h>

#include <cmath>
#include <numbers>

#include "squeezelab/energy_density.hpp"
#include "squeezelab/error.hpp"
#include "squeezelab/squeezing.hpp"
#include "squeezelab/states.hpp"

using namespace squeezelab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("config validation") {
  auto cfg = EnergyDensityConfig::uniform(8);
  CHECK(cfg.theta_grid.size() == 8);
  CHECK_NOTHROW(cfg.validate());
  cfg.k00 = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = EnergyDensityConfig::uniform(4);
  cfg.theta_grid[2] = cfg.theta_grid[1];
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.theta_grid = {-0.1};
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("vacuum energy density vanishes") {
  const auto prof = t00_profile(FockState::vacuum(), EnergyDensityConfig::uniform(16));
  for (double v : prof.values) CHECK(v == 0.0);
  CHECK_FALSE(prof.ever_negative);
}

TEST_CASE("squeezed vacuum at r = 1") {
  const auto st = squeezed_vacuum(SqueezeParam(1.0));
  const EnergyDensityConfig cfg = EnergyDensityConfig::uniform(4);
  // frozen: 2(sinh^2 1 - sinh 1 cosh 1) and 2(sinh^2 1 + sinh 1 cosh 1)
  CHECK(t00(st, kPi / 2, cfg) == doctest::Approx(-0.864665).epsilon(1e-6));
  CHECK(t00(st, 0.0, cfg) == doctest::Approx(6.389056).epsilon(1e-6));
  const auto prof = t00_profile(st, cfg);
  CHECK(prof.ever_negative);
  CHECK(prof.min_theta == doctest::Approx(kPi / 2));
  CHECK(prof.min_value == doctest::Approx(-0.864665).epsilon(1e-6));
}

TEST_CASE("closed forms") {
  CHECK(closed_form_t00(ClosedFormFamily::even_cat, 1.0, 0.0) == doctest::Approx(-0.47681).epsilon(1e-5));
  CHECK(closed_form_t00(ClosedFormFamily::svs, 1.0, 0.0) == doctest::Approx(6.38906).epsilon(1e-5));
  CHECK(closed_form_t00(ClosedFormFamily::coherent, 1.0, 0.0) == doctest::Approx(0.0));
  const auto grid = EnergyDensityConfig::uniform(64);
  for (double r : {0.5, 1.0, 1.5}) {
    const auto st = first_kind_superposition(SqueezeParam(r), 2);
    for (double th : grid.theta_grid) {
      CHECK(std::abs(closed_form_t00(ClosedFormFamily::first_kind_svs_l2, r, th) - t00(st, th, grid)) < 1e-7);
    }
  }
}

TEST_CASE("periodicity and k00 scaling") {
  const auto st = cat(Complex(1.1, 0.3), CatKind::even);
  const auto one = EnergyDensityConfig::uniform(8, 1.0);
  const auto three = EnergyDensityConfig::uniform(8, 3.0);
  for (double th : {0.1, 0.9, 2.0}) {
    CHECK(t00(st, th, one) == doctest::Approx(t00(st, th + kPi, one)).epsilon(1e-12));
    CHECK(t00(st, th, three) == doctest::Approx(3.0 * t00(st, th, one)).epsilon(1e-12));
  }
}

TEST_CASE("analytic minimum is not beaten on a fine grid") {
  const auto st = squeezed_vacuum(SqueezeParam(0.7, 2.2));
  const auto fine = EnergyDensityConfig::uniform(2000);
  const auto prof = t00_profile(st, fine);
  double sampled = INFINITY;
  for (double v : prof.values) sampled = std::min(sampled, v);
  CHECK(prof.min_value <= sampled + 1e-12);
  CHECK(sampled - prof.min_value < 1e-4);
  CHECK(t00(st, prof.min_theta, fine) == doctest::Approx(prof.min_value).epsilon(1e-10));
}

TEST_CASE("negativity report") {
  const auto even = negativity_report(cat(1.0, CatKind::even));
  CHECK(even.ever_negative);
  CHECK(even.squeezed);
  CHECK(even.consistent);
  CHECK(even.zero_mean);
  const auto fk = first_kind_superposition(SqueezeParam(1.0), 2);
  const auto rep = negativity_report(fk);
  CHECK_FALSE(rep.ever_negative);
  CHECK(t00_profile(fk, EnergyDensityConfig::uniform(8)).min_value > 0.0);
  const auto coh = negativity_report(coherent(1.0));
  CHECK_FALSE(coh.zero_mean);
  CHECK_FALSE(coh.ever_negative);
}
