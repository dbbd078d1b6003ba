#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "yokegrip/magnetics.hpp"

using namespace yokegrip::magnetics;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

MagnetSpec reference_magnet() {
  MagnetSpec m;
  m.flux_density = 0.494;
  m.outer_diameter = 0.025;
  m.inner_diameter = 0.005;
  m.thickness = 0.005;
  m.grade = "N35";
  return m;
}

}  // namespace

TEST_CASE("field-based pull estimate", "[magnetics]") {
  const MagnetSpec magnet = reference_magnet();

  SECTION("reference ring magnet gives 4.66 kg") {
    const double m = theoretical_pull_mass(magnet);
    CHECK_THAT(m, WithinAbs(4.66, 0.01));
    CHECK_THAT(m, WithinRel(4.6642948969, 1e-9));  // frozen exact value
    CHECK_THAT(magnet.face_area(), WithinRel(4.71238898038e-4, 1e-10));
  }

  SECTION("zero field lifts nothing") {
    MagnetSpec m = magnet;
    m.flux_density = 0.0;
    CHECK(theoretical_pull_mass(m) == 0.0);
  }

  SECTION("doubling the field quadruples the pull exactly") {
    MagnetSpec doubled = magnet;
    doubled.flux_density = 2.0 * magnet.flux_density;
    CHECK(theoretical_pull_mass(doubled) == 4.0 * theoretical_pull_mass(magnet));
  }

  SECTION("domain errors") {
    MagnetSpec bad = magnet;
    bad.flux_density = -0.1;
    CHECK_THROWS_AS(theoretical_pull_mass(bad), std::domain_error);
    bad = magnet;
    bad.inner_diameter = bad.outer_diameter;  // zero face area
    CHECK_THROWS_AS(theoretical_pull_mass(bad), std::domain_error);
    PhysicalConstants c;
    c.gravity = 0.0;
    CHECK_THROWS_AS(theoretical_pull_mass(magnet, c), std::domain_error);
  }

  SECTION("homogeneity in area and field") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> scale(0.2, 5.0);
    const double base = theoretical_pull_mass(magnet);
    for (int i = 0; i < 50; ++i) {
      const double k = scale(rng);
      // scale the face area by k at fixed field: od' = sqrt(k od^2 + (1-k) id^2)
      MagnetSpec scaled = magnet;
      scaled.outer_diameter = std::sqrt(k * magnet.outer_diameter * magnet.outer_diameter +
                                        (1.0 - k) * magnet.inner_diameter * magnet.inner_diameter);
      CHECK_THAT(theoretical_pull_mass(scaled), WithinRel(k * base, 1e-12));
      MagnetSpec boosted = magnet;
      boosted.flux_density = k * magnet.flux_density;
      CHECK_THAT(theoretical_pull_mass(boosted), WithinRel(k * k * base, 1e-12));
    }
  }
}

TEST_CASE("measured pull override and derate ratio", "[magnetics]") {
  MagnetSpec magnet = reference_magnet();

  SECTION("measured value wins and the derate ratio is exposed") {
    magnet.empirical_pull_mass = 2.1;
    const EffectivePull p = effective_pull(magnet);
    CHECK(p.mass == 2.1);
    CHECK_THAT(p.derate_ratio, WithinRel(0.4502288227, 1e-9));
  }

  SECTION("no measurement falls back to the field estimate") {
    const EffectivePull p = effective_pull(magnet);
    CHECK(p.mass == theoretical_pull_mass(magnet));
    CHECK(p.derate_ratio == 1.0);
  }

  SECTION("measurement equal to the estimate gives ratio one") {
    magnet.empirical_pull_mass = theoretical_pull_mass(magnet);
    CHECK(effective_pull(magnet).derate_ratio == 1.0);
  }

  SECTION("non-positive measurement is rejected") {
    magnet.empirical_pull_mass = 0.0;
    CHECK_THROWS_AS(effective_pull(magnet), std::domain_error);
    magnet.empirical_pull_mass = -1.0;
    CHECK_THROWS_AS(effective_pull(magnet), std::domain_error);
  }
}

TEST_CASE("array capacity", "[magnetics]") {
  MagnetSpec magnet = reference_magnet();
  magnet.empirical_pull_mass = 2.1;
  MagnetArray array{magnet, 3, 0.07, "equilateral triangle"};

  SECTION("three derated magnets carry 6.3 kg") {
    CHECK_THAT(array_capacity(array), WithinRel(6.3, 1e-12));
  }

  SECTION("single magnet equals the effective pull") {
    array.count = 1;
    CHECK(array_capacity(array) == effective_pull_mass(magnet));
  }

  SECTION("three theoretical magnets, multiplication oracle") {
    array.magnet.empirical_pull_mass.reset();
    CHECK(array_capacity(array) == 3.0 * theoretical_pull_mass(magnet));
    CHECK_THAT(array_capacity(array), WithinAbs(13.99, 0.01));
  }

  SECTION("capacity is linear in count") {
    const double one = array_capacity({magnet, 1, 0.07, ""});
    for (int n : {2, 5, 11}) CHECK_THAT(array_capacity({magnet, n, 0.07, ""}), WithinRel(n * one, 1e-12));
  }

  SECTION("invalid arrays are rejected") {
    array.count = 0;
    CHECK_THROWS_AS(array_capacity(array), std::domain_error);
    array.count = 3;
    array.spacing = 0.0;
    CHECK_THROWS_AS(array_capacity(array), std::domain_error);
  }
}

TEST_CASE("payload margin", "[magnetics]") {
  MagnetSpec magnet = reference_magnet();
  magnet.empirical_pull_mass = 2.1;
  const MagnetArray array{magnet, 3, 0.07, "equilateral triangle"};

  SECTION("2 kg payload passes with margin 3.15") {
    const PayloadMargin m = payload_margin(array, 2.0);
    CHECK_THAT(m.ratio, WithinRel(3.15, 1e-12));
    CHECK(m.pass);
  }

  SECTION("zero payload reports infinite margin and passes") {
    const PayloadMargin m = payload_margin(array, 0.0);
    CHECK(std::isinf(m.ratio));
    CHECK(m.pass);
  }

  SECTION("payload above capacity fails") {
    CHECK_FALSE(payload_margin(array, 7.0).pass);
  }

  SECTION("boundary payload exactly at capacity passes") {
    const double capacity = array_capacity(array);
    CHECK(payload_margin(array, capacity).pass);
  }

  SECTION("negative payload is rejected") {
    CHECK_THROWS_AS(payload_margin(array, -0.5), std::domain_error);
  }

  SECTION("pass iff payload within capacity, random draws") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> mass(0.0, 12.0);
    const double capacity = array_capacity(array);
    for (int i = 0; i < 200; ++i) {
      const double payload = mass(rng);
      CHECK(payload_margin(array, payload).pass == (payload <= capacity));
    }
  }
}
