#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/equilibria.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/mirror_force.hpp"
#include "casimir/units.hpp"

using namespace casimir;
using namespace casimir::equilibria;

namespace {

constexpr double kPi = std::numbers::pi;

// SI recipe for the weight of a sphere, independent of the natural-unit path.
double weight_newtons(double radius_m, double rho_kg_m3) {
  return 4.0 / 3.0 * kPi * radius_m * radius_m * radius_m * rho_kg_m3 * 9.80665;
}

// ρg for ρ = 1 g/cm³ in eV⁵: N/m³ → eV/m⁴ → eV⁵ through (ħc)⁴.
double unit_weight_density_ev5() {
  const double hbar_c_m = 0.1973269804e-6;
  return 1000.0 * 9.80665 / 1.602176634e-19 * std::pow(hbar_c_m, 4);
}

double spacing_um(const DrudeMaterial& m) {
  return units::length_natural_to_um(kPi / resonance(m).omega);
}

}  // namespace

TEST_CASE("weight of the sphere") {
  const Sphere na = Sphere::from_nm(50.0, preset("Na"));
  const double newtons = units::force_natural_to_newtons(gravity_force(na));
  CHECK(newtons == doctest::Approx(weight_newtons(50e-9, 970.0)).epsilon(1e-9));
  CHECK(newtons == doctest::Approx(4.98e-18).epsilon(1e-3));
  CHECK(gravity_force(Sphere::from_nm(100.0, preset("Na"))) == doctest::Approx(8.0 * gravity_force(na)).epsilon(1e-14));
  CHECK(gravity_force(Sphere(1.0, DrudeMaterial::make(5.0, 0.01, 0.0))) == 0.0);
  CHECK_THROWS_AS(gravity_force(Sphere(1.0, DrudeMaterial::make(5.0, 0.01))), ConfigurationError);
}

TEST_CASE("levitation ratio coefficients from constants") {
  const auto report = levitation_report("Na", preset("Na"), 50.0, 0);
  const double coefficient = 0.1973269804 / (24.0 * kPi * unit_weight_density_ev5());
  CHECK(report.coefficient == doctest::Approx(coefficient).epsilon(1e-12));
  CHECK(report.coefficient == doctest::Approx(28.2).epsilon(2e-3));
  CHECK(report.exponent == doctest::Approx(5.0677).epsilon(1e-4));
  CHECK(report.spacing_um == doctest::Approx(spacing_um(preset("Na"))));
  CHECK(report.points_near_zc.empty());
}

TEST_CASE("levitation ratio does not depend on the radius") {
  for (const char* name : {"Li", "Na", "K"}) {
    const DrudeMaterial m = preset(name);
    for (double z_um : {1.0, 10.0, 45.0}) {
      const double z = units::length_um_to_natural(z_um).value();
      const double base = levitation_ratio(Sphere::from_nm(50.0, m), z);
      CHECK(levitation_ratio(Sphere::from_nm(100.0, m), z) == base);
      CHECK(levitation_ratio(Sphere::from_nm(7.0, m), z) == base);
    }
  }
}

TEST_CASE("levitation ratio approaches the weak-damping closed form") {
  // With γ → 0 the envelope is ω_p⁴a³/(18z)·e^{−γz}; compare at a small
  // damping where the relative correction is O(γ²/ω_p²).
  const DrudeMaterial m = DrudeMaterial::make(4.0, 1e-4, 0.8);
  const auto report = levitation_report("test", m, 50.0, 0);
  for (double z_um : {2.0, 20.0}) {
    const double z = units::length_um_to_natural(z_um).value();
    const double closed = report.coefficient * std::pow(4.0, 4) / (z_um * 0.8) *
                          std::exp(-report.exponent * 1e-4 * z_um);
    CHECK(levitation_ratio(Sphere::from_nm(50.0, m), z) == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("maximum levitation heights") {
  struct Row {
    const char* name;
    double spacing, z_c;
  };
  for (const Row& row : {Row{"Li", 0.16, 49.0}, Row{"Na", 0.19, 46.0}, Row{"K", 0.28, 47.0}}) {
    CAPTURE(row.name);
    const DrudeMaterial m = preset(row.name);
    const Sphere s = Sphere::from_nm(50.0, m);
    const auto z_c = max_levitation_height(s);
    REQUIRE(z_c.has_value());
    CHECK(levitation_ratio(s, *z_c) == doctest::Approx(1.0).epsilon(1e-10));
    const double z_c_um = units::length_natural_to_um(*z_c);
    CHECK(std::abs(z_c_um - row.z_c) <= 1.5);
    CHECK(std::abs(spacing_um(m) - row.spacing) <= 0.005);
    const auto rounded = max_levitation_height_rounded_um(m);
    REQUIRE(rounded.has_value());
    CHECK(std::abs(z_c_um - *rounded) <= 0.03 * *rounded);

    // Decreasing from 2/Ω onward.
    double previous = levitation_ratio(s, 2.0 / resonance(m).omega);
    for (double f = 0.05; f <= 2.0; f += 0.05) {
      const double r = levitation_ratio(s, f * *z_c);
      if (f * *z_c > 2.0 / resonance(m).omega) {
        CHECK(r < previous);
        previous = r;
      }
    }
  }
}

TEST_CASE("no levitation when the weight always wins") {
  const Sphere heavy = Sphere::from_nm(50.0, DrudeMaterial::make(0.5, 0.05, 20.0));
  CHECK_FALSE(max_levitation_height(heavy).has_value());
  CHECK_FALSE(max_levitation_height_rounded_um(heavy.material()).has_value());
  CHECK_THROWS_AS(levitation_ratio(Sphere(1.0, DrudeMaterial::make(5.0, 0.01)), 10.0), ConfigurationError);
  CHECK_THROWS_AS(levitation_report("x", DrudeMaterial::make(5.0, 0.01)), ConfigurationError);
}

TEST_CASE("levitation advisories") {
  CHECK(levitation_advisories(preset("Na")).empty());
  CHECK(levitation_advisories(DrudeMaterial::make(1.0, 0.2, 1.0)).size() == 1);
}

TEST_CASE("stable points of the weakly damped force") {
  const double wp = preset("Na").plasma_frequency();
  const DrudeMaterial m = preset("Na").with_damping(0.005 * wp);
  const Sphere s = Sphere::from_nm(10.0, m);
  const double ell = kPi / resonance(m).omega;
  const auto all = find_equilibria(s, 2.0 / wp, 40.0 / wp);
  const auto stable = stable_points(all);
  CHECK(stable.size() >= 5);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(all[i].z < all[i + 1].z);
    CHECK(all[i].stable != all[i + 1].stable);
  }
  for (std::size_t i = 0; i + 1 < stable.size(); ++i) {
    if (stable[i].z > 5.0 / wp) CHECK(std::abs(stable[i + 1].z - stable[i].z - ell) <= 0.02 * ell);
  }
  const double h = 1e-3 / wp;
  for (const auto& p : stable) {
    const double scale = std::abs(mirror::j_integral(s, p.z));
    CHECK(std::abs(mirror::total_force(s, p.z).total) <= 1e-9 * scale);
    CHECK(mirror::total_force(s, p.z - h).total > 0.0);
    CHECK(mirror::total_force(s, p.z + h).total < 0.0);
    CHECK(p.energy == doctest::Approx(mirror::potential(s, p.z)).epsilon(1e-12));
    CHECK(p.z_um == doctest::Approx(units::length_natural_to_um(p.z)));
    if (p.barrier_toward_wall) CHECK(*p.barrier_toward_wall > 0.0);
    if (p.barrier_away_from_wall) CHECK(*p.barrier_away_from_wall > 0.0);
    REQUIRE(p.well_depth.has_value());
    CHECK(*p.temperature_equivalent == doctest::Approx(well_temperature(*p.well_depth)));
  }
}

TEST_CASE("stable points of real sodium are one resonance wavelength apart") {
  const DrudeMaterial m = preset("Na");
  const Sphere s = Sphere::from_nm(50.0, m);
  const auto stable = stable_points(find_equilibria(s, units::length_um_to_natural(0.1).value(),
                                                    units::length_um_to_natural(2.0).value()));
  REQUIRE(stable.size() >= 5);
  for (std::size_t i = 0; i + 1 < stable.size(); ++i) {
    CHECK(stable[i + 1].z_um - stable[i].z_um == doctest::Approx(0.19).epsilon(0.03));
  }
}

TEST_CASE("the smooth attraction wins once the oscillation has decayed") {
  const DrudeMaterial m = preset("Na");
  const Sphere s = Sphere::from_nm(50.0, m);
  const double gamma = m.damping();
  // J falls like z⁻⁵ and the oscillation like e^{−γz}/z, so the crossover
  // for sodium sits near γz ≈ 45; at γz = 30 the oscillation still wins.
  CHECK_FALSE(find_equilibria(s, 30.0 / gamma, 31.0 / gamma).empty());
  CHECK(find_equilibria(s, 80.0 / gamma, 84.0 / gamma).empty());
}

TEST_CASE("weight-loaded equilibria stop at the levitation height") {
  const DrudeMaterial m = preset("Na");
  const auto report = levitation_report("Na", m, 50.0, 4);
  REQUIRE(report.z_c_um.has_value());
  CHECK(report.points_near_zc.size() >= 2);
  CHECK(report.points_near_zc.size() == report.ratio_at_points.size());
  for (double r : report.ratio_at_points) CHECK(r >= 1.0);

  const Sphere s = Sphere::from_nm(50.0, m);
  const double z_c = units::length_um_to_natural(*report.z_c_um).value();
  const double ell = kPi / resonance(m).omega;
  SearchOptions opt;
  opt.load = gravity_force(s);
  CHECK(find_equilibria(s, 1.01 * z_c, 1.01 * z_c + 4.0 * ell, opt).empty());
}

TEST_CASE("parallel search matches the serial one") {
  const Sphere s = Sphere::from_nm(50.0, preset("K"));
  const double lo = units::length_um_to_natural(0.2).value();
  const double hi = units::length_um_to_natural(3.0).value();
  SearchOptions parallel;
  parallel.threads = 4;
  const auto a = find_equilibria(s, lo, hi);
  const auto b = find_equilibria(s, lo, hi, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].z == b[i].z);
    CHECK(a[i].energy == b[i].energy);
  }
}

TEST_CASE("search range and grid validation") {
  const Sphere s = Sphere::from_nm(50.0, preset("Na"));
  CHECK_THROWS_AS(find_equilibria(s, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(find_equilibria(s, 2.0, 1.0), DomainError);
  SearchOptions coarse;
  coarse.grid_n = 10;
  const double lo = units::length_um_to_natural(0.1).value();
  const double hi = units::length_um_to_natural(2.0).value();
  try {
    find_equilibria(s, lo, hi, coarse);
    FAIL("coarse grid accepted");
  } catch (const ConfigurationError& e) {
    const std::string what = e.what();
    const auto at = what.find("grid_n >= ");
    REQUIRE(at != std::string::npos);
    SearchOptions suggested;
    suggested.grid_n = std::stoi(what.substr(at + 10));
    CHECK_NOTHROW(find_equilibria(s, lo, hi, suggested));
  }
}

TEST_CASE("well temperatures") {
  CHECK(well_temperature(0.0) == 0.0);
  CHECK(well_temperature(8.617333262e-5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(well_temperature(-1e-9), DomainError);
}
