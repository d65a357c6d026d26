#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/interface_force.hpp"
#include "casimir/materials.hpp"
#include "casimir/mirror_force.hpp"

using namespace casimir;
using namespace casimir::interface;

namespace {

constexpr double kPi = std::numbers::pi;

Sphere sodium() { return Sphere::from_nm(10.0, preset("Na")); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Uniform reflector R_S = R_P = r with phase π on a grid reaching c = 0 and
// well past the explicit frequency cutoff.
TabulatedFresnel uniform_table(double r, double omega_top) {
  std::vector<std::array<double, 6>> rows;
  for (double w : {0.0, 0.5 * omega_top, omega_top}) {
    for (double c : {0.0, 0.3, 1.0}) rows.push_back({w, c, r, kPi, r, kPi});
  }
  return TabulatedFresnel(rows);
}

}  // namespace

TEST_CASE("per-mode forces") {
  CHECK(mode_force_s(1.0, 1.0, 1.0, 0.5, 0.0) == 0.0);
  CHECK(mode_force_s(1.0, 0.0, 1.0, 0.5, 1.0) == 0.0);
  CHECK(mode_force_s(1.0, 1.0, 1.0, 0.5, kPi / 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(mode_force_p(1.0, 1.0, 1.0, 1.0 / std::sqrt(2.0), 0.7)) < 1e-15);
  CHECK(mode_force_p(1.0, 1.0, 1.0, 0.4, 0.0) == 0.0);
  CHECK(mode_force_p(1.0, 1.0, 1.0, 1.0, kPi / 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(mode_force_s(2.0, 0.5, -3.0, 0.25, 1.1) == doctest::Approx(-2.0 * 0.5 * -3.0 * 0.25 * std::sin(1.1)));
  CHECK(phase_difference(2.0, 3.0, 0.5, 0.25) == doctest::Approx(6.25));
  CHECK_THROWS_AS(phase_difference(2.0, 3.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(phase_difference(2.0, 3.0, 1.5, 0.0), DomainError);
}

TEST_CASE("perfect mirror: the angular integrand is 2c^3 sin(2wzc)") {
  const PerfectMirror mirror;
  const auto r = mirror.evaluate(3.0, 0.4);
  CHECK(r.r_s == 1.0);
  CHECK(r.r_p == 1.0);
  CHECK(r.delta_s == kPi);
  CHECK(r.delta_p == kPi);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0, worst_cos = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double w = 30.0 * u(rng), z = 0.05 + 10.0 * u(rng), c = std::max(1e-12, u(rng));
    const double x = 2.0 * w * z * c;
    worst = std::max(worst, std::abs(angular_force_integrand(mirror, w, z, c) - 2.0 * c * c * c * std::sin(x)));
    worst_cos = std::max(worst_cos, std::abs(angular_potential_integrand(mirror, w, z, c) - 2.0 * c * c * std::cos(x)));
  }
  CHECK(worst <= 1e-14);
  CHECK(worst_cos <= 1e-14);
}

TEST_CASE("a transparent wall exerts no force") {
  const ZeroReflector none;
  const Sphere s = sodium();
  const double wp = s.material().plasma_frequency();
  for (double zw : {0.5, 3.0}) {
    CHECK(interface_force(s, none, zw / wp) == 0.0);
    CHECK(interface_potential(s, none, zw / wp) == 0.0);
  }
}

TEST_CASE("perfect mirror reproduces the closed-form force and potential") {
  const PerfectMirror mirror;
  const Sphere s = sodium();
  const double wp = s.material().plasma_frequency();
  for (double zw : {2.0, 5.0, 10.0}) {
    const double z = zw / wp;
    CAPTURE(zw);
    CHECK(rel(interface_force(s, mirror, z), mirror::total_force(s, z).total) <= 1e-6);
    CHECK(rel(interface_potential(s, mirror, z), mirror::potential(s, z)) <= 1e-6);
  }
  CHECK(rel(interface_force(s, mirror, 0.3 / wp), mirror::total_force(s, 0.3 / wp).total) <= 1e-6);
}

TEST_CASE("force is minus the slope of the potential") {
  const PerfectMirror mirror;
  const Sphere s = sodium();
  const double wp = s.material().plasma_frequency();
  const double z = 5.0 / wp, h = 0.01 / wp;
  const double dv = (interface_potential(s, mirror, z - 2 * h) - 8.0 * interface_potential(s, mirror, z - h) +
                     8.0 * interface_potential(s, mirror, z + h) - interface_potential(s, mirror, z + 2 * h)) /
                    (12.0 * h);
  const double f = interface_force(s, mirror, z);
  CHECK(std::abs(-dv - f) <= 1e-4 * std::abs(f));

  // Same check for a partial reflector with angle-dependent magnitude and
  // phase. S and P agree at grazing incidence, as they do for any real wall.
  std::vector<std::array<double, 6>> rows;
  for (double w : {0.0, 50.0, 400.0}) {
    for (double c : {0.0, 0.5, 1.0}) {
      const double r = 0.9 - 0.3 * c - 0.0005 * w, delta = kPi - 0.6 * c;
      rows.push_back({w, c, r, delta, r, delta});
    }
  }
  const TabulatedFresnel wall(rows);
  // The coefficients stop changing at the frequency cutoff W, which leaves a
  // component of V oscillating like cos(2Wz); the step must resolve it.
  const double zz = 3.0 / wp;
  const double h2 = 0.002 / wp;
  const double dv2 = (interface_potential(s, wall, zz - 2 * h2) - 8.0 * interface_potential(s, wall, zz - h2) +
                      8.0 * interface_potential(s, wall, zz + h2) - interface_potential(s, wall, zz + 2 * h2)) /
                     (12.0 * h2);
  const double f2 = interface_force(s, wall, zz);
  CHECK(std::abs(-dv2 - f2) <= 1e-5 * std::abs(f2));
}

TEST_CASE("perfect mirror far away gives the Casimir-Polder potential") {
  // Heavy damping kills the resonance term quickly, so z = 20/ω_p is already
  // close to the retarded regime.
  const Sphere s(0.05, DrudeMaterial::make(1.0, 0.6));
  const PerfectMirror mirror;
  const double z = 20.0;
  const double cp = -3.0 * s.volume_factor() / (8.0 * kPi * std::pow(z, 4));
  const double v = interface_potential(s, mirror, z);
  CHECK(rel(v, mirror::potential(s, z)) < 1e-6);
  CHECK(rel(v, cp) < 2e-2);
}

TEST_CASE("uniform tabulated reflectors scale the perfect-mirror result") {
  const Sphere s = sodium();
  const double wp = s.material().plasma_frequency();
  const double z = 2.0 / wp;
  const double top = 50.0 * wp;
  const PerfectMirror mirror;
  const double reference = interface_force(s, mirror, z);
  CHECK(rel(interface_force(s, uniform_table(1.0, top), z), reference) < 1e-10);
  CHECK(rel(interface_force(s, uniform_table(0.35, top), z), 0.35 * reference) < 1e-10);
  CHECK(rel(interface_potential(s, uniform_table(0.35, top), z), 0.35 * interface_potential(s, mirror, z)) < 1e-10);
  CHECK(interface_force(s, uniform_table(0.0, top), z) == 0.0);
}

TEST_CASE("tabulated coefficients: bilinear interpolation and range") {
  auto value = [](double w, double c) { return 0.1 + 0.02 * w + 0.3 * c + 0.01 * w * c; };
  std::vector<std::array<double, 6>> rows;
  for (double w : {0.0, 4.0, 10.0}) {
    for (double c : {0.5, 0.8, 1.0}) rows.push_back({w, c, value(w, c), w, value(w, c) * 0.5, c});
  }
  const TabulatedFresnel t(rows);
  const auto r = t.evaluate(6.5, 0.9);
  CHECK(r.r_s == doctest::Approx(value(6.5, 0.9)).epsilon(1e-14));
  CHECK(r.delta_s == doctest::Approx(6.5).epsilon(1e-14));
  CHECK(r.r_p == doctest::Approx(0.5 * value(6.5, 0.9)).epsilon(1e-14));
  CHECK(r.delta_p == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(t.evaluate(10.0, 1.0).r_s == doctest::Approx(value(10.0, 1.0)));
  CHECK(t.evaluate(0.0, 0.5).r_s == doctest::Approx(value(0.0, 0.5)));
  CHECK_THROWS_AS(t.evaluate(10.5, 0.9), RangeError);
  CHECK_THROWS_AS(t.evaluate(5.0, 0.4), RangeError);
  CHECK(t.frequency_breakpoints() == std::vector<double>{0.0, 4.0, 10.0});
  CHECK(t.cosine_breakpoints() == std::vector<double>{0.5, 0.8, 1.0});
  CHECK(t.lossless());
  CHECK(t.name() == "tabulated");
}

TEST_CASE("tabulated coefficients: parsing and validation") {
  const std::string text =
      "# omega cos R_S delta_S R_P delta_P\n"
      "0, 0.0, 1, 3.14, 1, 3.14\n"
      "0 1.0 1 3.14 1 3.14   # trailing comment\n"
      "\n"
      "5.0,0.0,0.5,3.0,0.25,2.0\n"
      "5.0 1.0 0.5 3.0 0.25 2.0\n";
  const auto t = TabulatedFresnel::parse(text);
  CHECK(t.evaluate(2.5, 0.5).r_s == doctest::Approx(0.75));
  CHECK(t.evaluate(2.5, 0.5).r_p == doctest::Approx(0.625));

  const auto path = std::filesystem::temp_directory_path() / "casimir_fresnel_table_test.txt";
  {
    std::ofstream out(path);
    out << text;
  }
  const auto from_file = TabulatedFresnel::load_file(path.string(), false);
  CHECK(from_file.evaluate(2.5, 0.5).r_s == doctest::Approx(0.75));
  CHECK_FALSE(from_file.lossless());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(TabulatedFresnel::load_file((path.string() + ".missing")), ConfigurationError);

  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 1\n"), ConfigurationError);
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 1 0 7\n"), ConfigurationError);
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 zero 1 0\n"), ConfigurationError);
  // Incomplete grid: (5, 1) missing.
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 1 0\n0 1 1 0 1 0\n5 0.5 1 0 1 0\n"), ConfigurationError);
  // Magnitude above one.
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1.2 0 1 0\n0 1 1 0 1 0\n5 0.5 1 0 1 0\n5 1 1 0 1 0\n"),
                  ConfigurationError);
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 -0.1 0\n0 1 1 0 1 0\n5 0.5 1 0 1 0\n5 1 1 0 1 0\n"),
                  ConfigurationError);
  // Cosine outside [0, 1] and duplicated rows.
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 1.5 1 0 1 0\n0 1 1 0 1 0\n5 1.5 1 0 1 0\n5 1 1 0 1 0\n"),
                  ConfigurationError);
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 1 0\n0 0.5 1 0 1 0\n0 1 1 0 1 0\n5 0.5 1 0 1 0\n5 1 1 0 1 0\n"),
                  ConfigurationError);
  CHECK_THROWS_AS(TabulatedFresnel::parse("0 0.5 1 0 1 0\n0 1 1 0 1 0\n"), ConfigurationError);
}

TEST_CASE("tables that stop short of the cutoff are rejected at evaluation time") {
  const Sphere s = sodium();
  const double wp = s.material().plasma_frequency();
  CHECK_THROWS_AS(interface_force(s, uniform_table(1.0, 10.0 * wp), 2.0 / wp), RangeError);
}

TEST_CASE("advisories") {
  const PerfectMirror mirror;
  CHECK(interface_advisories(sodium(), mirror).empty());
  std::vector<std::array<double, 6>> rows{{0, 0, 1, 0, 1, 0}, {0, 1, 1, 0, 1, 0}, {9, 0, 1, 0, 1, 0}, {9, 1, 1, 0, 1, 0}};
  const TabulatedFresnel lossy(rows, false);
  CHECK(interface_advisories(sodium(), lossy).size() == 1);
  const Sphere big = Sphere::from_nm(50.0, preset("Na"));
  CHECK(big.outside_dipole_regime());
  CHECK(interface_advisories(big, lossy).size() == 2);
}

TEST_CASE("bad separations and cutoffs") {
  const PerfectMirror mirror;
  const Sphere s = sodium();
  CHECK_THROWS_AS(interface_force(s, mirror, 0.0), DomainError);
  CHECK_THROWS_AS(interface_potential(s, mirror, -1.0), DomainError);
  InterfaceOptions opt;
  opt.omega_max = 0.1;
  CHECK_THROWS_AS(interface_force(s, mirror, 1.0, opt), ConfigurationError);
}
