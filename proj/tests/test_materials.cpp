#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/units.hpp"

using namespace casimir;
using C = std::complex<double>;

namespace {

// Direct complex arithmetic on the Drude form, kept independent of the library.
C drude_oracle(double wp, double gamma, double w) { return 1.0 - wp * wp / (w * C(w, gamma)); }
C sphere_oracle(double a, C eps) { return a * a * a * (eps - 1.0) / (eps + 2.0); }

}  // namespace

TEST_CASE("dielectric function") {
  const auto lossless = DrudeMaterial::make(2.0, 0.0);
  CHECK(std::abs(epsilon(lossless, 2.0)) < 1e-15);
  CHECK(std::abs(epsilon(lossless, 1e8) - 1.0) < 1e-15);

  const auto na = preset("Na");
  const C eps = epsilon(na, 1.0);
  const C ref = drude_oracle(5.6, 0.028, 1.0);
  CHECK(eps.real() == doctest::Approx(ref.real()).epsilon(1e-14));
  CHECK(eps.imag() == doctest::Approx(ref.imag()).epsilon(1e-14));
  CHECK(eps.real() == doctest::Approx(-30.34).epsilon(1e-3));
  CHECK(eps.imag() == doctest::Approx(0.877).epsilon(1e-3));

  CHECK_THROWS_AS(epsilon(na, 0.0), DomainError);
  CHECK_THROWS_AS(epsilon(na, -1.0), DomainError);
}

TEST_CASE("sphere polarizability") {
  const Sphere lossless(1.3, DrudeMaterial::make(1.0, 0.0));
  const double a3 = lossless.volume_factor();
  const C at_twice = polarizability(lossless, 2.0);
  CHECK(at_twice.real() == doctest::Approx(-a3 / 11.0).epsilon(1e-14));
  CHECK(at_twice.imag() == 0.0);

  const Sphere na(1.0, preset("Na"));
  const C alpha = polarizability(na, 1.0);
  const C ref = sphere_oracle(1.0, drude_oracle(5.6, 0.028, 1.0));
  CHECK(std::abs(alpha - ref) <= 1e-14 * std::abs(ref));
  CHECK(alpha.imag() > 0.0);

  // ε = 1 − 3/1 = −2 exactly.
  const Sphere on_pole(1.0, DrudeMaterial::make(std::sqrt(3.0) , 0.0));
  const double w = 1.0;
  if (epsilon(on_pole.material(), w) == C(-2.0, 0.0)) {
    CHECK_THROWS_AS(polarizability(on_pole, w), PoleError);
  }
}

TEST_CASE("real part of the polarizability") {
  const Sphere s(0.7, DrudeMaterial::make(3.0, 0.2));
  const double a3 = s.volume_factor();
  CHECK(alpha1_real(s, 0.0) == doctest::Approx(a3).epsilon(1e-15));
  CHECK(std::abs(alpha1_real(s, 3.0 / std::sqrt(3.0))) < 1e-13 * a3);
  const double w = 300.0;
  CHECK(alpha1_real(s, w) == doctest::Approx(-a3 * 9.0 / (3.0 * w * w)).epsilon(1e-3));
}

TEST_CASE("polarizability properties over random materials") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double wp = 0.1 + 10.0 * u(rng);
    const double gamma = 1.1 * wp * u(rng);
    const Sphere s(0.01 + 2.0 * u(rng), DrudeMaterial::make(wp, gamma));
    const double w = wp * (1e-3 + 10.0 * u(rng));
    const C full = polarizability(s, w);
    CHECK(std::abs(alpha1_real(s, w) - full.real()) <= 1e-12 * std::abs(full));
    const C analytic = alpha1_analytic(s, C(w, 0.0));
    CHECK(std::abs(analytic.real() - alpha1_real(s, w)) <= 1e-12 * std::abs(full));
    const double denom = std::pow(3.0 * w * w - wp * wp, 2) + 9.0 * w * w * gamma * gamma;
    if (gamma > 0.0) CHECK(denom > 0.0);
  }
}

TEST_CASE("real part changes sign once, at omega_p/sqrt(3)") {
  for (double gamma : {0.0, 0.05, 0.5, 1.0}) {
    const Sphere s(1.0, DrudeMaterial::make(1.0, gamma));
    const double zero = 1.0 / std::sqrt(3.0);
    int changes = 0;
    double prev = alpha1_real(s, 1e-6);
    double where = 0.0;
    for (int i = 1; i <= 20000; ++i) {
      const double w = 1e-6 + 20.0 * i / 20000.0;
      const double v = alpha1_real(s, w);
      if ((v > 0.0) != (prev > 0.0)) {
        ++changes;
        where = w;
      }
      prev = v;
    }
    CHECK(changes == 1);
    CHECK(std::abs(where - zero) < 2e-3);
  }
}

TEST_CASE("resonance pole") {
  const auto lossless = DrudeMaterial::make(2.0, 0.0);
  CHECK(resonance(lossless).omega == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  const auto li = preset("Li");
  const auto pole = resonance(li);
  CHECK(pole.omega == doctest::Approx(std::sqrt(12.0 * 6.6 * 6.6 - 9.0 * 0.031 * 0.031) / 6.0).epsilon(1e-15));
  CHECK(pole.omega == doctest::Approx(3.8105).epsilon(2e-5));
  CHECK(pole.half_width == doctest::Approx(0.0155));
  const double spacing_um = units::length_natural_to_um(M_PI / pole.omega);
  CHECK(spacing_um == doctest::Approx(0.1627).epsilon(1e-3));
  CHECK(std::abs(spacing_um - 0.16) < 0.005);

  // α1 blows up at the pole Ω + iγ/2 when continued off the axis.
  const Sphere s(1.0, DrudeMaterial::make(1.0, 0.02));
  const auto p = resonance(s.material());
  CHECK(std::abs(alpha1_analytic(s, C(p.omega, p.half_width * (1.0 + 1e-9)))) > 1e6);
}

TEST_CASE("material validation") {
  CHECK_THROWS_AS(DrudeMaterial::make(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(DrudeMaterial::make(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DrudeMaterial::make(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(DrudeMaterial::make(1.0, 2.0 / std::sqrt(3.0)), DomainError);
  CHECK_THROWS_AS(DrudeMaterial::make(1.0, 5.0), DomainError);
  CHECK_NOTHROW(DrudeMaterial::make(1.0, 1.15));
  CHECK_THROWS_AS(DrudeMaterial::make(1.0, 0.1, -2.0), DomainError);
  CHECK_THROWS_AS(Sphere(0.0, DrudeMaterial::make(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(Sphere::from_nm(-5.0, DrudeMaterial::make(1.0, 0.0)), DomainError);
}

TEST_CASE("dipole regime advisory") {
  const auto na = preset("Na");
  CHECK_FALSE(Sphere(0.1, na).outside_dipole_regime());
  CHECK(Sphere(1.0, na).outside_dipole_regime());
  CHECK(Sphere::from_nm(50.0, na).radius() == doctest::Approx(units::length_nm_to_natural(50.0)));
}

TEST_CASE("preset catalog") {
  const auto na = preset("Na");
  CHECK(na.plasma_frequency() == 5.6);
  CHECK(na.damping() == 0.028);
  CHECK(*na.density() == 0.97);
  const auto k = preset("K");
  CHECK(k.plasma_frequency() == 3.8);
  CHECK(k.damping() == 0.021);
  CHECK(*k.density() == 0.86);
  const auto li = preset("Li");
  CHECK(li.plasma_frequency() == 6.6);
  CHECK(li.damping() == 0.031);
  CHECK(*li.density() == 0.53);

  const auto& al = MaterialCatalog::builtin().find("Al");
  CHECK(al.material.plasma_frequency() == 14.8);
  CHECK(al.material.damping() == 0.0);
  CHECK(*al.material.density() == 2.70);
  CHECK(al.advisory.has_value());

  try {
    preset("Xx");
    FAIL("expected a lookup error");
  } catch (const LookupError& e) {
    const std::string msg = e.what();
    for (const char* n : {"Li", "Na", "K", "Al"}) CHECK(msg.find(n) != std::string::npos);
  }
  CHECK(MaterialCatalog::builtin().version() >= 1);
  CHECK(MaterialCatalog::builtin().names().size() == 4);
}

TEST_CASE("catalog parsing") {
  const auto cat = MaterialCatalog::parse(R"({"catalog_version": 3, "materials": [
      {"name": "X", "rho_g_cm3": 1.5, "omega_p_eV": 2.0, "gamma_eV": 0.1, "note": "test"}]})");
  CHECK(cat.version() == 3);
  CHECK(cat.find("X").material.plasma_frequency() == 2.0);
  CHECK_THROWS_AS(MaterialCatalog::parse("{not json"), ConfigurationError);
  CHECK_THROWS_AS(MaterialCatalog::load_file("/nonexistent/catalog.json"), ConfigurationError);
}
