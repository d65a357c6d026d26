#include "casimir/validation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "casimir/dipole.hpp"
#include "casimir/equilibria.hpp"
#include "casimir/interface_force.hpp"
#include "casimir/materials.hpp"
#include "casimir/mirror_force.hpp"
#include "casimir/numerics.hpp"
#include "casimir/parallel.hpp"

namespace casimir::validation {

namespace {

constexpr double kPi = std::numbers::pi;

Check relative(std::string name, double expected, double actual, double tol) {
  const double scale = std::max(std::abs(expected), 1e-300);
  return {std::move(name), expected, actual, tol, false, std::abs(actual - expected) <= tol * scale};
}

Check absolute(std::string name, double expected, double actual, double tol) {
  return {std::move(name), expected, actual, tol, true, std::abs(actual - expected) <= tol};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

Report run_validation(const units::PhysicalConstants& k, unsigned threads) {
  Report rep;
  auto& out = rep.checks;

  // Units against reference values computed from CODATA 2018.
  out.push_back(relative("units.um_to_natural", 5.067731, units::length_um_to_natural(1.0, k).value(), 1e-6));
  out.push_back(relative("units.force_to_newtons", 8.1194e-13, units::force_natural_to_newtons(1.0, k), 1e-4));
  for (int d = -3; d <= 5; ++d) {
    const units::NaturalQuantity q(1.2345, d);
    const auto back = units::from_inverse_metre_power(units::to_inverse_metre_power(q, k), d, k);
    out.push_back(relative("units.round_trip.dim" + std::to_string(d), q.value(), back.value(), 1e-12));
  }

  // Material model.
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double wp = 0.5 + 10.0 * u01(rng);
    const auto m = DrudeMaterial::make(wp, 0.3 * wp * u01(rng));
    const Sphere s(0.01 + u01(rng), m);
    const double w = 0.01 + 5.0 * wp * u01(rng);
    const auto full = polarizability(s, w);
    worst = std::max(worst, std::abs(alpha1_real(s, w) - full.real()) / std::abs(full));
  }
  out.push_back(absolute("materials.alpha1_matches_real_part", 0.0, worst, 1e-12));
  out.push_back(relative("materials.resonance_Li", 3.8105, resonance(preset("Li")).omega, 1e-4));

  // Special functions.
  out.push_back(relative("numerics.Ci(1)", 0.3374039229, numerics::cosine_integral(1.0), 1e-9));
  out.push_back(relative("numerics.Si(10)", 1.658347594218874, numerics::sine_integral(10.0), 1e-10));

  // Spectrum identity.
  for (double z : {0.3, 1.0, 4.0}) {
    out.push_back(relative("spectrum.regulated_integral.z=" + fmt(z), -1.5 / z,
                           mirror::regulated_spectrum_integral(z).value, 1e-6));
  }

  // J + P against the regulated real-axis integral.
  const Sphere na(1.0, preset("Na"));
  const double wp = na.material().plasma_frequency();
  std::vector<double> zs;
  for (int i = 0; i < 6; ++i) zs.push_back(0.5 / wp * std::pow(60.0, i / 5.0));
  const auto oracle_checks = parallel_map(
      zs.size(),
      [&](std::size_t i) {
        const double prod = mirror::total_force(na, zs[i]).total;
        const double orc = mirror::total_force_oracle(na, zs[i]).value;
        return relative("mirror.oracle_equivalence.Na.z*wp=" + fmt(zs[i] * wp), prod, orc, 1e-4);
      },
      threads);
  out.insert(out.end(), oracle_checks.begin(), oracle_checks.end());

  // Asymptotic limits.
  {
    const Sphere s(1.0, DrudeMaterial::make(1.0, 0.0));
    const double z = 0.01;
    out.push_back(relative("mirror.small_z_repulsion", 1.0,
                           mirror::total_force(s, z).total / mirror::small_separation_force(s, z), 0.05));
    out.push_back(relative("mirror.closed_form_J_undamped", mirror::j_integral_undamped_closed_form(s, 3.0),
                           mirror::j_integral(s, 3.0), 1e-9));
  }
  {
    const double z = mirror::pole_negligible_separation(na, 1e-6, 60.0 / wp);
    out.push_back(relative("mirror.casimir_polder_limit", mirror::casimir_polder_force(na, z),
                           mirror::total_force(na, z).total, 0.01));
    const double zp = 50.0 / resonance(na.material()).omega;
    out.push_back(relative("mirror.pole_envelope", mirror::pole_envelope(na, zp), mirror::pole_term_amplitude(na, zp), 0.02));
  }

  // Perfect-mirror reduction of the mode sum.
  {
    const interface::PerfectMirror mirror;
    double worst_pt = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double w = 20.0 * u01(rng);
      const double z = 0.1 + 10.0 * u01(rng);
      const double c = std::max(1e-9, u01(rng));
      const double direct = 2.0 * c * c * c * std::sin(2.0 * w * z * c);
      worst_pt = std::max(worst_pt, std::abs(interface::angular_force_integrand(mirror, w, z, c) - direct));
    }
    out.push_back(absolute("interface.perfect_mirror_identity", 0.0, worst_pt, 1e-14));
    const double z = 5.0 / wp;
    out.push_back(relative("interface.perfect_mirror_force.z*wp=5", mirror::total_force(na, z).total,
                           interface::interface_force(na, mirror, z), 1e-6));
  }

  // Material table: spacing and levitation heights.
  const struct {
    const char* name;
    double spacing_um, zc_um;
  } table[] = {{"Li", 0.16, 49.0}, {"Na", 0.19, 46.0}, {"K", 0.28, 47.0}};
  for (const auto& row : table) {
    const auto m = preset(row.name);
    const double ell = units::length_natural_to_um(kPi / resonance(m).omega, k);
    out.push_back(absolute(std::string("levitation.spacing_um.") + row.name, row.spacing_um, ell, 0.005));
    const auto zc = equilibria::max_levitation_height(Sphere(1.0, m), k);
    out.push_back(absolute(std::string("levitation.z_c_um.") + row.name, row.zc_um,
                           zc ? units::length_natural_to_um(*zc, k) : 0.0, 1.5));
  }

  // Dipole identities.
  {
    double worst_static = 0.0;
    double worst_power = 0.0;
    for (int i = 0; i < 1000; ++i) {
      dipole::FieldSample fs;
      for (auto& v : fs.e0) v = 2.0 * u01(rng) - 1.0;
      for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) fs.grad_e[a][b] = fs.grad_e[b][a] = 2.0 * u01(rng) - 1.0;
      }
      const double alpha0 = u01(rng);
      dipole::DipoleState ds;
      for (int a = 0; a < 3; ++a) ds.p[a] = alpha0 * fs.e0[a];
      const auto f = dipole::dipole_force(fs, ds);
      const auto g = dipole::gradient_of_field_squared(fs);
      for (int a = 0; a < 3; ++a) worst_static = std::max(worst_static, std::abs(f[a] - 0.5 * alpha0 * g[a]));

      dipole::Vec3 kv{2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0, 2.0 * u01(rng) + 0.1};
      dipole::Vec3 e = dipole::cross(kv, {1.0, 0.0, 0.0});
      const double en = dipole::norm(e);
      for (auto& x : e) x /= en;
      const dipole::PlaneWave wave(u01(rng) + 0.1, kv, e);
      const std::complex<double> alpha(u01(rng), u01(rng));
      const auto force = dipole::plane_wave_force(wave, alpha);
      const double power = dipole::absorbed_power(wave, alpha);
      for (int a = 0; a < 3; ++a) {
        worst_power = std::max(worst_power, std::abs(force[a] - kv[a] / wave.frequency() * power));
      }
    }
    out.push_back(absolute("dipole.static_limit", 0.0, worst_static, 1e-12));
    out.push_back(absolute("dipole.force_power_identity", 0.0, worst_power, 1e-12));
  }
  return rep;
}

}  // namespace casimir::validation
