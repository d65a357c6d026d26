#pragma once

// Force on a small sphere in front of a wall described by Fresnel reflection
// coefficients, built from the interference of each incident propagating mode
// with its reflection.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir::interface {

struct FresnelCoefficients {
  double r_s = 0.0;
  double delta_s = 0.0;
  double r_p = 0.0;
  double delta_p = 0.0;
};

/// Reflection magnitudes (in [0, 1]) and phase shifts for S and P
/// polarization at frequency ω and direction cosine c = cos θ ∈ (0, 1].
class FresnelModel {
 public:
  virtual ~FresnelModel() = default;
  virtual FresnelCoefficients evaluate(double omega, double cos_theta) const = 0;
  virtual std::string name() const = 0;
  /// False when the wall may absorb, so that T² + R² = 1 cannot be assumed.
  virtual bool lossless() const { return true; }
  /// Frequencies and direction cosines where the coefficients have kinks.
  virtual std::vector<double> frequency_breakpoints() const { return {}; }
  virtual std::vector<double> cosine_breakpoints() const { return {}; }
};

/// R_S = R_P = 1, δ_S = δ_P = π everywhere.
class PerfectMirror final : public FresnelModel {
 public:
  FresnelCoefficients evaluate(double omega, double cos_theta) const override;
  std::string name() const override { return "perfect-mirror"; }
};

/// R_S = R_P = 0: a fully transmitting interface.
class ZeroReflector final : public FresnelModel {
 public:
  FresnelCoefficients evaluate(double omega, double cos_theta) const override;
  std::string name() const override { return "transparent"; }
};

/// Coefficients sampled on a rectangular (ω, c) grid and interpolated bilinearly.
/// Queries outside the sampled rectangle throw RangeError. The mode sum only
/// converges when the S and P coefficients coincide as c → 0, as they do for
/// any physical wall.
class TabulatedFresnel final : public FresnelModel {
 public:
  /// `rows` holds {omega_eV, cos_theta, R_S, delta_S, R_P, delta_P}; every
  /// (ω, c) pair of the grid must appear exactly once, in any order. Rows at
  /// c = 0 are allowed so the grid can reach grazing incidence.
  TabulatedFresnel(const std::vector<std::array<double, 6>>& rows, bool lossless = true);
  /// Whitespace or comma separated rows; '#' starts a comment.
  static TabulatedFresnel load_file(const std::string& path, bool lossless = true);
  static TabulatedFresnel parse(const std::string& text, bool lossless = true);

  FresnelCoefficients evaluate(double omega, double cos_theta) const override;
  std::string name() const override { return "tabulated"; }
  bool lossless() const override { return lossless_; }
  std::vector<double> frequency_breakpoints() const override { return omegas_; }
  std::vector<double> cosine_breakpoints() const override { return cosines_; }

 private:
  std::vector<double> omegas_;
  std::vector<double> cosines_;
  std::vector<FresnelCoefficients> values_;  // row-major in (omega, cosine)
  bool lossless_;
};

/// Phase difference between incident and reflected wave, 2ωzc + δ.
double phase_difference(double omega, double z, double cos_theta, double delta);

/// −A² R_S α1 c sin Δ
double mode_force_s(double amplitude_sq, double r_s, double alpha1, double cos_theta, double delta_phase);
/// A² R_P α1 c (1 − 2c²) sin Δ
double mode_force_p(double amplitude_sq, double r_p, double alpha1, double cos_theta, double delta_phase);

/// c·[−R_S sin(2ωzc + δ_S) + R_P (1 − 2c²) sin(2ωzc + δ_P)]: the angular
/// integrand of the mode-summed force.
double angular_force_integrand(const FresnelModel& model, double omega, double z, double cos_theta);
/// [−R_S cos(2ωzc + δ_S) + R_P (1 − 2c²) cos(2ωzc + δ_P)]
double angular_potential_integrand(const FresnelModel& model, double omega, double z, double cos_theta);

struct InterfaceOptions {
  /// Frequency where the explicit integral stops; 0 selects 40·max(ω_p, 1/z).
  double omega_max = 0.0;
  numerics::QuadratureConfig quadrature{1e-11, 1e-300, 20000};
};

/// (1/π) ∫dω ω⁴ α1(ω) ∫₀¹ dc c[−R_S sin(2ωzc + δ_S) + R_P(1 − 2c²) sin(2ωzc + δ_P)].
/// Beyond omega_max the coefficients are held at their omega_max values and
/// the frequency integral is taken in its e^{−βω}, β → 0 sense.
double interface_force(const Sphere& s, const FresnelModel& mirror, double z,
                       const InterfaceOptions& options = {});

/// (1/2π) ∫dω ω³ α1(ω) ∫₀¹ dc [−R_S cos(2ωzc + δ_S) + R_P(1 − 2c²) cos(2ωzc + δ_P)].
double interface_potential(const Sphere& s, const FresnelModel& mirror, double z,
                           const InterfaceOptions& options = {});

/// Warnings for models outside the validated regime (absorbing walls,
/// spheres too large for the dipole treatment).
std::vector<std::string> interface_advisories(const Sphere& s, const FresnelModel& mirror);

}  // namespace casimir::interface
