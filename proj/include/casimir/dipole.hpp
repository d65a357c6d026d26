#pragma once

// Force on a small polarizable particle in prescribed fields, and the
// time-averaged radiation force of a single plane wave.

#include <array>
#include <complex>

namespace casimir::dipole {

using Vec3 = std::array<double, 3>;
using CVec3 = std::array<std::complex<double>, 3>;
/// grad[i][j] = ∂_j E^i.
using Tensor3 = std::array<Vec3, 3>;

struct FieldSample {
  Vec3 e0{};
  Tensor3 grad_e{};
  Vec3 b0{};
};

struct DipoleState {
  Vec3 p{};
  Vec3 p_dot{};
};

/// F^i = (2/3) p^j ∂_j E^i + (1/3) p_j ∂^i E^j + (2/3) (ṗ × B)^i
Vec3 dipole_force(const FieldSample& fields, const DipoleState& dipole);

/// Gradient of |E|² when E varies linearly around the particle:
/// ∂_i |E|² = 2 E^j ∂_i E^j.
Vec3 gradient_of_field_squared(const FieldSample& fields);

/// Linearly polarized wave E = A ε̂ cos(k·x − ωt), with ω = |k|.
class PlaneWave {
 public:
  /// Throws DomainError unless |k| > 0, |ε̂| = 1 and ε̂·k = 0 (both to 1e-12, relative).
  PlaneWave(double amplitude, Vec3 wavevector, Vec3 polarization);

  double amplitude() const { return amplitude_; }
  const Vec3& wavevector() const { return k_; }
  const Vec3& polarization() const { return pol_; }
  double frequency() const;

  /// Complex amplitudes at the origin (physical field is Re[… e^{−iωt}]).
  CVec3 electric_phasor() const;
  CVec3 magnetic_phasor() const;

 private:
  double amplitude_;
  Vec3 k_;
  Vec3 pol_;
};

/// (1/2) k A² α2.
Vec3 plane_wave_force(const PlaneWave& wave, std::complex<double> alpha);

/// (1/2) ω A² α2: the cycle-averaged Joule heating of the induced dipole.
double absorbed_power(const PlaneWave& wave, std::complex<double> alpha);

/// Cycle average of dipole_force for a harmonic field, computed from complex
/// amplitudes: ⟨F⟩ = Re[F(p, ∂E*, ṗ, B*)]/2 with p = αE and ṗ = −iωp.
/// For a plane wave the gradient of the phasor is i k_j E^i.
Vec3 cycle_averaged_plane_wave_force(const PlaneWave& wave, std::complex<double> alpha);

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

}  // namespace casimir::dipole
