#pragma once

// Force and potential between a Drude sphere and a perfectly reflecting wall.
// The production force is split into a smooth imaginary-frequency part J and
// an oscillatory pole part P; an independent real-frequency evaluation with a
// convergence factor e^{−βω} is provided as a cross-check.

#include <optional>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir::mirror {

struct ForceBreakdown {
  double z = 0.0;
  double j = 0.0;
  double p = 0.0;
  double total = 0.0;
};

/// Separations below this multiple of 1/ω_p use the leading small-z series,
/// where J and P are both ∝ z⁻⁴ with opposite signs.
inline constexpr double kSmallSeparation = 1e-3;

/// Tolerances for the J integral. Absolute tolerance is effectively off:
/// J spans many decades across the z range of interest.
inline numerics::QuadratureConfig default_quadrature() { return {1e-12, 1e-300, 2000}; }

/// −(a³ω_p²/4πz⁴) ∫₀^∞ K(ξ)(4z³ξ³ + 6z²ξ² + 6zξ + 3) e^{−2zξ} dξ,
/// K(ξ) = (3ξ² + ω_p²)/((3ξ² + ω_p²)² − 9ξ²γ²).
double j_integral(const Sphere& s, double z,
                  const numerics::QuadratureConfig& cfg = default_quadrature());

/// J for γ = 0 written with sine and cosine integrals. Throws
/// ConfigurationError when the material is damped.
double j_integral_undamped_closed_form(const Sphere& s, double z);

/// Oscillatory contribution from the residue of α1 at Ω + iγ/2.
double pole_term(const Sphere& s, double z);

/// Large-z form of the pole term:
/// −(Ωω_p²a³/12z) e^{−γz} (2Ω sin 2Ωz + 3γ cos 2Ωz).
double pole_term_large_z(const Sphere& s, double z);

/// Amplitude of the large-z pole oscillation:
/// (Ωω_p²a³/12z) √(4Ω² + 9γ²) e^{−γz}.
double pole_envelope(const Sphere& s, double z);

/// Amplitude √(A² + B²) of the exact pole term written as
/// prefactor·(A sin 2Ωz + B cos 2Ωz).
double pole_term_amplitude(const Sphere& s, double z);

/// Casimir–Polder limit −3a³/(2πz⁵).
double casimir_polder_force(const Sphere& s, double z);
/// Casimir–Polder limit −3a³/(8πz⁴).
double casimir_polder_potential(const Sphere& s, double z);
/// Smallest z ≥ z_min beyond which the pole envelope stays below
/// `fraction`·|Casimir–Polder force|. Needs γ > 0.
double pole_negligible_separation(const Sphere& s, double fraction = 1e-6, double z_min = 0.0);
/// Leading small-z force a³ω_p²/(6πz³) (repulsive).
double small_separation_force(const Sphere& s, double z);

ForceBreakdown total_force(const Sphere& s, double z,
                           const numerics::QuadratureConfig& cfg = default_quadrature());

/// 3 sin 2ωz − 6zω cos 2ωz − 6z²ω² sin 2ωz + 4z³ω³ cos 2ωz
double force_bracket(double omega, double z);

struct OracleResult {
  double value = 0.0;
  double residual = 0.0;
};

/// −(1/4πz⁴) ∫₀^∞ α1(ω)·force_bracket(ω, z) dω along the real axis,
/// regulated with e^{−βω} and extrapolated to β = 0.
OracleResult total_force_oracle(const Sphere& s, double z,
                                const std::optional<numerics::RegulatorSchedule>& schedule = std::nullopt);

/// σ(ω) = (2ω²z² − 1) sin 2ωz + 2ωz cos 2ωz
double spectrum_sigma(double z, double omega);

/// lim_{β→0} ∫₀^∞ σ(ω) e^{−βω} dω (analytically −3/(2z)).
OracleResult regulated_spectrum_integral(double z,
                                         const std::optional<numerics::RegulatorSchedule>& schedule = std::nullopt);

/// ∫₀^ω_k σ(ω) e^{−βω} dω at each (ascending) ω_k.
std::vector<double> cumulative_spectrum(double z, double beta, const std::vector<double>& omegas);

/// Interaction energy with V(∞) = 0, split the same way as the force:
/// an imaginary-frequency integral plus a closed-form pole part.
struct PotentialBreakdown {
  double z = 0.0;
  double j = 0.0;
  double p = 0.0;
  double total = 0.0;
};

PotentialBreakdown potential_breakdown(const Sphere& s, double z,
                                       const numerics::QuadratureConfig& cfg = default_quadrature());
double potential(const Sphere& s, double z, const numerics::QuadratureConfig& cfg = default_quadrature());

/// V(z) = ∫_z^∞ F dz′ by direct quadrature of total_force. Needs γ > 0 so the
/// oscillations die out; throws ConfigurationError otherwise.
double potential_by_force_integration(const Sphere& s, double z);

}  // namespace casimir::mirror
