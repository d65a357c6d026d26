#pragma once

// Equilibrium points of the sphere–mirror force, well depths, and the
// gravitational levitation analysis.

#include <optional>
#include <string>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/units.hpp"

namespace casimir::equilibria {

struct EquilibriumPoint {
  double z = 0.0;     // eV⁻¹
  double z_um = 0.0;  // μm
  bool stable = false;
  /// U(z) = V(z) + load·z at the point, eV.
  double energy = 0.0;
  /// U(barrier) − U(point) for the adjacent unstable points toward and away
  /// from the wall, when those lie inside the searched range (stable points only).
  std::optional<double> barrier_toward_wall;
  std::optional<double> barrier_away_from_wall;
  /// U(next stable point) − U(this point), toward larger z.
  std::optional<double> step_to_next_stable;
  /// Barrier toward the wall when known, otherwise the barrier away from it.
  std::optional<double> well_depth;
  std::optional<double> temperature_equivalent;  // K
};

struct SearchOptions {
  int grid_n = 0;  // 0 selects 8 points per oscillation period
  unsigned threads = 1;
  /// Constant force subtracted from F (e.g. the sphere's weight), eV².
  double load = 0.0;
};

/// All zeros of F(z) − load on [z_lo, z_hi], in increasing z. Throws
/// ConfigurationError when the grid spacing exceeds π/(4Ω), naming a grid
/// size that would be fine enough.
std::vector<EquilibriumPoint> find_equilibria(const Sphere& s, double z_lo, double z_hi,
                                              const SearchOptions& options = {});

std::vector<EquilibriumPoint> stable_points(const std::vector<EquilibriumPoint>& all);

/// Weight (4/3)πa³ρg in eV². Throws ConfigurationError when the material has no density.
double gravity_force(const Sphere& s, const units::PhysicalConstants& k = units::kCodata2018);

/// Peak oscillatory force over the weight, using the large-z pole amplitude.
/// Independent of the sphere radius.
double levitation_ratio(const Sphere& s, double z, const units::PhysicalConstants& k = units::kCodata2018);

/// Warnings when the weak-damping assumptions behind the ratio are stretched.
std::vector<std::string> levitation_advisories(const DrudeMaterial& m);

/// Largest z (eV⁻¹) with levitation_ratio ≥ 1, searched above 2/Ω.
/// Empty when the ratio is already below one there.
std::optional<double> max_levitation_height(const Sphere& s,
                                            const units::PhysicalConstants& k = units::kCodata2018);

/// Same root for the rounded ratio 27 (ω_p/eV)⁴ (μm/z) (g cm⁻³/ρ) e^{−5 (γ/eV)(z/μm)},
/// in μm, searched above 2/Ω. Used to judge how much the rounding matters.
std::optional<double> max_levitation_height_rounded_um(const DrudeMaterial& m);

struct LevitationReport {
  std::string material;
  double density = 0.0;
  double plasma_frequency = 0.0;
  double damping = 0.0;
  double spacing_um = 0.0;  // π/Ω
  std::optional<double> z_c_um;
  std::optional<double> z_c_rounded_um;
  /// The ratio written as coefficient·(ω_p/eV)⁴·(μm/z)·(g cm⁻³/ρ)·e^{−exponent·(γ/eV)(z/μm)}
  /// in the weak-damping limit.
  double coefficient = 0.0;
  double exponent = 0.0;
  /// Stable levitation points (zeros of F − weight) within a few periods
  /// below z_c, with their ratio values.
  std::vector<EquilibriumPoint> points_near_zc;
  std::vector<double> ratio_at_points;
  std::vector<std::string> advisories;
};

/// `radius_nm` only affects the equilibria listed near z_c.
LevitationReport levitation_report(const std::string& name, const DrudeMaterial& m, double radius_nm = 50.0,
                                   int periods_below_zc = 4, unsigned threads = 1,
                                   const units::PhysicalConstants& k = units::kCodata2018);

/// depth / k_B in kelvin. Throws DomainError for negative depth.
double well_temperature(double depth_ev, const units::PhysicalConstants& k = units::kCodata2018);

}  // namespace casimir::equilibria
