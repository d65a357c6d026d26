#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

/// Drude dielectric ε(ω) = 1 − ω_p²/(ω(ω + iγ)), with optional mass density.
/// Construction enforces ω_p > 0, γ ≥ 0 and the underdamped condition
/// 12ω_p² − 9γ² > 0, so the polarizability pole pair stays off the real axis
/// (or on it at Ω when γ = 0).
class DrudeMaterial {
 public:
  static DrudeMaterial make(double plasma_frequency_ev, double damping_ev,
                            std::optional<double> density_g_cm3 = std::nullopt);

  double plasma_frequency() const { return plasma_frequency_; }
  double damping() const { return damping_; }
  const std::optional<double>& density() const { return density_; }

  DrudeMaterial with_damping(double damping_ev) const;

 private:
  DrudeMaterial(double wp, double gamma, std::optional<double> rho)
      : plasma_frequency_(wp), damping_(gamma), density_(rho) {}

  double plasma_frequency_;
  double damping_;
  std::optional<double> density_;
};

/// Sphere of radius a (eV⁻¹). Static polarizability α0 = a³.
class Sphere {
 public:
  Sphere(double radius_natural, DrudeMaterial material);
  static Sphere from_nm(double radius_nm, DrudeMaterial material);

  double radius() const { return radius_; }
  double volume_factor() const { return radius_ * radius_ * radius_; }
  const DrudeMaterial& material() const { return material_; }

  /// True when a·ω_p ≥ 1, where the electric-dipole treatment is no longer justified.
  bool outside_dipole_regime() const { return radius_ * material_.plasma_frequency() >= 1.0; }

 private:
  double radius_;
  DrudeMaterial material_;
};

/// Pole of α1 in the first quadrant, at Ω + iγ/2.
struct ResonancePole {
  double omega;       // Ω
  double half_width;  // γ/2
};

std::complex<double> epsilon(const DrudeMaterial& m, double omega);
std::complex<double> polarizability(const Sphere& s, double omega);

/// Real part of the Drude-sphere polarizability, valid for ω ≥ 0 and
/// continuous at ω = 0 (where it equals a³).
double alpha1_real(const Sphere& s, double omega);

/// α1 continued to complex frequency (rational in ω²).
std::complex<double> alpha1_analytic(const Sphere& s, std::complex<double> omega);

ResonancePole resonance(const DrudeMaterial& m);

struct CatalogEntry {
  std::string name;
  DrudeMaterial material;
  std::string note;
  std::optional<std::string> advisory;
};

class MaterialCatalog {
 public:
  /// Parses the JSON catalog format (catalog_version + materials[]).
  static MaterialCatalog parse(std::string_view json_text);
  static MaterialCatalog load_file(const std::string& path);
  /// The catalog compiled into the library from data/materials.json.
  static const MaterialCatalog& builtin();

  int version() const { return version_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  int version_ = 0;
  std::vector<CatalogEntry> entries_;
};

/// Looks a preset up in the built-in catalog. Throws LookupError listing
/// the available names.
DrudeMaterial preset(std::string_view name);

}  // namespace casimir
