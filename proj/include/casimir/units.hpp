#pragma once

// Natural units (ħ = c = 1). Every internal quantity is a power of eV:
// length eV⁻¹, energy eV, force eV², force density eV⁵. Conversions to
// laboratory units live here and are only used at I/O boundaries.

namespace casimir::units {

/// Constants used for every lab-unit conversion. CODATA 2018 exact or
/// recommended values:
///   hbar_c       197.3269804 MeV·fm            -> 0.1973269804 eV·μm
///   joule_per_ev elementary charge (exact)       1.602176634e-19 J/eV
///   kg_to_ev     c² / e                          5.6095886e35 eV/kg
///   g_accel      standard gravity (exact)        9.80665 m/s²
///   boltzmann    k_B / e                         8.617333262e-5 eV/K
///   speed_of_light (exact)                       299792458 m/s
struct PhysicalConstants {
  double hbar_c_ev_um = 0.1973269804;
  double joule_per_ev = 1.602176634e-19;
  double kg_to_ev = 5.6095886e35;
  double g_accel = 9.80665;
  double boltzmann_ev_per_k = 8.617333262e-5;
  double speed_of_light = 299792458.0;

  double hbar_c_ev_m() const { return hbar_c_ev_um * 1e-6; }
};

inline constexpr PhysicalConstants kCodata2018{};

/// A value carrying its energy dimension: the quantity is value · eV^dimension.
class NaturalQuantity {
 public:
  constexpr NaturalQuantity(double value, int dimension) : value_(value), dimension_(dimension) {}

  constexpr double value() const { return value_; }
  constexpr int dimension() const { return dimension_; }

  NaturalQuantity operator+(const NaturalQuantity& other) const;
  NaturalQuantity operator-(const NaturalQuantity& other) const;
  NaturalQuantity operator-() const { return {-value_, dimension_}; }
  NaturalQuantity operator*(const NaturalQuantity& other) const {
    return {value_ * other.value_, dimension_ + other.dimension_};
  }
  NaturalQuantity operator/(const NaturalQuantity& other) const {
    return {value_ / other.value_, dimension_ - other.dimension_};
  }
  NaturalQuantity operator*(double s) const { return {value_ * s, dimension_}; }
  bool operator<(const NaturalQuantity& other) const;

 private:
  double value_;
  int dimension_;
};

/// μm -> eV⁻¹. Throws DomainError for z ≤ 0.
NaturalQuantity length_um_to_natural(double z_um, const PhysicalConstants& k = kCodata2018);
double length_natural_to_um(double z_natural, const PhysicalConstants& k = kCodata2018);
double length_nm_to_natural(double nm, const PhysicalConstants& k = kCodata2018);

double force_natural_to_newtons(double f_ev2, const PhysicalConstants& k = kCodata2018);
double force_newtons_to_natural(double f_newton, const PhysicalConstants& k = kCodata2018);

double energy_natural_to_joules(double e_ev, const PhysicalConstants& k = kCodata2018);
double energy_to_kelvin(double e_ev, const PhysicalConstants& k = kCodata2018);

/// Weight density ρ·g for ρ in g/cm³, returned in eV⁵ (force per volume).
double weight_density_natural(double rho_g_cm3, const PhysicalConstants& k = kCodata2018);

/// Generic lab form of eV^d: expressed in metres^(−d) using ħc.
double to_inverse_metre_power(const NaturalQuantity& q, const PhysicalConstants& k = kCodata2018);
NaturalQuantity from_inverse_metre_power(double value, int dimension,
                                         const PhysicalConstants& k = kCodata2018);

}  // namespace casimir::units
