#include "casimir/units.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::units {

namespace {

void require_same_dimension(const NaturalQuantity& a, const NaturalQuantity& b, const char* op) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError(std::string("cannot ") + op + " eV^" + std::to_string(a.dimension()) +
                         " and eV^" + std::to_string(b.dimension()));
  }
}

}  // namespace

NaturalQuantity NaturalQuantity::operator+(const NaturalQuantity& other) const {
  require_same_dimension(*this, other, "add");
  return {value_ + other.value_, dimension_};
}

NaturalQuantity NaturalQuantity::operator-(const NaturalQuantity& other) const {
  require_same_dimension(*this, other, "subtract");
  return {value_ - other.value_, dimension_};
}

bool NaturalQuantity::operator<(const NaturalQuantity& other) const {
  require_same_dimension(*this, other, "compare");
  return value_ < other.value_;
}

NaturalQuantity length_um_to_natural(double z_um, const PhysicalConstants& k) {
  if (!(z_um > 0.0)) {
    throw DomainError("length must be positive, got " + std::to_string(z_um) + " um");
  }
  return {z_um / k.hbar_c_ev_um, -1};
}

double length_natural_to_um(double z_natural, const PhysicalConstants& k) {
  return z_natural * k.hbar_c_ev_um;
}

double length_nm_to_natural(double nm, const PhysicalConstants& k) {
  return length_um_to_natural(nm * 1e-3, k).value();
}

// 1 eV² = (1 eV) / (1 eV⁻¹) = e [J] / (ħc [m]).
double force_natural_to_newtons(double f_ev2, const PhysicalConstants& k) {
  return f_ev2 * k.joule_per_ev / k.hbar_c_ev_m();
}

double force_newtons_to_natural(double f_newton, const PhysicalConstants& k) {
  return f_newton * k.hbar_c_ev_m() / k.joule_per_ev;
}

double energy_natural_to_joules(double e_ev, const PhysicalConstants& k) {
  return e_ev * k.joule_per_ev;
}

double energy_to_kelvin(double e_ev, const PhysicalConstants& k) {
  return e_ev / k.boltzmann_ev_per_k;
}

double weight_density_natural(double rho_g_cm3, const PhysicalConstants& k) {
  const double newton_per_m3 = rho_g_cm3 * 1000.0 * k.g_accel;
  const double metre_natural = 1.0 / k.hbar_c_ev_m();
  return force_newtons_to_natural(newton_per_m3, k) / std::pow(metre_natural, 3);
}

double to_inverse_metre_power(const NaturalQuantity& q, const PhysicalConstants& k) {
  return q.value() * std::pow(k.hbar_c_ev_m(), -q.dimension());
}

NaturalQuantity from_inverse_metre_power(double value, int dimension, const PhysicalConstants& k) {
  return {value * std::pow(k.hbar_c_ev_m(), dimension), dimension};
}

}  // namespace casimir::units
