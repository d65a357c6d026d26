#include "casimir/equilibria.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/toms748_solve.hpp>

#include "casimir/errors.hpp"
#include "casimir/mirror_force.hpp"
#include "casimir/numerics.hpp"
#include "casimir/parallel.hpp"

namespace casimir::equilibria {

namespace {

constexpr double kPi = std::numbers::pi;

// Root of a decreasing function g on [lo, ∞) given g(lo) ≥ 0; doubles the
// upper end until the sign changes.
double decreasing_root(const std::function<double(double)>& g, double lo) {
  double hi = 2.0 * lo;
  double g_hi = g(hi);
  int guard = 0;
  while (g_hi > 0.0) {
    lo = hi;
    hi *= 2.0;
    g_hi = g(hi);
    if (++guard > 200) throw ConvergenceError("levitation height search did not bracket a root", hi, 0.0);
  }
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(g, lo, hi, g(lo), g_hi,
                                                   boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

std::vector<EquilibriumPoint> find_equilibria(const Sphere& s, double z_lo, double z_hi,
                                              const SearchOptions& options) {
  if (!(z_lo > 0.0) || !(z_hi > z_lo)) throw DomainError("equilibria: need 0 < z_lo < z_hi");
  const double omega = resonance(s.material()).omega;
  const double range = z_hi - z_lo;
  const int fine_enough = static_cast<int>(std::ceil(range * 4.0 * omega / kPi)) + 1;
  int grid_n = options.grid_n;
  if (grid_n == 0) grid_n = std::max(2 * fine_enough - 1, 16);
  if (grid_n < 2) throw ConfigurationError("equilibria: grid needs at least two points");
  if (range / (grid_n - 1) > kPi / (4.0 * omega)) {
    throw ConfigurationError("equilibria: grid too coarse to resolve the force oscillation; use grid_n >= " +
                             std::to_string(fine_enough));
  }

  const double load = options.load;
  auto f = [&](double z) { return mirror::total_force(s, z).total - load; };
  std::vector<double> grid(grid_n);
  for (int i = 0; i < grid_n; ++i) grid[i] = z_lo + range * i / (grid_n - 1);
  grid.back() = z_hi;
  const auto values = parallel_map(grid.size(), [&](std::size_t i) { return f(grid[i]); }, options.threads);
  const auto roots = numerics::refine_sign_changes(f, grid, values);

  std::vector<EquilibriumPoint> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    EquilibriumPoint p;
    p.z = r.x;
    p.z_um = units::length_natural_to_um(r.x);
    p.stable = r.slope_sign < 0;
    out.push_back(p);
  }
  const auto energies = parallel_map(
      out.size(), [&](std::size_t i) { return mirror::potential(s, out[i].z) + load * out[i].z; },
      options.threads);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].energy = energies[i];

  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& p = out[i];
    if (!p.stable) continue;
    if (i > 0 && !out[i - 1].stable) p.barrier_toward_wall = out[i - 1].energy - p.energy;
    if (i + 1 < out.size() && !out[i + 1].stable) p.barrier_away_from_wall = out[i + 1].energy - p.energy;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[j].stable) {
        p.step_to_next_stable = out[j].energy - p.energy;
        break;
      }
    }
    p.well_depth = p.barrier_toward_wall ? p.barrier_toward_wall : p.barrier_away_from_wall;
    if (p.well_depth && *p.well_depth >= 0.0) p.temperature_equivalent = well_temperature(*p.well_depth);
  }
  return out;
}

std::vector<EquilibriumPoint> stable_points(const std::vector<EquilibriumPoint>& all) {
  std::vector<EquilibriumPoint> out;
  for (const auto& p : all) {
    if (p.stable) out.push_back(p);
  }
  return out;
}

double gravity_force(const Sphere& s, const units::PhysicalConstants& k) {
  const auto& rho = s.material().density();
  if (!rho) throw ConfigurationError("gravity force needs the material density");
  return 4.0 / 3.0 * kPi * s.volume_factor() * units::weight_density_natural(*rho, k);
}

double levitation_ratio(const Sphere& s, double z, const units::PhysicalConstants& k) {
  const auto& rho = s.material().density();
  if (!rho || !(*rho > 0.0)) throw ConfigurationError("levitation ratio needs a positive density");
  // Both the envelope and the weight carry a³; use a unit sphere so the ratio
  // is exactly radius independent.
  const Sphere unit(1.0, s.material());
  return mirror::pole_envelope(unit, z) / gravity_force(unit, k);
}

std::vector<std::string> levitation_advisories(const DrudeMaterial& m) {
  std::vector<std::string> out;
  if (m.damping() > 0.1 * m.plasma_frequency()) {
    out.push_back("damping exceeds 0.1 plasma frequency; the weak-damping levitation ratio is unreliable");
  }
  return out;
}

std::optional<double> max_levitation_height(const Sphere& s, const units::PhysicalConstants& k) {
  const double z0 = 2.0 / resonance(s.material()).omega;
  auto g = [&](double z) { return std::log(levitation_ratio(s, z, k)); };
  if (g(z0) < 0.0) return std::nullopt;
  return decreasing_root(g, z0);
}

std::optional<double> max_levitation_height_rounded_um(const DrudeMaterial& m) {
  const auto& rho = m.density();
  if (!rho || !(*rho > 0.0)) throw ConfigurationError("levitation height needs a positive density");
  const double wp = m.plasma_frequency();
  auto g = [&](double z_um) { return std::log(27.0 * std::pow(wp, 4) / (z_um * *rho)) - 5.0 * m.damping() * z_um; };
  const double z0 = units::length_natural_to_um(2.0 / resonance(m).omega);
  if (g(z0) < 0.0) return std::nullopt;
  return decreasing_root(g, z0);
}

LevitationReport levitation_report(const std::string& name, const DrudeMaterial& m, double radius_nm,
                                   int periods_below_zc, unsigned threads, const units::PhysicalConstants& k) {
  const auto& rho = m.density();
  if (!rho || !(*rho > 0.0)) throw ConfigurationError("levitation report for " + name + " needs a positive density");
  LevitationReport r;
  r.material = name;
  r.density = *rho;
  r.plasma_frequency = m.plasma_frequency();
  r.damping = m.damping();
  const double omega = resonance(m).omega;
  r.spacing_um = units::length_natural_to_um(kPi / omega, k);
  r.coefficient = k.hbar_c_ev_um / (24.0 * kPi * units::weight_density_natural(1.0, k));
  r.exponent = 1.0 / k.hbar_c_ev_um;
  r.advisories = levitation_advisories(m);

  const Sphere sphere = Sphere::from_nm(radius_nm, m);
  if (sphere.outside_dipole_regime()) {
    r.advisories.push_back("sphere radius times plasma frequency >= 1; the dipole approximation is not justified");
  }
  const auto zc = max_levitation_height(sphere, k);
  r.z_c_rounded_um = max_levitation_height_rounded_um(m);
  if (zc) {
    r.z_c_um = units::length_natural_to_um(*zc, k);
    if (periods_below_zc > 0) {
      const double lo = std::max(*zc - periods_below_zc * kPi / omega, 2.0 / omega);
      SearchOptions opt;
      opt.threads = threads;
      opt.load = gravity_force(sphere, k);
      for (const auto& p : find_equilibria(sphere, lo, *zc, opt)) {
        if (!p.stable) continue;
        r.points_near_zc.push_back(p);
        r.ratio_at_points.push_back(levitation_ratio(sphere, p.z, k));
      }
    }
  }
  return r;
}

double well_temperature(double depth_ev, const units::PhysicalConstants& k) {
  if (!(depth_ev >= 0.0)) throw DomainError("well depth must be non-negative");
  return units::energy_to_kelvin(depth_ev, k);
}

}  // namespace casimir::equilibria
